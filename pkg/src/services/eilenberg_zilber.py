"""
Contração de Eilenberg–Zilber entre C(X)⊗C(Y) e C(X×Y): Alexander–Whitney,
shuffle e a homotopia "oposta".
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from src.models.escalares import CoefficientRing
from src.models.koszul import koszul_sign
from src.models.mapa_graduado import Complex, GradedMap, produto_tensorial
from src.models.simplicial import NormalFormSimplex, SimplexRef
from src.models.vetor import Vector
from src.services.cadeias import como_cadeia, normalized_chains
from src.services.produto_simplicial import ProdutoSimplicial
from src.validators.exceptions import GrauIncompativelError


def _sinal_embaralhamento(primeiro: Sequence[int], segundo: Sequence[int]) -> int:
    """Sinal da permutação (primeiro, segundo) de {0..n}."""
    ordem = list(primeiro) + list(segundo)
    return koszul_sign(ordem, [1] * len(ordem))


class EilenbergZilber:
    """
    Os três mapas da contração para um produto X×Y, com os complexos
    envolvidos e cache por simplexo.

    Attributes:
        XY: Produto simplicial.
        anel: Anel de coeficientes.
        cadeias_xy: C(X×Y).
        cadeias_tensor: C(X)⊗C(Y).
    """

    def __init__(self, XY: ProdutoSimplicial, anel: CoefficientRing):
        self.XY = XY
        self.anel = anel
        self.cadeias_x = normalized_chains(XY.fator_x, anel)
        self.cadeias_y = normalized_chains(XY.fator_y, anel)
        self.cadeias_xy = normalized_chains(XY, anel)
        self.cadeias_tensor: Complex = produto_tensorial(self.cadeias_x, self.cadeias_y)
        self._aw: Dict[SimplexRef, Vector] = {}
        self._h: Dict[SimplexRef, Vector] = {}

    # Alexander–Whitney

    def aw_chave(self, z: SimplexRef) -> Vector:
        """AW(u, v) = Σᵢ u|[0..i] ⊗ v|[i..n], termos degenerados descartados."""
        if z not in self._aw:
            u, v = z.id
            X, Y = self.XY.fator_x, self.XY.fator_y
            termos = []
            for i in range(z.dim + 1):
                frente = X.frente(u, i)
                verso = Y.verso(v, i)
                if not frente.eh_degenerado and not verso.eh_degenerado:
                    termos.append(((frente.base, verso.base), self.anel.um))
            self._aw[z] = Vector.somar(self.anel, termos)
        return self._aw[z]

    def aw_map(self) -> GradedMap:
        return GradedMap(0, self.aw_chave, self.cadeias_xy, self.cadeias_tensor, "AW")

    # Shuffle

    def shuffle_chave(self, par: Tuple[SimplexRef, SimplexRef]) -> Vector:
        """sh(x⊗y) = Σ_{(μ,ν)} sgn(μ,ν) (s_ν x, s_μ y), μ com p elementos."""
        x, y = par
        p, q = x.dim, y.dim
        termos = []
        for mu in combinations(range(p + q), p):
            nu = [j for j in range(p + q) if j not in mu]
            u = NormalFormSimplex.nao_degenerado(x).degenerar_palavra(nu)
            v = NormalFormSimplex.nao_degenerado(y).degenerar_palavra(mu)
            z = self.XY.par(u, v)
            if not z.eh_degenerado:
                termos.append((z.base, self.anel(_sinal_embaralhamento(mu, nu))))
        return Vector.somar(self.anel, termos)

    def shuffle_map(self) -> GradedMap:
        return GradedMap(0, self.shuffle_chave, self.cadeias_tensor, self.cadeias_xy, "sh")

    # Homotopia

    def homotopia_chave(self, z: SimplexRef) -> Vector:
        """
        h(x,y) = Σ_{0≤p+q<n, (α,β)⊢(p,q+1)} (−1)^{p+q+(α,β)}
        (s_β ∂_{p+1}^{p+q} x, s_{p+q+1} s_α ∂_0^{p−1} y).
        """
        if z not in self._h:
            u, v = z.id
            n = z.dim
            X, Y = self.XY.fator_x, self.XY.fator_y
            total = Vector.zero(self.anel)
            for soma in range(n):
                for p in range(soma + 1):
                    q = soma - p
                    x_face = X.restringir(u, list(range(p + 1)) + list(range(p + q + 1, n + 1)))
                    y_face = Y.restringir(v, range(p, n + 1))
                    for alfa in combinations(range(p + q + 1), p):
                        beta = [j for j in range(p + q + 1) if j not in alfa]
                        sinal = _sinal_embaralhamento(alfa, beta) * (-1 if soma % 2 else 1)
                        total = total + self.h_alpha_beta(alfa, beta, x_face, y_face).escalar(sinal)
            self._h[z] = total
        return self._h[z]

    def h_alpha_beta(
        self,
        alfa: Sequence[int],
        beta: Sequence[int],
        x: NormalFormSimplex,
        y: NormalFormSimplex,
    ) -> Vector:
        """
        (x, y) ↦ (s_β x, s_{p+q+1} s_α y) como cadeia de C(X×Y).

        Raises:
            GrauIncompativelError: Se (α, β) não particionar {0..p+q}, se
                as dimensões não forem m−q e m−p ou se p + q ≥ m.
        """
        p, q = len(alfa), len(beta) - 1
        if sorted(list(alfa) + list(beta)) != list(range(p + q + 1)):
            raise GrauIncompativelError(f"({list(alfa)}, {list(beta)}) não é um ({p},{q + 1})-shuffle")
        if x.dim + q != y.dim + p:
            raise GrauIncompativelError(
                f"Dimensões {x.dim}, {y.dim} incompatíveis com ({p},{q + 1})"
            )
        m = y.dim + p
        if p + q >= m:
            raise GrauIncompativelError(f"h_αβ exige p + q < m, recebeu p = {p}, q = {q}, m = {m}")
        u = x.degenerar_palavra(beta)
        v = y.degenerar_palavra(alfa).degenerar(p + q + 1)
        return como_cadeia(self.anel, self.XY.par(u, v))

    def homotopy_map(self) -> GradedMap:
        return GradedMap(1, self.homotopia_chave, self.cadeias_xy, self.cadeias_xy, "h")

    # Diagonais

    def diagonal_produto(self, z: SimplexRef) -> Vector:
        """Δ_D(z) = Σᵢ z|[0..i] ⊗ z|[i..n] em C(X×Y)."""
        nf = NormalFormSimplex.nao_degenerado(z)
        termos = []
        for i in range(z.dim + 1):
            frente = self.XY.frente(nf, i)
            verso = self.XY.verso(nf, i)
            if not frente.eh_degenerado and not verso.eh_degenerado:
                termos.append(((frente.base, verso.base), self.anel.um))
        return Vector.somar(self.anel, termos)

    def diagonal_tensor(self, par: Tuple[SimplexRef, SimplexRef]) -> Vector:
        """Δ(x⊗y) = Σ ± (x₍₁₎⊗y₍₁₎)⊗(x₍₂₎⊗y₍₂₎), sinal (−1)^{|x₍₂₎||y₍₁₎|}."""
        x, y = par
        termos = []
        for i in range(x.dim + 1):
            x1 = self.XY.fator_x.frente(NormalFormSimplex.nao_degenerado(x), i)
            x2 = self.XY.fator_x.verso(NormalFormSimplex.nao_degenerado(x), i)
            if x1.eh_degenerado or x2.eh_degenerado:
                continue
            for j in range(y.dim + 1):
                y1 = self.XY.fator_y.frente(NormalFormSimplex.nao_degenerado(y), j)
                y2 = self.XY.fator_y.verso(NormalFormSimplex.nao_degenerado(y), j)
                if y1.eh_degenerado or y2.eh_degenerado:
                    continue
                sinal = self.anel.sinal(x2.dim * y1.dim)
                termos.append((((x1.base, y1.base), (x2.base, y2.base)), sinal))
        return Vector.somar(self.anel, termos)

    # Identidades

    def violacoes_contracao(self) -> List[str]:
        """
        Confere AW∘sh = 1, d(h) = sh∘AW − 1, h∘sh = 0, AW∘h = 0 e h∘h = 0
        em todos os simplexos não degenerados; retorna as falhas.
        """
        falhas = []
        anel = self.anel
        d_xy = self.cadeias_xy.diferencial_chave
        d_t = self.cadeias_tensor.diferencial_chave
        for n in self.cadeias_tensor.graus:
            for par in self.cadeias_tensor.base(n):
                sh = self.shuffle_chave(par)
                if sh.mapear(self.aw_chave) != Vector.basis(anel, par):
                    falhas.append(f"AW∘sh ≠ 1 em {par!r}")
                if sh.mapear(self.homotopia_chave):
                    falhas.append(f"h∘sh ≠ 0 em {par!r}")
                if sh.mapear(d_xy) != d_t(par).mapear(self.shuffle_chave):
                    falhas.append(f"sh não é mapa de cadeias em {par!r}")
        for z in self.XY.todos():
            hz = self.homotopia_chave(z)
            # d(h) = d h + h d, pois h tem grau ímpar
            dh = hz.mapear(d_xy) + d_xy(z).mapear(self.homotopia_chave)
            esperado = self.aw_chave(z).mapear(self.shuffle_chave) - Vector.basis(anel, z)
            if dh != esperado:
                falhas.append(f"d(h) ≠ sh∘AW − 1 em {z!r}")
            if hz.mapear(self.aw_chave):
                falhas.append(f"AW∘h ≠ 0 em {z!r}")
            if hz.mapear(self.homotopia_chave):
                falhas.append(f"h∘h ≠ 0 em {z!r}")
            if d_xy(z).mapear(self.aw_chave) != self.aw_chave(z).mapear(d_t):
                falhas.append(f"AW não é mapa de cadeias em {z!r}")
        return falhas
