"""
Transferência de Gugenheim–Munkholm para a contração de
Eilenberg–Zilber, as estruturas shc Φ^GM em cocadeias e a comparação
com a família Ψ^hgc dada por cortes em intervalos.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.models.escalares import CoefficientRing
from src.models.mapa_graduado import Complex, GradedMap
from src.models.relatorio import ResultadoVerificacao
from src.models.simplicial import FiniteSimplicialSet, NormalFormSimplex, SimplexRef
from src.models.vetor import Vector, grau
from src.services.cadeias import Cocadeia, parear
from src.services.cortes_intervalo import psi_hgc
from src.services.eilenberg_zilber import EilenbergZilber
from src.services.produto_simplicial import ProdutoSimplicial, product
from src.services.verificacao_ainf import diferencial_tuplas, registrar_resultado
from src.validators.exceptions import ContracaoInvalidaError, GrauIncompativelError


Par = Tuple[SimplexRef, SimplexRef]


class Contraction:
    """
    Contração (f, g, h) de C sobre D: f: C → D, g: D → C e h: D → D de
    grau +1 em complexos de cadeias, com g f = 1, d(h) = f g − 1 e
    h f = 0, g h = 0, h h = 0.

    As cinco identidades são conferidas na construção.

    Attributes:
        C: Complexo menor.
        D: Complexo maior.

    Raises:
        ContracaoInvalidaError: Se alguma identidade falhar.
    """

    def __init__(self, C: Complex, D: Complex, f: GradedMap, g: GradedMap, h: GradedMap):
        self.C = C
        self.D = D
        self.f = f
        self.g = g
        self.h = h
        falhas = self.violacoes()
        if falhas:
            raise ContracaoInvalidaError(f"Contração inválida: {falhas[0]} (+{len(falhas) - 1})")

    def violacoes(self) -> List[str]:
        falhas = []
        anel = self.C.anel
        for n in self.C.graus:
            for c in self.C.base(n):
                fc = self.f.acao(c)
                if self.g(fc) != Vector.basis(anel, c):
                    falhas.append(f"g∘f ≠ 1 em {c!r}")
                if self.h(fc):
                    falhas.append(f"h∘f ≠ 0 em {c!r}")
        for n in self.D.graus:
            for z in self.D.base(n):
                hz = self.h.acao(z)
                dh = self.D.diferencial_vetor(hz) + self.h(self.D.diferencial_chave(z))
                esperado = self.f(self.g.acao(z)) - Vector.basis(anel, z)
                if dh != esperado:
                    falhas.append(f"d(h) ≠ f∘g − 1 em {z!r}")
                if self.g(hz):
                    falhas.append(f"g∘h ≠ 0 em {z!r}")
                if self.h(hz):
                    falhas.append(f"h∘h ≠ 0 em {z!r}")
        return falhas


def contracao_ez(ez: EilenbergZilber) -> Contraction:
    """(sh, AW, h) como contração de C(X)⊗C(Y) sobre C(X×Y)."""
    return Contraction(ez.cadeias_tensor, ez.cadeias_xy, ez.shuffle_map(), ez.aw_map(), ez.homotopy_map())


def _concatenar(anel: CoefficientRing, x: Vector, y: Vector, sinal_por_grau: int) -> Vector:
    """Σ ± (chaves de x) + (chaves de y), com (−1)^{sinal_por_grau·|x|}."""
    total: Dict[Tuple, object] = {}
    for k1, c1 in x.items():
        s = anel.sinal(sinal_por_grau * grau(k1))
        for k2, c2 in y.items():
            chave = k1 + k2
            total[chave] = total.get(chave, anel.zero) + s * c1 * c2
    return Vector(anel, total)


class TransferenciaGM:
    """
    Família Gₙ: C(X×Y) → (C(X)⊗C(Y))^{⊗n} de Gugenheim–Munkholm:

        G₁ = AW,  Gₙ = −Σ_{l=1}^{n−1} (−1)^{n−l} (G_l⊗G_{n−l})∘Δ∘h.

    Os valores são vetores com chaves-tupla de n pares (x, y).

    Example:
        >>> gm = TransferenciaGM(EilenbergZilber(product(X, Y), anel))
        >>> gm.G(2, z)
    """

    def __init__(self, ez: EilenbergZilber, verificar: bool = True):
        self.ez = ez
        self.anel = ez.anel
        self.XY = ez.XY
        if verificar:
            contracao_ez(ez)
        self._cache: Dict[Tuple[int, SimplexRef], Vector] = {}

    def G(self, n: int, z: SimplexRef) -> Vector:
        """
        Gₙ(z), zero quando dim z < n − 1.

        Raises:
            GrauIncompativelError: Se n < 1.
        """
        if n < 1:
            raise GrauIncompativelError(f"G_{n} não está definido")
        if n == 1:
            return Vector(self.anel, {(par,): c for par, c in self.ez.aw_chave(z).items()})
        if z.dim < n - 1:
            return Vector.zero(self.anel)
        chave = (n, z)
        if chave not in self._cache:
            anel = self.anel
            total = Vector.zero(anel)
            diagonal = self.ez.homotopia_chave(z).mapear(self.ez.diagonal_produto)
            for l in range(1, n):
                parcela = self.tensor_G(l, n - l, diagonal)
                total = total + parcela.escalar(anel.sinal(n - l))
            self._cache[chave] = -total
        return self._cache[chave]

    def G_vetor(self, n: int, v: Vector) -> Vector:
        return v.mapear(lambda z: self.G(n, z))

    def tensor_G(self, k: int, l: int, v: Vector) -> Vector:
        """(G_k⊗G_l) em chaves (u, w), com (−1)^{(l−1)|u|}."""
        total = Vector.zero(self.anel)
        for (u, w), c in v.items():
            total = total + _concatenar(self.anel, self.G(k, u), self.G(l, w), 0).escalar(
                c * self.anel.sinal((l - 1) * u.dim)
            )
        return total

    def _diagonal_na_posicao(self, chaves: Tuple[Par, ...], i: int) -> Vector:
        """(1^{⊗i}⊗Δ⊗1^{⊗…}) em uma chave-tupla de pares."""
        return Vector(self.anel, {
            chaves[:i] + partes + chaves[i + 1:]: c
            for partes, c in self.ez.diagonal_tensor(chaves[i]).items()
        })

    def violacoes_coalgebra(self, n: int, simplexos: Iterable[SimplexRef]) -> List[Tuple[SimplexRef, Vector]]:
        """
        d(Gₙ) = Σ_{i=1}^{n−1} (−1)ⁱ (G_i⊗G_{n−i})Δ + Σ_{i=0}^{n−2} (−1)ⁱ (1^{⊗i}⊗Δ⊗1^{⊗(n−i−2)})G_{n−1},
        com d(Gₙ) = d Gₙ − (−1)^{n−1} Gₙ d.
        """
        anel = self.anel
        d_xy = self.ez.cadeias_xy.diferencial_chave
        d_t = self.ez.cadeias_tensor.diferencial_chave
        falhas = []
        for z in simplexos:
            Gz = self.G(n, z)
            lado = Gz.mapear(lambda k: diferencial_tuplas(d_t, anel, k)) - self.G_vetor(
                n, d_xy(z)
            ).escalar(anel.sinal(n - 1))
            esperado = Vector.zero(anel)
            diagonal = self.ez.diagonal_produto(z)
            for i in range(1, n):
                esperado = esperado + self.tensor_G(i, n - i, diagonal).escalar(anel.sinal(i))
            anterior = self.G(n - 1, z)
            for i in range(n - 1):
                esperado = esperado + anterior.mapear(
                    lambda k: self._diagonal_na_posicao(k, i)
                ).escalar(anel.sinal(i))
            if lado != esperado:
                falhas.append((z, lado - esperado))
        return falhas

    def violacoes_secao(self, n: int) -> List[Tuple[Par, Vector]]:
        """G₁∘sh = 1 e Gₙ∘sh = 0 para n ≥ 2 em toda a base de C(X)⊗C(Y)."""
        anel = self.anel
        falhas = []
        tensor_c = self.ez.cadeias_tensor
        for g in tensor_c.graus:
            for par in tensor_c.base(g):
                valor = self.G_vetor(n, self.ez.shuffle_chave(par))
                esperado = Vector.basis(anel, (par,)) if n == 1 else Vector.zero(anel)
                if valor != esperado:
                    falhas.append((par, valor - esperado))
        return falhas


def verify_ainf_coalgebra_morphism(
    gm: TransferenciaGM, n_max: int, fixture: str = ""
) -> ResultadoVerificacao:
    """Identidade de A∞-morfismo de coálgebras para n ≤ n_max em todos os simplexos."""
    resultado = ResultadoVerificacao(f"A∞-coálgebra G (n ≤ {n_max})", fixture)
    simplexos = gm.XY.todos()
    for n in range(2, n_max + 1):
        resultado.contar(len(simplexos))
        for z, diferenca in gm.violacoes_coalgebra(n, simplexos):
            resultado.registrar((n, z), diferenca)
    return registrar_resultado(resultado)


def verify_secao(gm: TransferenciaGM, n_max: int, fixture: str = "") -> ResultadoVerificacao:
    """f∘G = 1 componente a componente."""
    resultado = ResultadoVerificacao(f"f∘G = 1 (n ≤ {n_max})", fixture)
    for n in range(1, n_max + 1):
        resultado.contar()
        for par, diferenca in gm.violacoes_secao(n):
            resultado.registrar((n, par), diferenca)
    return registrar_resultado(resultado)


# Ψ^hgc projetado

def _projetar(XY: ProdutoSimplicial, anel: CoefficientRing, v: Vector) -> Vector:
    """(p_X⊗p_Y)^{⊗n} em chaves (a₁, b₁, …, aₙ, bₙ) de simplexos de X×Y."""
    termos = []
    for chave, c in v.items():
        fatores = []
        for posicao, s in enumerate(chave):
            u, w = XY.projecoes(NormalFormSimplex.nao_degenerado(s))
            fator = u if posicao % 2 == 0 else w
            if fator.eh_degenerado:
                break
            fatores.append(fator.base)
        else:
            pares = tuple((fatores[t], fatores[t + 1]) for t in range(0, len(fatores), 2))
            termos.append((pares, c))
    return Vector.somar(anel, termos)


def G_til(XY: ProdutoSimplicial, n: int, z: SimplexRef, anel: CoefficientRing) -> Vector:
    """G̃ₙ = (p_X⊗p_Y)^{⊗n} Ψ^hgc_n."""
    return _projetar(XY, anel, psi_hgc(XY, n, z, anel))


def compare_shc(gm: TransferenciaGM, n_max: int, fixture: str = "") -> ResultadoVerificacao:
    """
    Confere Gₙ = (p_X⊗p_Y)^{⊗n}∘Ψ^hgc_n em todos os simplexos não
    degenerados de X×Y, para n ≤ n_max.
    """
    resultado = ResultadoVerificacao(f"G = G̃ (n ≤ {n_max})", fixture)
    for n in range(1, n_max + 1):
        for z in gm.XY.todos():
            resultado.contar()
            diferenca = gm.G(n, z) - G_til(gm.XY, n, z, gm.anel)
            if diferenca:
                resultado.registrar((n, z), diferenca)
    return registrar_resultado(resultado)


# Φ^GM

class EstruturaGM:
    """
    Estrutura shc Φ^GM em C*(X): transposta de Gₙ para X×X composta
    com a diagonal.

        Φ^GM_n(β)(x) = (−1)^{(n−1)|β|} j(β)(Gₙ(Δx)),  β = a₁⊗b₁⊗…⊗aₙ⊗bₙ.
    """

    def __init__(self, X: FiniteSimplicialSet, anel: CoefficientRing, gm: Optional[TransferenciaGM] = None):
        self.X = X
        self.anel = anel
        self.gm = gm or TransferenciaGM(EilenbergZilber(product(X, X), anel))
        XX = self.gm.XY
        self._diagonal = {
            x: XX.par(NormalFormSimplex.nao_degenerado(x), NormalFormSimplex.nao_degenerado(x))
            for x in X.todos()
        }

    def phi_chaves(self, pares: Sequence[Tuple[Cocadeia, Cocadeia]]) -> Vector:
        n = len(pares)
        cocadeias = [c for par in pares for c in par]
        grau_beta = sum(c.grau for c in cocadeias)
        dim = grau_beta - n + 1
        anel = self.anel
        termos = []
        if dim < 0:
            return Vector.zero(anel)
        for x in self.X.nao_degenerados(dim):
            delta = self._diagonal[x]
            if delta.eh_degenerado:
                continue
            valor = anel.zero
            for chave, c in self.gm.G(n, delta.base).items():
                simplexos = [s for par in chave for s in par]
                valor += c * parear(cocadeias, simplexos, anel)
            termos.append((Cocadeia(x), valor * anel.sinal((n - 1) * grau_beta)))
        return Vector.somar(anel, termos)


def phi_gm(X: FiniteSimplicialSet, n: int, pares: Sequence[Tuple[Cocadeia, Cocadeia]],
           anel: CoefficientRing, estrutura: Optional[EstruturaGM] = None) -> Vector:
    """
    Φ^GM_n(a₁⊗b₁, …, aₙ⊗bₙ) como cocadeia de X.

    Raises:
        GrauIncompativelError: Se len(pares) ≠ n.
    """
    if len(pares) != n:
        raise GrauIncompativelError(f"Φ^GM_{n} recebeu {len(pares)} pares")
    return (estrutura or EstruturaGM(X, anel)).phi_chaves(pares)


# Lema de anulamento para h_{α,β}

def instancias_h_alpha_beta(XY: ProdutoSimplicial, m_max: int):
    """
    Todas as (α, β, x, y, m, p, q) com x, y não degenerados, m ≤ m_max e
    p + q < m, o domínio de h_{α,β}.
    """
    X, Y = XY.fator_x, XY.fator_y
    for m in range(m_max + 1):
        for p in range(m):
            for q in range(m - p):
                if m - q > X.dimensao or m - p > Y.dimensao:
                    continue
                for alfa in combinations(range(p + q + 1), p):
                    beta = tuple(j for j in range(p + q + 1) if j not in alfa)
                    for x in X.nao_degenerados(m - q):
                        for y in Y.nao_degenerados(m - p):
                            yield alfa, beta, x, y, m, p, q


def eh_intervalo(beta: Sequence[int]) -> bool:
    return list(beta) == list(range(beta[0], beta[0] + len(beta)))


def check_gkgl(ez: EilenbergZilber, n: int, instancias, fixture: str = "") -> ResultadoVerificacao:
    """
    Para z = h_{α,β}(x, y):
      (i) (G̃_k⊗1)Δz = 0 para 1 < k < n;
      (ii) (AW⊗G̃ₙ₋₁)Δz = 0 se β não é intervalo;
      (iii) se β = [i, i+q], (AW⊗G̃ₙ₋₁)Δz =
            (−1)^{n(i+q+1)} (x|[0..i] ⊗ y|[0..q+1]) ⊗ G̃ₙ₋₁(x|[i..m−q], s_{[0,p−i]} y|[q+1..m−p]).
    """
    XY, anel = ez.XY, ez.anel
    X, Y = XY.fator_x, XY.fator_y
    resultado = ResultadoVerificacao(f"anulamento de h_αβ (n = {n})", fixture)
    for alfa, beta, x, y, m, p, q in instancias:
        resultado.contar()
        x_nf, y_nf = NormalFormSimplex.nao_degenerado(x), NormalFormSimplex.nao_degenerado(y)
        z = ez.h_alpha_beta(alfa, beta, x_nf, y_nf)
        delta = z.mapear(ez.diagonal_produto)
        caso = (alfa, beta, x, y)
        for k in range(2, n):
            valor = Vector.zero(anel)
            for (u, w), c in delta.items():
                valor = valor + Vector(anel, {
                    (g, w): c * c2 for g, c2 in G_til(XY, k, u, anel).items()
                })
            if valor:
                resultado.registrar(("(i)", k) + caso, valor)
        lado = Vector.zero(anel)
        for (u, w), c in delta.items():
            frente = Vector(anel, {(par,): c2 for par, c2 in ez.aw_chave(u).items()})
            lado = lado + _concatenar(anel, frente, G_til(XY, n - 1, w, anel), n - 2).escalar(c)
        if not eh_intervalo(beta):
            if lado:
                resultado.registrar(("(ii)",) + caso, lado)
            continue
        i = beta[0]
        esperado = Vector.zero(anel)
        dentro = i <= m - q and q + 1 <= m - p
        x0 = X.restringir(x_nf, range(0, i + 1)) if dentro else None
        y0 = Y.restringir(y_nf, range(0, q + 2)) if dentro else None
        if dentro and not x0.eh_degenerado and not y0.eh_degenerado:
            x1 = X.restringir(x_nf, range(i, m - q + 1))
            y1 = Y.restringir(y_nf, range(q + 1, m - p + 1)).degenerar_palavra(range(p - i + 1))
            cauda = XY.par(x1, y1)
            if not cauda.eh_degenerado:
                esperado = _concatenar(
                    anel,
                    Vector.basis(anel, ((x0.base, y0.base),)),
                    G_til(XY, n - 1, cauda.base, anel),
                    0,
                ).escalar(anel.sinal(n * (i + q + 1)))
        if lado != esperado:
            resultado.registrar(("(iii)",) + caso, lado - esperado)
    return registrar_resultado(resultado)
