"""
Cadeias e cocadeias normalizadas de conjuntos simpliciais finitos.

A álgebra de cocadeias C*(X) é uma hga: o produto cup e as operações
E_k são transpostos da diagonal de Alexander–Whitney e das cooperações
E^k de corte em intervalos.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Hashable, List, Sequence, Tuple

from src.models.algebra import AlgebraHga, MorfismoDga
from src.models.escalares import CoefficientRing
from src.models.mapa_graduado import Complex
from src.models.simplicial import (
    FiniteSimplicialSet,
    NormalFormSimplex,
    SimplexRef,
    SimplicialMap,
)
from src.models.vetor import Vector
from src.services.cortes_intervalo import (
    IndiceTransposto,
    diagonal_cadeias,
    hgc_E,
)


@dataclass(frozen=True)
class Cocadeia:
    """Cocadeia dual de um simplexo não degenerado (grau = dimensão)."""

    simplexo: SimplexRef

    @property
    def grau(self) -> int:
        return self.simplexo.dim

    def __repr__(self) -> str:
        return f"{self.simplexo!r}*"


def como_cadeia(anel: CoefficientRing, x: NormalFormSimplex) -> Vector:
    """Simplexo como cadeia normalizada (zero se degenerado)."""
    if x.eh_degenerado:
        return Vector.zero(anel)
    return Vector.basis(anel, x.base)


def bordo(X: FiniteSimplicialSet, x: SimplexRef, anel: CoefficientRing) -> Vector:
    """∂x = Σ (−1)ⁱ ∂ᵢx, descartando faces degeneradas."""
    if x.dim == 0:
        return Vector.zero(anel)
    nf = NormalFormSimplex.nao_degenerado(x)
    termos = []
    for i in range(x.dim + 1):
        face = X.face(nf, i)
        if not face.eh_degenerado:
            termos.append((face.base, anel.sinal(i)))
    return Vector.somar(anel, termos)


def normalized_chains(X: FiniteSimplicialSet, anel: CoefficientRing) -> Complex:
    """
    Complexo de cadeias normalizadas C(X) (diferencial de grau −1).

    Example:
        >>> c = normalized_chains(simplexo_padrao(1), anel)
        >>> c.diferencial_chave(aresta)   # v1 − v0
    """
    return Complex(
        f"C({X.nome})", anel, X.nao_degenerados,
        lambda x: bordo(X, x, anel), -1, sorted(X.simplices),
    )


class CochainAlgebra(AlgebraHga):
    """
    Cocadeias normalizadas C*(X) como hga.

    Attributes:
        X: Conjunto simplicial.
        sinal_E: Constante global das operações E_k (k ≥ 1).

    Example:
        >>> A = CochainAlgebra(simplexo_padrao(1), anel)
        >>> A.produto_chaves(w, x)   # w = v0*, x = v01*
        1*v01*
    """

    def __init__(self, X: FiniteSimplicialSet, anel: CoefficientRing, sinal_E: int = 1):
        super().__init__(f"C*({X.nome})", anel, sinal_E)
        self.X = X
        self._cofaces: Dict[SimplexRef, List[Tuple[SimplexRef, Any]]] = {}
        for z in X.todos():
            for y, c in bordo(X, z, anel).items():
                self._cofaces.setdefault(y, []).append((z, c))
        self._cup = IndiceTransposto(X, lambda z: diagonal_cadeias(X, z, anel), 0, anel)
        self._indices_E: Dict[int, IndiceTransposto] = {}
        self._bases = {d: [Cocadeia(x) for x in s] for d, s in X.simplices.items()}
        self._unidade = Vector.somar(anel, [(Cocadeia(v), anel.um) for v in X.nao_degenerados(0)])

    def base(self, grau: int) -> List[Cocadeia]:
        return self._bases.get(grau, [])

    def graus(self) -> List[int]:
        return sorted(self._bases)

    def diferencial_chave(self, a: Cocadeia) -> Vector:
        """(δa)(z) = (−1)^{p+1} a(∂z)."""
        sinal = self.anel.sinal(a.grau + 1)
        return Vector.somar(
            self.anel, [(Cocadeia(z), sinal * c) for z, c in self._cofaces.get(a.simplexo, [])]
        )

    def produto_chaves(self, a: Cocadeia, b: Cocadeia) -> Vector:
        """(a∪b)(z) = (−1)^{pq} a(z|[0..p]) b(z|[p..p+q])."""
        return Vector.somar(
            self.anel,
            [(Cocadeia(z), c) for z, c in self._cup.termos((a.simplexo, b.simplexo))],
        )

    def unidade(self) -> Vector:
        return self._unidade

    def aumento_chave(self, a: Cocadeia) -> Any:
        return self.anel.um if a.simplexo == self.X.basepoint else self.anel.zero

    def indice_E(self, k: int) -> IndiceTransposto:
        if k not in self._indices_E:
            X, anel = self.X, self.anel
            self._indices_E[k] = IndiceTransposto(X, lambda z: hgc_E(X, k, z, anel), k, anel)
        return self._indices_E[k]

    def E_chaves(self, a: Cocadeia, bs: Tuple[Cocadeia, ...]) -> Vector:
        """E_k = (E^k)* com as regras de sinal do transposto."""
        k = len(bs)
        simplexos = (a.simplexo,) + tuple(b.simplexo for b in bs)
        termos = self.indice_E(k).termos(simplexos)
        return Vector.somar(
            self.anel, [(Cocadeia(z), self.anel(self.sinal_E) * c) for z, c in termos]
        )

    def avaliar(self, beta: Vector, cadeia: Vector) -> Any:
        """β(c) para cocadeia β e cadeia c de mesmo grau."""
        total = self.anel.zero
        for z, c in cadeia.items():
            total += c * beta.coeficiente(Cocadeia(z))
        return total


def parear(cocadeias: Sequence[Cocadeia], simplexos: Sequence[SimplexRef], anel: CoefficientRing) -> Any:
    """
    j(β₁⊗…⊗β_r)(x₁⊗…⊗x_r) = (−1)^{Σ_{i<j}|β_j||x_i|} Π βᵢ(xᵢ) em chaves.
    """
    if any(b.simplexo != x for b, x in zip(cocadeias, simplexos)):
        return anel.zero
    graus = [x.dim for x in simplexos]
    expoente = sum(graus[i] * graus[j] for i in range(len(graus)) for j in range(i + 1, len(graus)))
    return anel.sinal(expoente)


def morfismo_pullback(f: SimplicialMap, destino: CochainAlgebra, origem: CochainAlgebra) -> MorfismoDga:
    """
    f*: C*(Y) → C*(X), (f*β)(x) = β(f x), para f: X → Y.
    """
    anel = destino.anel
    preimagens: Dict[SimplexRef, List[SimplexRef]] = {}
    for x in f.origem.todos():
        imagem = f.imagens[x]
        if not imagem.eh_degenerado:
            preimagens.setdefault(imagem.base, []).append(x)

    def acao(b: Cocadeia) -> Vector:
        return Vector.somar(anel, [(Cocadeia(x), anel.um) for x in preimagens.get(b.simplexo, [])])

    return MorfismoDga(destino, origem, acao, f"{f.origem.nome}→{f.destino.nome}*")
