"""
Estruturas A∞ e A∞-morfismos para dgas, dados por suas componentes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Hashable, Tuple

from src.models.algebra import AlgebraAumentada, MorfismoDga
from src.models.vetor import Vector


Componentes = Callable[[int, Tuple[Hashable, ...]], Vector]


@dataclass
class AInfStructure:
    """
    Estrutura A∞ em um complexo de cocadeias: mₙ de grau 2−n em chaves.

    Attributes:
        nome: Rótulo usado nos relatórios.
        anel: Anel de coeficientes.
        diferencial_chave: Diferencial do complexo subjacente.
        m: mₙ(a₁, …, aₙ) para n ≥ 2.
        unidade: Elemento unidade estrita.
        aumento_chave: Aumento nas chaves de base.
    """

    nome: str
    anel: Any
    diferencial_chave: Callable[[Hashable], Vector]
    m: Componentes
    unidade: Vector
    aumento_chave: Callable[[Hashable], Any]


@dataclass
class AInfMorphismToDga:
    """
    A∞-morfismo f: origem ⇒ destino com destino uma dga; componentes
    fₙ de grau 1−n.

    Attributes:
        nome: Rótulo.
        origem: Estrutura A∞ de origem.
        destino: dga de destino.
        f: fₙ(a₁, …, aₙ) para n ≥ 1.
    """

    nome: str
    origem: AInfStructure
    destino: AlgebraAumentada
    f: Componentes

    def componente(self, n: int, chaves: Tuple[Hashable, ...]) -> Vector:
        return self.f(n, tuple(chaves))


def estrutura_de_dga(A: AlgebraAumentada) -> AInfStructure:
    """Uma dga como álgebra A∞: m₂ é o produto e mₙ = 0 para n ≥ 3."""

    def m(n: int, chaves: Tuple[Hashable, ...]) -> Vector:
        if n == 2:
            return A.produto_chaves(*chaves)
        return Vector.zero(A.anel)

    return AInfStructure(A.nome, A.anel, A.diferencial_chave, m, A.unidade(), A.aumento_chave)


def morfismo_estrito(phi: MorfismoDga) -> AInfMorphismToDga:
    """Morfismo de dgas visto como A∞-morfismo com fₙ = 0 para n ≥ 2."""

    def f(n: int, chaves: Tuple[Hashable, ...]) -> Vector:
        if n == 1:
            return phi.aplicar_chave(chaves[0])
        return Vector.zero(phi.destino.anel)

    return AInfMorphismToDga(phi.nome, estrutura_de_dga(phi.origem), phi.destino, f)
