"""
Vetores esparsos sobre bases graduadas.

Toda chave de base expõe o atributo ``grau``; tensores de chaves são
tuplas, cujo grau é a soma dos graus das componentes.
"""

from __future__ import annotations

from typing import Any, Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Tuple

from src.models.escalares import CoefficientRing
from src.validators.exceptions import GrauIncompativelError, ModuloIncompativelError


def grau(chave: Any) -> int:
    """Grau de uma chave de base ou de um tensor (tupla) de chaves."""
    if isinstance(chave, tuple):
        return sum(grau(c) for c in chave)
    return chave.grau


def chave_ordenacao(chave: Any) -> str:
    """Ordem total determinística das chaves (lexicográfica no texto)."""
    return repr(chave)


class Vector:
    """
    Combinação linear finita de elementos de base com coeficientes
    exatos. Coeficientes nulos nunca são armazenados, de forma que a
    igualdade é estrutural.

    Attributes:
        anel: Anel de coeficientes.

    Example:
        >>> v = Vector.basis(anel, chave) + Vector.basis(anel, chave)
        >>> v.coeficiente(chave) == anel(2)
        True
    """

    __slots__ = ("anel", "_termos")

    def __init__(self, anel: CoefficientRing, termos: Optional[Dict[Hashable, Any]] = None):
        self.anel = anel
        self._termos: Dict[Hashable, Any] = (
            {k: c for k, c in termos.items() if c} if termos else {}
        )

    @classmethod
    def zero(cls, anel: CoefficientRing) -> "Vector":
        return cls(anel)

    @classmethod
    def basis(cls, anel: CoefficientRing, chave: Hashable, coeficiente: Any = None) -> "Vector":
        coef = anel.um if coeficiente is None else coeficiente
        return cls(anel, {chave: coef})

    @classmethod
    def somar(cls, anel: CoefficientRing, termos: Iterable[Tuple[Hashable, Any]]) -> "Vector":
        """Acumula pares (chave, coeficiente) em um vetor."""
        acumulado: Dict[Hashable, Any] = {}
        for chave, coef in termos:
            if coef:
                acumulado[chave] = acumulado.get(chave, anel.zero) + coef
        return cls(anel, acumulado)

    # Acesso

    def coeficiente(self, chave: Hashable) -> Any:
        return self._termos.get(chave, self.anel.zero)

    def items(self) -> Iterator[Tuple[Hashable, Any]]:
        return iter(self._termos.items())

    def chaves(self) -> List[Hashable]:
        return sorted(self._termos, key=chave_ordenacao)

    def ordenado(self) -> List[Tuple[Hashable, Any]]:
        return [(k, self._termos[k]) for k in self.chaves()]

    def __len__(self) -> int:
        return len(self._termos)

    def __bool__(self) -> bool:
        return bool(self._termos)

    def eh_zero(self) -> bool:
        return not self._termos

    def grau(self) -> Optional[int]:
        """
        Grau comum dos termos (None para o vetor nulo).

        Raises:
            GrauIncompativelError: Se o vetor não for homogêneo.
        """
        graus = {grau(k) for k in self._termos}
        if not graus:
            return None
        if len(graus) > 1:
            raise GrauIncompativelError(f"Vetor não homogêneo, graus {sorted(graus)}")
        return graus.pop()

    # Aritmética

    def _mesmo_anel(self, outro: "Vector") -> None:
        if outro.anel != self.anel:
            raise ModuloIncompativelError(
                f"Anéis diferentes: {self.anel.nome} e {outro.anel.nome}"
            )

    def __add__(self, outro: "Vector") -> "Vector":
        self._mesmo_anel(outro)
        termos = dict(self._termos)
        zero = self.anel.zero
        for k, c in outro._termos.items():
            termos[k] = termos.get(k, zero) + c
        return Vector(self.anel, termos)

    def __sub__(self, outro: "Vector") -> "Vector":
        return self + (-outro)

    def __neg__(self) -> "Vector":
        return Vector(self.anel, {k: -c for k, c in self._termos.items()})

    def escalar(self, coeficiente: Any) -> "Vector":
        if isinstance(coeficiente, int):
            coeficiente = self.anel(coeficiente)
        if not coeficiente:
            return Vector(self.anel)
        return Vector(self.anel, {k: coeficiente * c for k, c in self._termos.items()})

    def __rmul__(self, coeficiente: Any) -> "Vector":
        return self.escalar(coeficiente)

    def __eq__(self, outro: object) -> bool:
        if not isinstance(outro, Vector):
            return NotImplemented
        return self.anel == outro.anel and self._termos == outro._termos

    def __hash__(self) -> int:
        return hash(frozenset(self._termos.items()))

    # Extensão linear

    def mapear(self, acao: Callable[[Hashable], "Vector"]) -> "Vector":
        """Estende linearmente uma ação definida nas chaves de base."""
        acumulado: Dict[Hashable, Any] = {}
        zero = self.anel.zero
        for k, c in self._termos.items():
            for k2, c2 in acao(k).items():
                acumulado[k2] = acumulado.get(k2, zero) + c * c2
        return Vector(self.anel, acumulado)

    def filtrar(self, predicado: Callable[[Hashable], bool]) -> "Vector":
        return Vector(self.anel, {k: c for k, c in self._termos.items() if predicado(k)})

    def __repr__(self) -> str:
        if not self._termos:
            return "0"
        return " + ".join(f"{self.anel.texto(c)}*{k!r}" for k, c in self.ordenado())


def tensor(*vetores: Vector) -> Vector:
    """
    Produto tensorial de vetores; as chaves resultantes são tuplas
    planas com uma componente por fator. Não há sinais: coeficientes
    têm grau zero.
    """
    anel = vetores[0].anel
    parcial: Dict[Tuple, Any] = {(): anel.um}
    for v in vetores:
        novo: Dict[Tuple, Any] = {}
        for k, c in parcial.items():
            for k2, c2 in v.items():
                chave = k + (k2,)
                novo[chave] = novo.get(chave, anel.zero) + c * c2
        parcial = novo
    return Vector(anel, parcial)
