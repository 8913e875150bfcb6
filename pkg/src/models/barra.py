"""
Chaves de base das construções de barras.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, NamedTuple, Tuple

from src.models.vetor import grau


@dataclass(frozen=True)
class Unidade:
    """Chave da unidade do anel base 𝕜 (grau 0)."""

    @property
    def grau(self) -> int:
        return 0

    def __repr__(self) -> str:
        return "1"


UNIDADE = Unidade()


@dataclass(frozen=True)
class BarWord:
    """
    Palavra [a₁|…|a_k] de letras do ideal de aumento.

    Attributes:
        letras: Chaves de base reduzidas.

    Example:
        >>> BarWord(()).comprimento
        0
    """

    letras: Tuple[Any, ...] = ()

    @property
    def comprimento(self) -> int:
        return len(self.letras)

    @property
    def grau(self) -> int:
        return sum(grau(a) - 1 for a in self.letras)

    def prefixo(self, i: int) -> "BarWord":
        return BarWord(self.letras[:i])

    def sufixo(self, i: int) -> "BarWord":
        return BarWord(self.letras[i:])

    def __add__(self, outra: "BarWord") -> "BarWord":
        return BarWord(self.letras + outra.letras)

    def __repr__(self) -> str:
        return "[" + "|".join(repr(a) for a in self.letras) + "]"


PALAVRA_VAZIA = BarWord()


class TwoSidedBarElement(NamedTuple):
    """Chave a′⊗𝐚⊗a″ de B(A′,A,A″); o grau é a soma dos três fatores."""

    esquerda: Any
    palavra: BarWord
    direita: Any

    @property
    def comprimento(self) -> int:
        return self.palavra.comprimento

    def __repr__(self) -> str:
        return f"{self.esquerda!r}{self.palavra!r}{self.direita!r}"
