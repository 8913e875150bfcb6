"""
Sobrejeções não degeneradas, cortes em intervalos e decomposições 𝐣.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, List, Tuple

from src.validators.exceptions import DecomposicaoInvalidaError, SobrejecaoInvalidaError


@dataclass(frozen=True)
class Surjection:
    """
    Sobrejeção u: [r+k] → [r], guardada como a sequência de valores.

    Attributes:
        valores: (u(1), …, u(r+k)), valores em 1..r.

    Example:
        >>> Surjection((1, 2, 1)).grau
        1
    """

    valores: Tuple[int, ...]

    def __post_init__(self):
        valores = tuple(self.valores)
        object.__setattr__(self, "valores", valores)
        if not valores:
            raise SobrejecaoInvalidaError("Sobrejeção vazia")
        aridade = max(valores)
        if set(valores) != set(range(1, aridade + 1)):
            raise SobrejecaoInvalidaError(f"{valores} não é sobrejetora em [1..{aridade}]")
        for a, b in zip(valores, valores[1:]):
            if a == b:
                raise SobrejecaoInvalidaError(f"{valores} é degenerada (valor {a} repetido)")

    @property
    def aridade(self) -> int:
        return max(self.valores)

    @property
    def grau(self) -> int:
        return len(self.valores) - self.aridade

    def ultimas_ocorrencias(self) -> List[bool]:
        """Para cada posição, se é a última ocorrência do seu rótulo."""
        vistos = set()
        finais = []
        for v in reversed(self.valores):
            finais.append(v not in vistos)
            vistos.add(v)
        return list(reversed(finais))

    @classmethod
    def alternada(cls, k: int) -> "Surjection":
        """(1,2,1,3,1,…,1,k+1,1): sobrejeção das operações E^k."""
        valores = [1]
        for i in range(2, k + 2):
            valores += [i, 1]
        return cls(tuple(valores))

    def __repr__(self) -> str:
        return f"u{self.valores}"


@dataclass(frozen=True)
class IntervalCut:
    """
    Subdivisão 0 = m₀ ≤ m₁ ≤ … ≤ m_L = m de [0, m] em L intervalos.

    Attributes:
        pontos: (m₀, …, m_L).
    """

    pontos: Tuple[int, ...]

    def intervalos(self) -> List[Tuple[int, int]]:
        return list(zip(self.pontos, self.pontos[1:]))

    @classmethod
    def todos(cls, m: int, quantidade: int) -> Iterator["IntervalCut"]:
        """Todos os cortes de [0, m] em ``quantidade`` intervalos."""
        for meio in combinations_with_replacement(range(m + 1), quantidade - 1):
            yield cls((0,) + meio + (m,))


@dataclass(frozen=True)
class Decomposition:
    """
    Decomposição 𝐣 = (j₁, …, jₙ) de n−1 com j₁+…+j_s < s para todo s.

    Raises:
        DecomposicaoInvalidaError: Se a soma ou a condição de prefixo falharem.

    Example:
        >>> Decomposition((0, 1, 1)).n
        3
    """

    partes: Tuple[int, ...]

    def __post_init__(self):
        partes = tuple(self.partes)
        object.__setattr__(self, "partes", partes)
        n = len(partes)
        if n == 0 or any(j < 0 for j in partes):
            raise DecomposicaoInvalidaError(f"Decomposição inválida: {partes}")
        if sum(partes) != n - 1:
            raise DecomposicaoInvalidaError(f"{partes} não soma {n - 1}")
        acumulado = 0
        for s, j in enumerate(partes, start=1):
            acumulado += j
            if acumulado >= s:
                raise DecomposicaoInvalidaError(
                    f"{partes} viola a condição de prefixo em s={s}"
                )

    @property
    def n(self) -> int:
        return len(self.partes)

    def blocos(self) -> List[List[int]]:
        """Para cada s, os índices (a partir de 1) dos b consumidos pelo bloco s."""
        resultado, proximo = [], 1
        for j in self.partes:
            resultado.append(list(range(proximo, proximo + j)))
            proximo += j
        return resultado

    @classmethod
    def todas(cls, n: int) -> List["Decomposition"]:
        """Todas as decomposições válidas de n−1, em ordem lexicográfica."""
        resultado: List[Decomposition] = []

        def estender(prefixo: List[int], soma: int) -> None:
            s = len(prefixo)
            if s == n:
                if soma == n - 1:
                    resultado.append(cls(tuple(prefixo)))
                return
            # o próximo j leva o prefixo a s+1 termos, com soma < s+1
            for j in range(0, s + 1 - soma):
                if soma + j <= n - 1:
                    estender(prefixo + [j], soma + j)

        estender([], 0)
        return resultado
