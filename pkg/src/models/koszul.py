"""
Sinais de Koszul.

Todos os sinais do projeto são obtidos mecanicamente a partir de duas
leituras de uma expressão: a ordem original das variáveis e a ordem em
que variáveis e mapas aparecem escritos. Trocar duas variáveis custa
(−1)^{|x||y|}; um mapa de grau g escrito depois de variáveis de grau
total G custa (−1)^{gG}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from src.validators.exceptions import ComprimentoInvalidoError, PermutacaoInvalidaError


@dataclass(frozen=True)
class Mapa:
    """Marcador de um mapa de grau ``grau`` dentro de uma leitura escrita."""

    grau: int


Token = Union[int, Mapa]


def koszul_sign(permutacao: Sequence[int], graus: Sequence[int]) -> int:
    """
    Sinal de Koszul de uma permutação de elementos graduados.

    ``permutacao[k]`` é o índice original do elemento que ocupa a
    posição k depois da permutação. Os índices começam em 0.

    Args:
        permutacao: Nova ordem dos elementos.
        graus: Grau de cada elemento, na ordem original.

    Returns:
        +1 ou −1.

    Raises:
        ComprimentoInvalidoError: Se os tamanhos forem diferentes.
        PermutacaoInvalidaError: Se ``permutacao`` não for permutação.

    Example:
        >>> koszul_sign([1, 0], [1, 1])
        -1
        >>> koszul_sign([2, 0, 1], [1, 1, 1])
        1
    """
    if len(permutacao) != len(graus):
        raise ComprimentoInvalidoError(
            f"Permutação de tamanho {len(permutacao)} para {len(graus)} graus"
        )
    indices = list(permutacao)
    if sorted(indices) != list(range(len(graus))):
        raise PermutacaoInvalidaError(f"Não é permutação: {list(permutacao)}")

    expoente = 0
    for a in range(len(indices)):
        for b in range(a + 1, len(indices)):
            if indices[a] > indices[b]:
                expoente += graus[indices[a]] * graus[indices[b]]
    return -1 if expoente % 2 else 1


def sinal_ks(graus: Sequence[int], escrita: Sequence[Token]) -> int:
    """
    Sinal de uma expressão lida pela regra de Koszul.

    Args:
        graus: Graus das variáveis na ordem original.
        escrita: Ordem escrita; inteiros indexam variáveis e ``Mapa``
            marca um mapa aplicado naquela posição.

    Returns:
        +1 ou −1: sinal da permutação das variáveis vezes o custo de
        cada mapa passar pelas variáveis escritas antes dele.

    Example:
        >>> sinal_ks([1, 1], [0, Mapa(1), 1])
        -1
    """
    variaveis = [t for t in escrita if not isinstance(t, Mapa)]
    sinal = koszul_sign(variaveis, graus) if variaveis else 1

    expoente = 0
    acumulado = 0
    for token in escrita:
        if isinstance(token, Mapa):
            expoente += token.grau * acumulado
        else:
            acumulado += graus[token]
    return -sinal if expoente % 2 else sinal
