"""
Cohomologia exata de complexos com base finita por grau.

Sobre corpos usa escalonamento do ``DomainMatrix`` do sympy; sobre ℤ
os postos são calculados em ℚ e a torção vem dos fatores invariantes
da forma normal de Smith.
"""

from __future__ import annotations

from typing import Any, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from src.infrastructure.event_logger import logger
from src.models.escalares import CoefficientRing
from src.models.mapa_graduado import Complex
from src.models.relatorio import CohomologyPresentation
from src.models.vetor import Vector
from src.validators.exceptions import JanelaInsuficienteError


def matriz_de_mapa(
    acao, origem: Sequence[Hashable], destino: Sequence[Hashable], dominio
) -> DomainMatrix:
    """
    Matriz (len(destino) × len(origem)) de um mapa dado nas chaves; a
    coluna j é a imagem de origem[j].
    """
    posicao = {k: i for i, k in enumerate(destino)}
    linhas = [[dominio.zero] * len(origem) for _ in destino]
    for j, chave in enumerate(origem):
        for k, c in acao(chave).items():
            if k not in posicao:
                raise JanelaInsuficienteError(f"{k!r} fora da base truncada")
            linhas[posicao[k]][j] = dominio.convert(c)
    return DomainMatrix(linhas, (len(destino), len(origem)), dominio)


def colunas_de(M: DomainMatrix) -> List[List[Any]]:
    linhas, colunas = M.shape
    dados = M.to_list()
    return [[dados[i][j] for i in range(linhas)] for j in range(colunas)]


def de_colunas(colunas: List[List[Any]], altura: int, dominio) -> DomainMatrix:
    linhas = [[col[i] for col in colunas] for i in range(altura)]
    return DomainMatrix(linhas, (altura, len(colunas)), dominio)


def nucleo(M: DomainMatrix, dominio) -> List[List[Any]]:
    """Base do núcleo (vetores-coluna) sobre um corpo."""
    linhas, colunas = M.shape
    if colunas == 0:
        return []
    if linhas == 0:
        return [[dominio.one if i == j else dominio.zero for i in range(colunas)] for j in range(colunas)]
    return M.nullspace().to_list()


def posto(M: DomainMatrix) -> int:
    if 0 in M.shape:
        return 0
    return M.rank()


class GrauCohomologia:
    """
    Dados de Hⁿ: imagem da diferencial que chega, núcleo da que sai e
    representantes escolhidos.

    Attributes:
        base: Base do complexo no grau.
        imagem: Colunas gerando a imagem.
        representantes: Colunas dos cociclos representantes.
    """

    def __init__(self, base: List[Hashable], imagem: List[List[Any]], ciclos: List[List[Any]], dominio):
        self.base = base
        self.dominio = dominio
        self.imagem = imagem
        altura = len(base)
        if altura == 0:
            self.representantes: List[List[Any]] = []
            self._rref = None
            return
        conjunto = de_colunas(imagem + ciclos, altura, dominio)
        _, pivos = conjunto.rref() if conjunto.shape[1] else (None, ())
        self.representantes = [ciclos[j - len(imagem)] for j in pivos if j >= len(imagem)]
        self._geradores = de_colunas(imagem + self.representantes, altura, dominio)

    @property
    def posto(self) -> int:
        return len(self.representantes)

    def coordenadas(self, v: Vector) -> Optional[List[Any]]:
        """
        Coordenadas da classe de um cociclo na base de representantes;
        None se ``v`` não for combinação de cociclos.
        """
        altura = len(self.base)
        if altura == 0:
            return []
        posicao = {k: i for i, k in enumerate(self.base)}
        coluna = [self.dominio.zero] * altura
        for k, c in v.items():
            if k not in posicao:
                raise JanelaInsuficienteError(f"{k!r} fora da base truncada")
            coluna[posicao[k]] = self.dominio.convert(c)
        geradores = colunas_de(self._geradores)
        aumentada = de_colunas(geradores + [coluna], altura, self.dominio)
        reduzida, pivos = aumentada.rref()
        n_geradores = len(geradores)
        if n_geradores in pivos:
            return None
        dados = reduzida.to_list()
        solucao = [self.dominio.zero] * n_geradores
        for linha, j in enumerate(pivos):
            solucao[j] = dados[linha][n_geradores]
        return solucao[len(self.imagem):]

    def vetor(self, anel: CoefficientRing, coluna: List[Any]) -> Vector:
        return Vector(anel, {k: c for k, c in zip(self.base, coluna)})

    def representante(self, anel: CoefficientRing, i: int) -> Vector:
        return self.vetor(anel, self.representantes[i])


class CohomologiaJanela:
    """
    Cohomologia de um complexo nos graus de uma janela.

    Example:
        >>> H = CohomologiaJanela(normalized_chains(X, anel), range(0, 3))
        >>> H.posto(0)
        1
    """

    def __init__(self, C: Complex, graus: Iterable[int]):
        self.C = C
        self.anel = C.anel
        dominio = C.anel.dominio
        self.dominio = dominio if dominio.is_Field else dominio.get_field()
        self.graus = sorted(graus)
        self._bases: Dict[int, List[Hashable]] = {}
        self.por_grau: Dict[int, GrauCohomologia] = {}
        for n in self.graus:
            self.por_grau[n] = self._calcular(n)

    def base(self, n: int) -> List[Hashable]:
        if n not in self._bases:
            self._bases[n] = list(self.C.base(n))
        return self._bases[n]

    def diferencial(self, n: int, dominio=None) -> DomainMatrix:
        """Matriz de d: Cⁿ → C^{n+direção}."""
        return matriz_de_mapa(
            self.C.diferencial_chave, self.base(n), self.base(n + self.C.direcao), dominio or self.dominio
        )

    def _calcular(self, n: int) -> GrauCohomologia:
        saida = self.diferencial(n)
        entrada = self.diferencial(n - self.C.direcao)
        ciclos = nucleo(saida, self.dominio)
        imagem = colunas_de(entrada) if entrada.shape[1] else []
        return GrauCohomologia(self.base(n), imagem, ciclos, self.dominio)

    def posto(self, n: int) -> int:
        return self.por_grau[n].posto

    def torcao(self, n: int) -> List[int]:
        """Fatores invariantes > 1 da imagem em grau n (só para ℤ)."""
        if self.anel.dominio.is_Field:
            return []
        entrada = self.diferencial(n - self.C.direcao, self.anel.dominio)
        if 0 in entrada.shape:
            return []
        fatores = invariant_factors(entrada)
        return [int(abs(f)) for f in fatores if abs(int(f)) > 1]

    def coordenadas(self, n: int, v: Vector) -> Optional[List[Any]]:
        return self.por_grau[n].coordenadas(v)

    def representante(self, n: int, i: int) -> Vector:
        return self.por_grau[n].representante(self.anel, i)

    def apresentacao(self, incertos: Sequence[int] = ()) -> CohomologyPresentation:
        return CohomologyPresentation(
            postos={n: self.posto(n) for n in self.graus},
            representantes={
                n: [self.representante(n, i) for i in range(self.posto(n))] for n in self.graus
            },
            torcao={n: self.torcao(n) for n in self.graus},
            incertos=list(incertos),
        )


def cohomology(C: Complex, janela: Iterable[int]) -> CohomologyPresentation:
    """
    Postos, representantes e torção de H(C) na janela.

    Quando o complexo é uma truncagem (``C.finito`` falso), o grau mais
    alto da janela é marcado como incerto.

    Args:
        C: Complexo com base finita em cada grau.
        janela: Graus a calcular.

    Returns:
        Apresentação da cohomologia.

    Example:
        >>> cohomology(normalized_chains(esfera_minima(2), anel), range(3)).postos
        {0: 1, 1: 0, 2: 1}
    """
    graus = sorted(janela)
    H = CohomologiaJanela(C, graus)
    incertos = [] if C.finito or not graus else [graus[-1]]
    apresentacao = H.apresentacao(incertos)
    logger.log(
        "COHOMOLOGIA_CALCULADA",
        complexo=C.nome,
        anel=C.anel.nome,
        postos=apresentacao.postos,
    )
    return apresentacao
