"""
Anel Tor_A(A′, A″) em uma janela de graus.

A cohomologia da barra bilateral truncada dá os postos e os
representantes; o produto vem de m₂ ou da composta de Eilenberg–Moore–
Smith B(Φ^GM, Φ^GM, Φ^GM)∘sh. Também ficam aqui a comparação com o
pull-back simplicial e o oráculo por resolução minimal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Tuple

from src.infrastructure.event_logger import logger
from src.models.ainf import AInfMorphismToDga, estrutura_de_dga
from src.models.algebra import (
    AlgebraAumentada,
    AlgebraBase,
    MorfismoDga,
    TensorAlgebra,
    morfismo_identidade,
    morfismo_tensorial,
)
from src.models.barra import UNIDADE, TwoSidedBarElement
from src.models.configuracao import RunConfig
from src.models.escalares import CoefficientRing
from src.models.relatorio import ComparacaoEM, ResultadoVerificacao, RingPresentation
from src.models.simplicial import FiniteSimplicialSet, NormalFormSimplex, SimplicialMap
from src.models.vetor import Vector, tensor
from src.services.cadeias import CochainAlgebra, morfismo_pullback
from src.services.cohomologia import CohomologiaJanela, colunas_de, de_colunas, matriz_de_mapa, nucleo
from src.services.construcao_barra import MapaBarraInduzido, TwoSidedBar, shuffle_bilateral
from src.services.cortes_intervalo import phi_hga
from src.services.estrutura_ainf import EstruturaAInf, HomotopiaBarra, morfismo_aumento_geral
from src.services.gugenheim_munkholm import EstruturaGM
from src.services.produto_simplicial import projecao, pullback
from src.services.verificacao_ainf import amostrar_tuplas, registrar_resultado, verify_ainf_morphism
from src.validators.exceptions import (
    CoeficienteNaoSuportadoError,
    JanelaInsuficienteError,
    ModuloIncompativelError,
    TruncamentoInstavelError,
)
from src.validators.politica_truncamento import ModoTruncamento, PoliticaTruncamento


PERTURBACOES = 20

Componentes = Callable[[int, Tuple[Hashable, ...]], Vector]


# Estruturas shc usadas na composta com o shuffle

def componentes_hga(A: AlgebraAumentada) -> Componentes:
    """Φ^hga de uma hga; em 𝕜 é o produto trivial."""
    return lambda n, pares: phi_hga(A, pares)


def componentes_gm(A: AlgebraAumentada) -> Componentes:
    """
    Φ^GM de C*(X), obtida da transferência de Gugenheim–Munkholm.

    Raises:
        ModuloIncompativelError: Se A não for 𝕜 nem uma álgebra de cocadeias.
    """
    if isinstance(A, AlgebraBase):
        return componentes_hga(A)
    if not isinstance(A, CochainAlgebra):
        raise ModuloIncompativelError(f"Φ^GM exige cocadeias de um conjunto simplicial, não {A.nome}")
    estrutura = EstruturaGM(A.X, A.anel)
    return lambda n, pares: estrutura.phi_chaves(pares)


def componentes_estritos(A: AlgebraAumentada) -> Componentes:
    """Só a componente linear μ: A⊗A → A."""

    def f(n: int, pares: Tuple[Hashable, ...]) -> Vector:
        if n == 1:
            return A.produto_chaves(*pares[0])
        return Vector.zero(A.anel)

    return f


class ProdutoViaShc:
    """
    Produto B(Φ′, Φ, Φ″)∘sh em B(A′, A, A″) para estruturas shc
    Φ: A⊗A ⇒ A das três álgebras.

    Attributes:
        barra: B(A′, A, A″).
        origem: B(A′⊗A′, A⊗A, A″⊗A″).
        induzido: Mapa B(Φ′, Φ, Φ″).
    """

    def __init__(self, barra: TwoSidedBar, fabrica: Callable[[AlgebraAumentada], Componentes], nome: str = "Φ"):
        self.barra = barra
        self.nome = nome
        tensores: Dict[int, TensorAlgebra] = {}
        morfismos: Dict[int, AInfMorphismToDga] = {}

        def quadrado(A: AlgebraAumentada) -> TensorAlgebra:
            if id(A) not in tensores:
                tensores[id(A)] = TensorAlgebra(A, A)
                T = tensores[id(A)]
                morfismos[id(A)] = AInfMorphismToDga(
                    f"{nome}: {T.nome} ⇒ {A.nome}", estrutura_de_dga(T), A, fabrica(A)
                )
            return tensores[id(A)]

        T1, T, T2 = quadrado(barra.esquerda), quadrado(barra.meio), quadrado(barra.direita)
        self.origem = TwoSidedBar(
            T1, T, T2,
            morfismo_tensorial(barra.phi_esquerda, barra.phi_esquerda, T, T1),
            morfismo_tensorial(barra.phi_direita, barra.phi_direita, T, T2),
        )
        self.induzido = MapaBarraInduzido(
            self.origem, barra,
            morfismos[id(barra.esquerda)], morfismos[id(barra.meio)], morfismos[id(barra.direita)],
        )
        self._cache: Dict[Tuple[TwoSidedBarElement, TwoSidedBarElement], Vector] = {}

    def produto_chave(self, x: TwoSidedBarElement, y: TwoSidedBarElement) -> Vector:
        if (x, y) not in self._cache:
            self._cache[(x, y)] = self.induzido(shuffle_bilateral(self.origem, self.barra, x, y))
        return self._cache[(x, y)]

    def produto(self, x: Vector, y: Vector) -> Vector:
        return tensor(x, y).mapear(lambda k: self.produto_chave(k[0], k[1]))


# Cohomologia da barra bilateral na janela

class CalculadoraTor:
    """
    H(B(A′, A, A″)) nos graus 0..janela, com representantes e
    coordenadas de classes.

    O modo de truncamento vem de ``PoliticaTruncamento``: no modo exato
    as palavras são limitadas pelo grau; no modo de contração as classes
    são lidas em H(A″) pela seção a″ ↦ 1[]a″ e por f₁; no modo de teto
    os postos precisam coincidir para o teto e para o teto acrescido do
    passo de estabilidade.

    Raises:
        CoeficienteNaoSuportadoError: Se os coeficientes não formarem corpo.
        TruncamentoInstavelError: Se os postos mudarem ao subir o teto.
    """

    def __init__(self, barra: TwoSidedBar, config: RunConfig, politica: Optional[PoliticaTruncamento] = None):
        if not barra.anel.eh_corpo:
            raise CoeficienteNaoSuportadoError(f"Produtos em Tor exigem um corpo, não {barra.anel.nome}")
        self.barra = barra
        self.anel = barra.anel
        self.config = config
        self.politica = politica or PoliticaTruncamento(config)
        self.modo = self.politica.modo(barra.esquerda, barra.meio, barra.phi_esquerda)
        self.graus = list(range(config.janela + 1))
        self.observacoes: List[str] = []
        if self.modo is ModoTruncamento.CONTRACAO:
            self.teto = 0
            self.homotopia = HomotopiaBarra(barra)
            self.H = CohomologiaJanela(barra.direita.complexo(), self.graus)
        elif self.modo is ModoTruncamento.EXATO:
            self.teto = self.politica.teto(self.modo)
            self.H = self._cohomologia(self.teto)
        else:
            menor = self._cohomologia(self.politica.teto(self.modo))
            self.teto = self.politica.teto(self.modo) + config.passo_estabilidade
            self.H = self._cohomologia(self.teto)
            instaveis = [n for n in self.graus if menor.posto(n) != self.H.posto(n)]
            if instaveis:
                raise TruncamentoInstavelError(
                    f"{barra.nome}: postos mudam nos graus {instaveis} ao subir o teto "
                    f"de {self.teto - config.passo_estabilidade} para {self.teto}"
                )
            self.observacoes.append(f"teto de comprimento {self.teto}, estável nos graus {self.graus}")

    def _cohomologia(self, teto: int) -> CohomologiaJanela:
        return CohomologiaJanela(self.barra.complexo(teto, range(-1, self.config.janela + 2)), self.graus)

    def posto(self, n: int) -> int:
        return self.H.posto(n)

    def postos(self) -> Dict[int, int]:
        return {n: self.posto(n) for n in self.graus}

    def representante(self, n: int, i: int) -> Vector:
        """Cociclo de B(A′, A, A″) que representa a i-ésima classe de grau n."""
        if self.modo is ModoTruncamento.CONTRACAO:
            b = self.barra
            return b.elemento(
                b.esquerda.unidade(), b.barra.palavra(), self.H.representante(n, i)
            )
        return self.H.representante(n, i)

    def coordenadas(self, n: int, v: Vector) -> Optional[List[Any]]:
        """Coordenadas da classe de um cociclo; None se não couber na truncagem."""
        if self.modo is ModoTruncamento.CONTRACAO:
            v = self.homotopia.f1(v)
        try:
            return self.H.coordenadas(n, v)
        except JanelaInsuficienteError:
            return None

    def cobordo(self, n: int, gerador: random.Random) -> Vector:
        """Cobordo aleatório de grau n, com coeficiente não nulo em geral."""
        chaves = self.barra.base(n - 1, max(self.teto, 1))
        if not chaves:
            return Vector.zero(self.anel)
        chave = gerador.choice(chaves)
        return self.barra.diferencial_chave(chave).escalar(self.anel(gerador.randint(1, 5)))

    def apresentar(self, produto: Callable[[Vector, Vector], Vector], nome: str) -> RingPresentation:
        """
        Constantes de estrutura de ``produto`` nas classes de base, com a
        verificação de comutatividade graduada e de independência do
        representante.
        """
        anel = self.anel
        janela = self.config.janela
        geradores = {n: [f"e{n}_{i}" for i in range(self.posto(n))] for n in self.graus}
        observacoes = list(self.observacoes)
        tabela: Dict[Tuple[int, int, int, int], List[Any]] = {}
        for p in self.graus:
            for q in self.graus:
                if p + q > janela:
                    continue
                for i in range(self.posto(p)):
                    for j in range(self.posto(q)):
                        coords = self.coordenadas(
                            p + q, produto(self.representante(p, i), self.representante(q, j))
                        )
                        if coords is None:
                            observacoes.append(f"e{p}_{i}*e{q}_{j} fora da truncagem")
                            continue
                        tabela[(p, i, q, j)] = coords
        constantes = {
            f"e{p}_{i}*e{q}_{j}": [anel.texto(c) for c in coords]
            for (p, i, q, j), coords in tabela.items()
        }
        comutativo = True
        for (p, i, q, j), coords in tabela.items():
            outro = tabela.get((q, j, p, i))
            if outro is not None and outro != [anel.sinal(p * q) * c for c in coords]:
                comutativo = False
                observacoes.append(f"e{p}_{i}*e{q}_{j} ≠ ±e{q}_{j}*e{p}_{i}")
        bem_definido = self._perturbar(produto, tabela, observacoes)
        apresentacao = RingPresentation(
            nome=nome,
            postos=self.postos(),
            geradores=geradores,
            constantes=constantes,
            comutativo=comutativo,
            bem_definido=bem_definido,
            observacoes=observacoes,
        )
        logger.log(
            "TOR_CALCULADO",
            anel_tor=nome,
            modo=self.modo.value,
            postos=apresentacao.postos,
            comutativo=comutativo,
            bem_definido=bem_definido,
        )
        return apresentacao

    def _perturbar(self, produto, tabela, observacoes: List[str]) -> bool:
        """Troca os representantes por representantes + cobordos e compara as classes."""
        casos = sorted(tabela)
        if not casos:
            return True
        gerador = random.Random(self.config.semente)
        bem_definido = True
        for _ in range(PERTURBACOES):
            p, i, q, j = gerador.choice(casos)
            x = self.representante(p, i) + self.cobordo(p, gerador)
            y = self.representante(q, j) + self.cobordo(q, gerador)
            coords = self.coordenadas(p + q, produto(x, y))
            if coords is not None and coords != tabela[(p, i, q, j)]:
                bem_definido = False
                observacoes.append(f"e{p}_{i}*e{q}_{j} depende do representante")
        return bem_definido


def tor_ring(barra: TwoSidedBar, config: RunConfig,
             calculadora: Optional[CalculadoraTor] = None) -> RingPresentation:
    """
    Tor_A(A′, A″) na janela com o produto induzido por m₂.

    Args:
        barra: B(A′, A, A″) de hgas.
        config: Janela, tetos e semente.

    Returns:
        Postos, geradores e constantes de estrutura.

    Example:
        >>> tor_ring(TwoSidedBar(k, C*(S²), k, ε, ε), config).postos
        {0: 1, 1: 1, 2: 1, 3: 1, 4: 1}
    """
    calculadora = calculadora or CalculadoraTor(barra, config)
    estrutura = EstruturaAInf(barra)
    return calculadora.apresentar(lambda x, y: estrutura.m([x, y]), f"Tor m₂ {barra.nome}")


def em_smith_product(barra: TwoSidedBar, config: RunConfig,
                     calculadora: Optional[CalculadoraTor] = None) -> RingPresentation:
    """
    Tor_A(A′, A″) com o produto de Eilenberg–Moore–Smith, realizado
    como B(Φ^GM, Φ^GM, Φ^GM)∘sh: o shuffle de cohomologia seguido de
    Tor_{Δ*}∘Tor_{G*}∘Tor_j.
    """
    calculadora = calculadora or CalculadoraTor(barra, config)
    composta = ProdutoViaShc(barra, componentes_gm, "Φ^GM")
    return calculadora.apresentar(composta.produto, f"Tor EMS {barra.nome}")


def comparar_aneis(a: RingPresentation, b: RingPresentation, fixture: str = "") -> ResultadoVerificacao:
    """Mesmos postos e mesmas constantes de estrutura."""
    resultado = ResultadoVerificacao("produtos de Tor coincidem", fixture)
    resultado.contar(len(a.constantes) + len(a.postos))
    if a.postos != b.postos:
        resultado.registrar("postos", (a.postos, b.postos))
    for chave in sorted(set(a.constantes) | set(b.constantes)):
        if a.constantes.get(chave) != b.constantes.get(chave):
            resultado.registrar(chave, (a.constantes.get(chave), b.constantes.get(chave)))
    return registrar_resultado(resultado)


# Verificações de m₂ no nível de cadeias

def m2_via_shc(estrutura: EstruturaAInf, tuplas: Iterable[Tuple], fixture: str = "") -> ResultadoVerificacao:
    """Confere m₂ = B(Φ^hga, Φ^hga, Φ^hga)∘sh termo a termo."""
    composta = ProdutoViaShc(estrutura.barra, componentes_hga, "Φ^hga")
    resultado = ResultadoVerificacao("m₂ = B(Φ^hga)∘sh", fixture)
    for x, y in tuplas:
        resultado.contar()
        diferenca = estrutura.m_chave(2, (x, y)) - composta.produto_chave(x, y)
        if diferenca:
            resultado.registrar((x, y), diferenca)
    return registrar_resultado(resultado)


def check_length_filtration(estrutura: EstruturaAInf, tuplas: Iterable[Tuple],
                            fixture: str = "") -> ResultadoVerificacao:
    """
    m₂ não aumenta o comprimento das palavras, e a parte de comprimento
    máximo é o produto da primeira página: shuffle com os produtos
    das três álgebras.
    """
    estrito = ProdutoViaShc(estrutura.barra, componentes_estritos, "μ")
    resultado = ResultadoVerificacao("filtração por comprimento de m₂", fixture)
    for x, y in tuplas:
        resultado.contar()
        comprimento = x.comprimento + y.comprimento
        m2 = estrutura.m_chave(2, (x, y))
        longos = m2.filtrar(lambda k: k.comprimento > comprimento)
        if longos:
            resultado.registrar((x, y), longos)
        topo = m2.filtrar(lambda k: k.comprimento == comprimento)
        diferenca = topo - estrito.produto_chave(x, y)
        if diferenca:
            resultado.registrar((x, y), diferenca)
    return registrar_resultado(resultado)


# Comparação com o pull-back

def _eh_identidade(f: SimplicialMap) -> bool:
    return f.origem is f.destino and all(
        f.imagens[x] == NormalFormSimplex.nao_degenerado(x) for x in f.origem.todos()
    )


def isomorfismo_esperado(f: SimplicialMap, p: SimplicialMap) -> bool:
    """H(f₁) deve ser isomorfismo quando f ou p é a identidade de B."""
    return _eh_identidade(f) or _eh_identidade(p)


def _algebra_e_mapa(f: SimplicialMap, AB: CochainAlgebra, anel: CoefficientRing,
                    sinal_E: int) -> Tuple[CochainAlgebra, MorfismoDga]:
    """C*(origem de f) e f*; reaproveita C*(B) quando f é a identidade."""
    if _eh_identidade(f):
        return AB, morfismo_identidade(AB)
    A = CochainAlgebra(f.origem, anel, sinal_E)
    return A, morfismo_pullback(f, AB, A)


def barra_da_tripla(f: SimplicialMap, p: SimplicialMap, config: RunConfig) -> TwoSidedBar:
    """B(C*X, C*B, C*E) para X →f B ←p E, com f* e p* como mapas de dgas."""
    anel = CoefficientRing.de_texto(config.coeficiente)
    AB = CochainAlgebra(f.destino, anel, config.sinal_E)
    AX, f_estrela = _algebra_e_mapa(f, AB, anel, config.sinal_E)
    AE, p_estrela = _algebra_e_mapa(p, AB, anel, config.sinal_E)
    return TwoSidedBar(AX, AB, AE, f_estrela, p_estrela)


def em_check(f: SimplicialMap, p: SimplicialMap, config: RunConfig,
             fixture: str = "") -> ComparacaoEM:
    """
    Compara H(B(C*X, C*B, C*E)) com H*(X ×_B E) através do A∞-morfismo
    f: B(C*X, C*B, C*E) ⇒ C*(X ×_B E).

    Sempre confere as relações de A∞-morfismo de f₁..f_{n_max} e a
    multiplicatividade de H(f₁) em relação a m₂ e ao cup. Os graus em que
    H(f₁) é isomorfismo são relatados; ``esperado`` diz se o isomorfismo
    é exigido da tripla.

    Args:
        f: X → B.
        p: E → B.
        config: Coeficientes, janela e amostragem.
        fixture: Rótulo da tripla.
    """
    barra = barra_da_tripla(f, p, config)
    anel = barra.anel
    AX, AB, AE = barra.esquerda, barra.meio, barra.direita
    f_estrela = barra.phi_esquerda
    P = pullback(f, p)
    AP = CochainAlgebra(P, anel, config.sinal_E)
    chi_x = morfismo_pullback(projecao(P, 0), AX, AP)
    chi_e = morfismo_pullback(projecao(P, 1), AE, AP)
    chi = MorfismoDga(AB, AP, lambda b: chi_x(f_estrela.aplicar_chave(b)), "χ")
    estrutura = EstruturaAInf(barra)
    morfismo = morfismo_aumento_geral(estrutura, AP, chi_x, chi, chi_e)
    calculadora = CalculadoraTor(barra, config)
    H_P = CohomologiaJanela(AP.complexo(), calculadora.graus)

    def f1(v: Vector) -> Vector:
        return v.mapear(lambda k: morfismo.componente(1, (k,)))

    graus_iso = []
    for n in calculadora.graus:
        colunas = [H_P.coordenadas(n, f1(calculadora.representante(n, i))) for i in range(calculadora.posto(n))]
        if any(c is None for c in colunas):
            continue
        imagem = de_colunas(colunas, H_P.posto(n), H_P.dominio) if colunas and H_P.posto(n) else None
        posto = imagem.rank() if imagem is not None else 0
        if posto == calculadora.posto(n) == H_P.posto(n):
            graus_iso.append(n)

    verificacoes = []
    chaves = [x for n in range(0, 3) for x in barra.base(n, max(calculadora.teto, 1))]
    for n in range(1, config.n_max + 1):
        tuplas = amostrar_tuplas(chaves, n, config.amostras, config.semente)
        verificacoes.append(verify_ainf_morphism(morfismo, n, tuplas, fixture))

    multiplicativo = ResultadoVerificacao("H(f₁) multiplicativo", fixture)
    for p_ in calculadora.graus:
        for q in calculadora.graus:
            if p_ + q > config.janela:
                continue
            for i in range(calculadora.posto(p_)):
                for j in range(calculadora.posto(q)):
                    x, y = calculadora.representante(p_, i), calculadora.representante(q, j)
                    multiplicativo.contar()
                    esquerda = H_P.coordenadas(p_ + q, f1(estrutura.m([x, y])))
                    direita = H_P.coordenadas(p_ + q, AP.produto(f1(x), f1(y)))
                    if esquerda != direita:
                        multiplicativo.registrar((f"e{p_}_{i}", f"e{q}_{j}"), (esquerda, direita))
    verificacoes.append(registrar_resultado(multiplicativo))

    return ComparacaoEM(
        tripla=fixture or barra.nome,
        postos_barra=calculadora.postos(),
        postos_pullback={n: H_P.posto(n) for n in calculadora.graus},
        graus_iso=graus_iso,
        esperado=isomorfismo_esperado(f, p),
        verificacoes=verificacoes,
    )


def identidade_simplicial(X: FiniteSimplicialSet) -> SimplicialMap:
    return SimplicialMap(X, X, {x: NormalFormSimplex.nao_degenerado(x) for x in X.todos()}, validar=False)


# Oráculo: resolução livre minimal sobre uma álgebra finita

@dataclass(frozen=True)
class GeradorLivre:
    """Gerador do módulo livre Fₛ da resolução, de grau interno ``grau``."""

    homologico: int
    indice: int
    grau: int

    def __repr__(self) -> str:
        return f"g{self.homologico}_{self.indice}"


class ResolucaoMinimal:
    """
    Resolução livre minimal de 𝕜 por R-módulos à direita,
    ··· → F₂ → F₁ → F₀ → 𝕜, para R de diferencial nula com base finita.

    O número de geradores de Fₛ em grau interno t é a dimensão de
    Tor^R_{s,t}(𝕜, 𝕜), que na barra aparece em grau total t − s.

    Example:
        >>> ResolucaoMinimal(AlgebraTruncada(anel, 2, 2)).tor_total(4)
        {0: 1, 1: 1, 2: 1, 3: 1, 4: 1}
    """

    def __init__(self, R: AlgebraAumentada):
        if not R.anel.eh_corpo:
            raise CoeficienteNaoSuportadoError("A resolução minimal exige um corpo")
        minimo = PoliticaTruncamento.grau_reduzido_minimo(R)
        if minimo is not None and minimo < 2:
            raise JanelaInsuficienteError(f"{R.nome} não é 1-reduzida")
        self.R = R
        self.anel = R.anel
        self.dominio = R.anel.dominio
        self.geradores: Dict[int, List[GeradorLivre]] = {0: [GeradorLivre(0, 0, 0)]}
        self.imagens: Dict[GeradorLivre, Vector] = {}
        self._calculado = (-1, -1)

    def base(self, s: int, t: int) -> List[Tuple[GeradorLivre, Hashable]]:
        if s < 0:
            return [UNIDADE] if t == 0 else []
        return [(g, r) for g in self.geradores.get(s, []) for r in self.R.base(t - g.grau)]

    def diferencial_chave(self, s: int, chave) -> Vector:
        g, r = chave
        if s == 0:
            return Vector.basis(self.anel, UNIDADE, self.R.aumento_chave(r))
        total: Dict[Any, Any] = {}
        for (g2, r2), c in self.imagens[g].items():
            for r3, c2 in self.R.produto_chaves(r2, r).items():
                total[(g2, r3)] = total.get((g2, r3), self.anel.zero) + c * c2
        return Vector(self.anel, total)

    def calcular(self, s_max: int, t_max: int) -> None:
        """Recalcula os geradores de Fₛ, s ≤ s_max + 1, em graus internos ≤ t_max."""
        self.geradores = {0: [GeradorLivre(0, 0, 0)]}
        self.imagens = {}
        for s in range(s_max + 2):
            self.geradores.setdefault(s, [])
        for t in range(t_max + 1):
            for s in range(s_max + 1):
                fonte = self.base(s, t)
                if not fonte:
                    continue
                saida = matriz_de_mapa(lambda k: self.diferencial_chave(s, k), fonte, self.base(s - 1, t), self.dominio)
                ciclos = nucleo(saida, self.dominio)
                entrada = self.base(s + 1, t)
                imagem = colunas_de(
                    matriz_de_mapa(lambda k: self.diferencial_chave(s + 1, k), entrada, fonte, self.dominio)
                ) if entrada else []
                if not ciclos:
                    continue
                _, pivos = de_colunas(imagem + ciclos, len(fonte), self.dominio).rref()
                for j in pivos:
                    if j < len(imagem):
                        continue
                    gerador = GeradorLivre(s + 1, len(self.geradores[s + 1]), t)
                    self.geradores[s + 1].append(gerador)
                    self.imagens[gerador] = Vector(
                        self.anel, {k: c for k, c in zip(fonte, ciclos[j - len(imagem)])}
                    )
        self._calculado = (s_max, t_max)

    def tor(self, s: int, t: int) -> int:
        return sum(1 for g in self.geradores.get(s, []) if g.grau == t)

    def tor_total(self, janela: int) -> Dict[int, int]:
        """dim Tor em grau total n = t − s, n = 0..janela."""
        s_max, t_max = janela, 2 * janela
        if self._calculado[0] < s_max or self._calculado[1] < t_max:
            self.calcular(s_max, t_max)
        return {
            n: sum(self.tor(s, n + s) for s in range(n + 1))
            for n in range(janela + 1)
        }


def oraculo_aplicavel(barra: TwoSidedBar) -> bool:
    """
    A resolução minimal serve de oráculo para B(A′, A, A″) quando A′ e
    A″ são só a unidade e A é 1-reduzida com diferencial nula.
    """
    pontuais = all(
        not alg.base_reduzida(g) for alg in (barra.esquerda, barra.direita) for g in alg.graus()
    )
    if not pontuais:
        return False
    A = barra.meio
    minimo = PoliticaTruncamento.grau_reduzido_minimo(A)
    if minimo is not None and minimo < 2:
        return False
    return all(not A.diferencial_chave(a) for g in A.graus() for a in A.base(g))


def comparar_oraculo(barra: TwoSidedBar, postos: Dict[int, int], fixture: str = "") -> ResultadoVerificacao:
    """Postos de H(B(𝕜, A, 𝕜)) contra dim Tor^A(𝕜, 𝕜) da resolução minimal."""
    resultado = ResultadoVerificacao("Tor pela resolução minimal", fixture)
    janela = max(postos) if postos else 0
    esperado = ResolucaoMinimal(barra.meio).tor_total(janela)
    for n in sorted(postos):
        resultado.contar()
        if postos[n] != esperado[n]:
            resultado.registrar(n, (postos[n], esperado[n]))
    return registrar_resultado(resultado)
