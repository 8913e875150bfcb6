"""
Suítes de verificação executadas pelo CLI.

Cada suíte confere um grupo de identidades em cada conjunto simplicial
(ou tripla, na suíte ``tor``) e devolve os resultados na ordem das
fixtures. Os objetos caros de uma fixture (C*(X), barras, estrutura A∞,
transferência GM) são criados uma vez e compartilhados entre as suítes.
"""

from __future__ import annotations

import random
from functools import cached_property
from typing import Callable, Dict, List, Sequence

from src.models.algebra import morfismo_identidade
from src.models.configuracao import RunConfig
from src.models.escalares import CoefficientRing
from src.models.relatorio import Relatorio, ResultadoVerificacao
from src.models.simplicial import FiniteSimplicialSet, TriplaSimplicial
from src.models.vetor import Vector, grau
from src.services.cadeias import CochainAlgebra, normalized_chains
from src.services.cohomologia import cohomology
from src.services.construcao_barra import BarComplex, ProdutoKS, TwoSidedBar, violacoes_torcao
from src.services.eilenberg_zilber import EilenbergZilber
from src.services.estrutura_ainf import EstruturaAInf, HomotopiaBarra, barra_sobre_base, morfismo_colapso
from src.services.gugenheim_munkholm import (
    TransferenciaGM,
    check_gkgl,
    compare_shc,
    instancias_h_alpha_beta,
    verify_ainf_coalgebra_morphism,
    verify_secao,
)
from src.services.produto_simplicial import product
from src.services.tor_service import (
    CalculadoraTor,
    barra_da_tripla,
    check_length_filtration,
    comparar_aneis,
    comparar_oraculo,
    em_check,
    em_smith_product,
    m2_via_shc,
    oraculo_aplicavel,
    tor_ring,
)
from src.services.verificacao_ainf import (
    amostrar_tuplas,
    check_d_h,
    check_diagonal_h,
    check_diagonal_m,
    check_m_after_h,
    check_shift_lemma,
    registrar_resultado,
    verify_ainf_algebra,
    verify_ainf_morphism,
    verify_unidade_estrita,
)
from src.validators.exceptions import TruncamentoInstavelError
from src.validators.politica_truncamento import ModoTruncamento, PoliticaTruncamento


COMPRIMENTO_BARRA = 3
COMPRIMENTO_AMOSTRA = 2
GRAUS_AMOSTRA = (-1, 0, 1, 2)


def resultado_de_falhas(identidade: str, fixture: str, casos: int, falhas: Sequence) -> ResultadoVerificacao:
    """Converte uma lista de falhas (texto ou pares caso/diferença) em resultado registrado."""
    resultado = ResultadoVerificacao(identidade, fixture, casos)
    for falha in falhas:
        if isinstance(falha, tuple) and len(falha) == 2:
            resultado.registrar(*falha)
        else:
            resultado.testemunhas.append(str(falha))
    return registrar_resultado(resultado)


class ContextoFixture:
    """
    Objetos de uma fixture X compartilhados pelas suítes, criados sob
    demanda: C*(X), BC*(X), B(C*X, C*X, C*X) com sua estrutura A∞ e
    homotopia, e a contração de Eilenberg–Zilber de X×X.
    """

    def __init__(self, X: FiniteSimplicialSet, anel: CoefficientRing, sinal_E: int):
        self.X = X
        self.nome = X.nome
        self.anel = anel
        self.A = CochainAlgebra(X, anel, sinal_E)

    @cached_property
    def bar(self) -> BarComplex:
        return BarComplex(self.A)

    @cached_property
    def barra(self) -> TwoSidedBar:
        um = morfismo_identidade(self.A)
        return TwoSidedBar(self.A, self.A, self.A, um, um, self.bar)

    @cached_property
    def estrutura(self) -> EstruturaAInf:
        return EstruturaAInf(self.barra)

    @cached_property
    def homotopia(self) -> HomotopiaBarra:
        return HomotopiaBarra(self.barra)

    @cached_property
    def ez(self) -> EilenbergZilber:
        return EilenbergZilber(product(self.X, self.X), self.anel)

    @cached_property
    def gm(self) -> TransferenciaGM:
        """Gₙ sobre a contração de X×X, conferida antes da primeira recursão."""
        return TransferenciaGM(self.ez)

    def chaves(self, barra: TwoSidedBar) -> List:
        return [x for n in GRAUS_AMOSTRA for x in barra.base(n, COMPRIMENTO_AMOSTRA)]


class VerificacaoService:
    """
    Executa as suítes selecionadas em ``RunConfig``.

    Suítes por conjunto simplicial: complexos, contracao, hga, ainf,
    morfismo, lemas e gm. A suíte tor roda sobre triplas.

    Attributes:
        config: Configuração validada.
        anel: Anel de coeficientes.
        comprimento: Teto de comprimento das palavras nas verificações de BA.

    Raises:
        CoeficienteNaoSuportadoError: Se os coeficientes forem inválidos.
        JanelaInsuficienteError: Se janela ou n_max forem menores que 2.

    Example:
        >>> service = VerificacaoService(RunConfig(suites=["complexos"]))
        >>> relatorio = service.verificar([delta2], [])
        >>> relatorio.ok
        True
    """

    def __init__(self, config: RunConfig):
        PoliticaTruncamento(config).validar()
        self.config = config
        self.anel = CoefficientRing.de_texto(config.coeficiente)
        self.comprimento = min(config.teto_comprimento, COMPRIMENTO_BARRA)
        self._contextos: Dict[str, ContextoFixture] = {}
        self._suites: Dict[str, Callable[[ContextoFixture, Relatorio], List[ResultadoVerificacao]]] = {
            "complexos": self.suite_complexos,
            "contracao": self.suite_contracao,
            "hga": self.suite_hga,
            "ainf": self.suite_ainf,
            "morfismo": self.suite_morfismo,
            "lemas": self.suite_lemas,
            "gm": self.suite_gm,
        }

    def contexto(self, X: FiniteSimplicialSet) -> ContextoFixture:
        if X.nome not in self._contextos:
            self._contextos[X.nome] = ContextoFixture(X, self.anel, self.config.sinal_E)
        return self._contextos[X.nome]

    def _amostra(self, chaves: Sequence, n: int):
        return amostrar_tuplas(chaves, n, self.config.amostras, self.config.semente)

    def _novo_relatorio(self, comando: str) -> Relatorio:
        return Relatorio(comando=comando, configuracao=self.config.como_dict())

    # Comandos

    def verificar(self, conjuntos: Sequence[FiniteSimplicialSet],
                  triplas: Sequence[TriplaSimplicial]) -> Relatorio:
        """Roda as suítes selecionadas, fixtures em ordem de nome."""
        relatorio = self._novo_relatorio("verify")
        for X in sorted(conjuntos, key=lambda c: c.nome):
            ctx = self.contexto(X)
            for suite in self.config.suites:
                if suite in self._suites:
                    relatorio.resultados.extend(self._suites[suite](ctx, relatorio))
        if "tor" in self.config.suites:
            for tripla in sorted(triplas, key=lambda t: t.nome):
                relatorio.resultados.extend(self.suite_tor(tripla, relatorio))
        return relatorio

    def comparar_shc(self, conjuntos: Sequence[FiniteSimplicialSet]) -> Relatorio:
        """Φ^GM_n = Φ^hga_n para n ≤ n_max em cada fixture."""
        relatorio = self._novo_relatorio("shc-compare")
        for X in sorted(conjuntos, key=lambda c: c.nome):
            ctx = self.contexto(X)
            relatorio.resultados.append(compare_shc(ctx.gm, self.config.n_max, ctx.nome))
        return relatorio

    def calcular_tor(self, triplas: Sequence[TriplaSimplicial]) -> Relatorio:
        """Os dois produtos de Tor de cada tripla e o veredito de concordância."""
        relatorio = self._novo_relatorio("tor")
        for tripla in sorted(triplas, key=lambda t: t.nome):
            relatorio.resultados.extend(self._aneis_tor(tripla, relatorio))
        return relatorio

    # Suítes por conjunto simplicial

    def suite_complexos(self, ctx: ContextoFixture, relatorio: Relatorio) -> List[ResultadoVerificacao]:
        """d² = 0 em C(X), C*(X), BC*(X) e B(C*X, C*X, C*X); H*(X) vai para o relatório."""
        graus_x = list(range(ctx.X.dimensao + 1))
        graus_barra = list(range(-1, self.config.janela + 1))
        cadeias = normalized_chains(ctx.X, self.anel)
        relatorio.cohomologias[ctx.nome] = cohomology(cadeias, graus_x)
        complexos = [
            ("C", cadeias, graus_x),
            ("C*", ctx.A.complexo(), graus_x),
            ("BA", ctx.bar.complexo(self.comprimento, graus_barra), graus_barra),
            ("B(A,A,A)", ctx.barra.complexo(COMPRIMENTO_AMOSTRA, graus_barra), graus_barra),
        ]
        resultados = []
        for rotulo, C, graus in complexos:
            casos = sum(len(C.base(n)) for n in graus)
            resultados.append(resultado_de_falhas(f"d² = 0 em {rotulo}", ctx.nome, casos, C.verificar_d2(graus)))
        return resultados

    def suite_contracao(self, ctx: ContextoFixture, relatorio: Relatorio) -> List[ResultadoVerificacao]:
        """Identidades da contração de Eilenberg–Zilber em X×X e f∘G = 1."""
        falhas = ctx.ez.violacoes_contracao()
        contracao = resultado_de_falhas(
            "contração de Eilenberg–Zilber", ctx.nome, len(ctx.ez.XY.todos()), falhas
        )
        if falhas:
            return [contracao]
        return [contracao, verify_secao(ctx.gm, self.config.n_max, ctx.nome)]

    def suite_hga(self, ctx: ContextoFixture, relatorio: Relatorio) -> List[ResultadoVerificacao]:
        """
        𝐄 é cocadeia de torção e μ faz de BC*(X) uma álgebra dg unital
        e associativa.
        """
        bar, A, anel = ctx.bar, ctx.A, self.anel
        palavras = [w for n in GRAUS_AMOSTRA for w in bar.base(n, self.comprimento)]
        pares = self._amostra(palavras, 2)
        torcao = resultado_de_falhas(
            "𝐄 cocadeia de torção", ctx.nome, len(pares),
            violacoes_torcao(lambda par: bar.E_chave(*par), bar.diferencial_par, bar.diagonal_par, A, pares),
        )

        vazia = bar.palavra()
        unidade = ResultadoVerificacao("unidade de μ", ctx.nome)
        mapa = ResultadoVerificacao("μ mapa de cadeias", ctx.nome)
        for w1, w2 in pares:
            unidade.contar()
            v1 = Vector.basis(anel, w1)
            for lado in (bar.produto(vazia, v1), bar.produto(v1, vazia)):
                if lado != v1:
                    unidade.registrar(w1, lado - v1)
            mapa.contar()
            v2 = Vector.basis(anel, w2)
            esquerda = bar.produto_chave(w1, w2).mapear(bar.diferencial_chave)
            direita = bar.produto(bar.diferencial_chave(w1), v2) + bar.produto(
                v1, bar.diferencial_chave(w2)
            ).escalar(anel.sinal(grau(w1)))
            if esquerda != direita:
                mapa.registrar((w1, w2), esquerda - direita)

        associativa = ResultadoVerificacao("associatividade de μ", ctx.nome)
        for w1, w2, w3 in self._amostra(palavras, 3):
            associativa.contar()
            v3 = Vector.basis(anel, w3)
            esquerda = bar.produto(bar.produto_chave(w1, w2), v3)
            direita = bar.produto(Vector.basis(anel, w1), bar.produto_chave(w2, w3))
            if esquerda != direita:
                associativa.registrar((w1, w2, w3), esquerda - direita)
        return [torcao, registrar_resultado(unidade), registrar_resultado(mapa), registrar_resultado(associativa)]

    def suite_ainf(self, ctx: ContextoFixture, relatorio: Relatorio) -> List[ResultadoVerificacao]:
        """
        Relações A∞ de m₂..m_{n_max} em B(C*X, C*X, C*X), a degeneração
        A′ = 𝕜 no produto de Kadeishvili–Saneblidze, m₂ via Φ^hga e a
        filtração por comprimento.
        """
        estrutura = ctx.estrutura
        chaves = ctx.chaves(ctx.barra)
        resultados = [
            verify_ainf_algebra(estrutura.como_estrutura(), n, self._amostra(chaves, n), ctx.nome)
            for n in range(2, self.config.n_max + 1)
        ]
        resultados.append(self._degeneracao_ks(ctx))
        pares = self._amostra(chaves, 2)
        resultados.append(m2_via_shc(estrutura, pares, ctx.nome))
        resultados.append(check_length_filtration(estrutura, pares, ctx.nome))
        return resultados

    def _degeneracao_ks(self, ctx: ContextoFixture) -> ResultadoVerificacao:
        """Em B(𝕜, A, A): m₂ é o produto KS e mₙ = 0 para n ≥ 3."""
        barra = barra_sobre_base(ctx.A, ctx.A, morfismo_identidade(ctx.A), ctx.bar)
        estrutura = EstruturaAInf(barra)
        ks = ProdutoKS(barra)
        chaves = ctx.chaves(barra)
        resultado = ResultadoVerificacao("A′ = 𝕜: m₂ = KS e mₙ = 0", ctx.nome)
        for x, y in self._amostra(chaves, 2):
            resultado.contar()
            diferenca = estrutura.m_chave(2, (x, y)) - ks.produto_chave(x, y)
            if diferenca:
                resultado.registrar(("m2", x, y), diferenca)
        for n in range(3, self.config.n_max + 1):
            for tupla in self._amostra(chaves, n):
                resultado.contar()
                valor = estrutura.m_chave(n, tupla)
                if valor:
                    resultado.registrar((f"m{n}",) + tuple(tupla), valor)
        return registrar_resultado(resultado)

    def suite_morfismo(self, ctx: ContextoFixture, relatorio: Relatorio) -> List[ResultadoVerificacao]:
        """f: B(A, A, A) ⇒ A é A∞-morfismo; m tem unidade estrita."""
        f = morfismo_colapso(ctx.homotopia, ctx.estrutura)
        chaves = ctx.chaves(ctx.barra)
        resultados = [
            verify_ainf_morphism(f, n, self._amostra(chaves, n), ctx.nome)
            for n in range(1, self.config.n_max + 1)
        ]
        resultados.append(
            verify_unidade_estrita(ctx.estrutura.como_estrutura(), self.config.n_max, chaves, ctx.nome)
        )
        return resultados

    def suite_lemas(self, ctx: ContextoFixture, relatorio: Relatorio) -> List[ResultadoVerificacao]:
        """Lemas de S, h e m usados na prova das relações A∞."""
        estrutura, homotopia = ctx.estrutura, ctx.homotopia
        chaves = ctx.chaves(ctx.barra)
        nome = ctx.nome
        resultados = [check_shift_lemma(homotopia, chaves, nome)]
        for n in range(2, self.config.n_max + 1):
            tuplas = self._amostra(chaves, n)
            resultados.append(check_diagonal_h(homotopia, n, tuplas, nome))
            resultados.append(check_diagonal_m(estrutura, n, tuplas, nome))
            resultados.append(check_d_h(estrutura, homotopia, n, tuplas, nome))
            if n < self.config.n_max:
                resultados.append(check_m_after_h(estrutura, homotopia, n, self._amostra(chaves, n + 1), nome))
        return resultados

    def suite_gm(self, ctx: ContextoFixture, relatorio: Relatorio) -> List[ResultadoVerificacao]:
        """G é A∞-morfismo de coálgebras, Φ^GM = Φ^hga e o lema de anulamento de h_αβ."""
        n_max = self.config.n_max
        resultados = [
            verify_ainf_coalgebra_morphism(ctx.gm, n_max, ctx.nome),
            compare_shc(ctx.gm, n_max, ctx.nome),
        ]
        instancias = list(instancias_h_alpha_beta(ctx.ez.XY, ctx.X.dimensao))
        if len(instancias) > self.config.amostras:
            instancias = random.Random(self.config.semente).sample(instancias, self.config.amostras)
        for n in range(2, n_max + 1):
            resultados.append(check_gkgl(ctx.ez, n, instancias, ctx.nome))
        return resultados

    # Suíte por tripla

    def _aneis_tor(self, tripla: TriplaSimplicial, relatorio: Relatorio,
                   barra: TwoSidedBar = None, calculadora: CalculadoraTor = None) -> List[ResultadoVerificacao]:
        barra = barra or barra_da_tripla(tripla.f, tripla.p, self.config)
        calculadora = calculadora or CalculadoraTor(barra, self.config)
        por_m2 = tor_ring(barra, self.config, calculadora)
        por_ems = em_smith_product(barra, self.config, calculadora)
        relatorio.aneis.extend([por_m2, por_ems])
        propriedades = ResultadoVerificacao("Tor comutativo e bem definido", tripla.nome, 2)
        for anel in (por_m2, por_ems):
            if not anel.comutativo:
                propriedades.registrar(anel.nome, "não comutativo")
            if not anel.bem_definido:
                propriedades.registrar(anel.nome, "depende do representante")
        return [comparar_aneis(por_m2, por_ems, tripla.nome), registrar_resultado(propriedades)]

    def suite_tor(self, tripla: TriplaSimplicial, relatorio: Relatorio) -> List[ResultadoVerificacao]:
        """
        Produtos de Tor por m₂ e por Eilenberg–Moore–Smith, comparação
        com o pull-back e, quando aplicável, o oráculo da resolução minimal.

        Truncagem instável vira aviso no relatório.
        """
        barra = barra_da_tripla(tripla.f, tripla.p, self.config)
        try:
            calculadora = CalculadoraTor(barra, self.config)
        except TruncamentoInstavelError as e:
            relatorio.avisos.append(f"{tripla.nome}: {e}")
            return []
        resultados = self._aneis_tor(tripla, relatorio, barra, calculadora)

        comparacao = em_check(tripla.f, tripla.p, self.config, tripla.nome)
        relatorio.comparacoes.append(comparacao)
        resultados.extend(comparacao.verificacoes)
        if not comparacao.esperado:
            relatorio.avisos.append(
                f"{tripla.nome}: H(f₁) isomorfismo nos graus {comparacao.graus_iso}, não exigido"
            )
        elif calculadora.modo is ModoTruncamento.TETO:
            relatorio.avisos.append(f"{tripla.nome}: isomorfismo com o pull-back apenas relatado")
        else:
            iso = ResultadoVerificacao("H(f₁) isomorfismo", tripla.nome, len(comparacao.postos_barra))
            for n in sorted(set(comparacao.postos_barra) - set(comparacao.graus_iso)):
                iso.registrar(n, (comparacao.postos_barra[n], comparacao.postos_pullback.get(n)))
            resultados.append(registrar_resultado(iso))

        if oraculo_aplicavel(barra):
            resultados.append(comparar_oraculo(barra, calculadora.postos(), tripla.nome))
        return resultados

    def __repr__(self) -> str:
        return f"VerificacaoService({self.config.coeficiente}, suites={self.config.suites})"
