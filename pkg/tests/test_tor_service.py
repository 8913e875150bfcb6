"""
Testes para o cálculo de Tor, os dois produtos e a resolução minimal.
"""

import pytest

from src.models.algebra import AlgebraTruncada
from src.models.configuracao import RunConfig
from src.models.escalares import CoefficientRing
from src.services.tor_service import (
    CalculadoraTor,
    ResolucaoMinimal,
    barra_da_tripla,
    comparar_aneis,
    comparar_oraculo,
    em_check,
    em_smith_product,
    oraculo_aplicavel,
    tor_ring,
)
from src.validators.exceptions import CoeficienteNaoSuportadoError, JanelaInsuficienteError
from src.validators.politica_truncamento import ModoTruncamento


@pytest.fixture
def barra_esfera(tripla_esfera, config_pequena):
    """B(C*pt, C*S², C*pt)."""
    return barra_da_tripla(tripla_esfera.f, tripla_esfera.p, config_pequena)


@pytest.fixture
def calculadora_esfera(barra_esfera, config_pequena):
    return CalculadoraTor(barra_esfera, config_pequena)


class TestCalculadoraTor:
    """Testes para CalculadoraTor."""

    def test_esfera_modo_exato(self, calculadora_esfera):
        """C*S² é 1-reduzida: palavras limitadas pelo grau."""
        assert calculadora_esfera.modo is ModoTruncamento.EXATO
        assert calculadora_esfera.teto == 4

    def test_postos_da_esfera(self, calculadora_esfera):
        """Tor_{C*S²}(𝕜, 𝕜) tem posto 1 em cada grau."""
        assert calculadora_esfera.postos() == {0: 1, 1: 1, 2: 1, 3: 1}

    def test_representante_e_ciclo(self, calculadora_esfera, barra_esfera):
        """Os representantes são cociclos da barra."""
        for n in range(4):
            representante = calculadora_esfera.representante(n, 0)
            assert representante
            assert not representante.mapear(barra_esfera.diferencial_chave)

    def test_triangulo_modo_contracao(self, tripla_triangulo, config_pequena):
        """Em B(A, A, A) com mapa identidade, Tor ≅ H(A) = 𝕜 em grau 0."""
        barra = barra_da_tripla(tripla_triangulo.f, tripla_triangulo.p, config_pequena)
        calculadora = CalculadoraTor(barra, config_pequena)

        assert calculadora.modo is ModoTruncamento.CONTRACAO
        assert calculadora.postos() == {0: 1, 1: 0, 2: 0, 3: 0}

    def test_inteiros_rejeitados(self, tripla_esfera):
        """Produtos de Tor exigem corpo."""
        config = RunConfig(coeficiente="z", janela=3, n_max=3)
        barra = barra_da_tripla(tripla_esfera.f, tripla_esfera.p, config)

        with pytest.raises(CoeficienteNaoSuportadoError):
            CalculadoraTor(barra, config)

    def test_zmod(self, tripla_esfera):
        """Sobre zmod:3 os postos continuam 1."""
        config = RunConfig(coeficiente="zmod:3", janela=2, n_max=2)
        barra = barra_da_tripla(tripla_esfera.f, tripla_esfera.p, config)

        assert CalculadoraTor(barra, config).postos() == {0: 1, 1: 1, 2: 1}


class TestProdutosTor:
    """Testes para tor_ring, em_smith_product e comparar_aneis."""

    def test_unidade_em_grau_zero(self, barra_esfera, config_pequena, calculadora_esfera):
        """A classe de grau 0 é a unidade do produto m₂."""
        anel = tor_ring(barra_esfera, config_pequena, calculadora_esfera)

        for n in range(4):
            assert anel.constantes[f"e0_0*e{n}_0"] == ["1"]
        assert anel.comutativo
        assert anel.bem_definido

    def test_geradores(self, barra_esfera, config_pequena, calculadora_esfera):
        anel = tor_ring(barra_esfera, config_pequena, calculadora_esfera)

        assert anel.geradores[2] == ["e2_0"]
        assert anel.postos == {0: 1, 1: 1, 2: 1, 3: 1}

    def test_m2_e_ems_coincidem(self, barra_esfera, config_pequena, calculadora_esfera):
        """O produto por m₂ é o de Eilenberg–Moore–Smith."""
        por_m2 = tor_ring(barra_esfera, config_pequena, calculadora_esfera)
        por_ems = em_smith_product(barra_esfera, config_pequena, calculadora_esfera)

        assert comparar_aneis(por_m2, por_ems, "(pt, S2, pt)").ok

    def test_comparar_aneis_detecta_diferenca(self, barra_esfera, config_pequena, calculadora_esfera):
        """Constantes diferentes geram testemunha."""
        por_m2 = tor_ring(barra_esfera, config_pequena, calculadora_esfera)
        alterado = tor_ring(barra_esfera, config_pequena, calculadora_esfera)
        alterado.constantes["e0_0*e0_0"] = ["2"]

        resultado = comparar_aneis(por_m2, alterado)

        assert not resultado.ok
        assert len(resultado.testemunhas) == 1


class TestComparacaoPullback:
    """Testes para em_check."""

    def test_triangulo_e_isomorfismo(self, tripla_triangulo, config_pequena):
        """Para Δ² → Δ² ← Δ² o pull-back é Δ² e H(f₁) é isomorfismo."""
        comparacao = em_check(tripla_triangulo.f, tripla_triangulo.p, config_pequena, "(Δ2, Δ2, Δ2)")

        assert comparacao.ok
        assert comparacao.esperado
        assert comparacao.isomorfismo
        assert comparacao.postos_pullback == {0: 1, 1: 0, 2: 0, 3: 0}

    def test_esfera_so_em_grau_zero(self, tripla_esfera, config_pequena):
        """pt → S² não é fibração: o pull-back é um ponto e Tor não."""
        comparacao = em_check(tripla_esfera.f, tripla_esfera.p, config_pequena, "(pt, S2, pt)")

        assert comparacao.ok
        assert comparacao.graus_iso == [0]
        assert not comparacao.isomorfismo
        assert not comparacao.esperado


class TestResolucaoMinimal:
    """Testes para ResolucaoMinimal e o oráculo."""

    def test_esfera(self, anel):
        """H*(S²) = 𝕜[u]/(u²), |u| = 2: Tor de posto 1 em cada grau."""
        assert ResolucaoMinimal(AlgebraTruncada(anel, 2, 2)).tor_total(4) == {0: 1, 1: 1, 2: 1, 3: 1, 4: 1}

    def test_altura_tres(self, anel):
        """𝕜[u]/(u³), |u| = 2: geradores em graus 1 e 4 e seus produtos."""
        assert ResolucaoMinimal(AlgebraTruncada(anel, 2, 3)).tor_total(5) == {
            0: 1, 1: 1, 2: 0, 3: 0, 4: 1, 5: 1,
        }

    def test_exige_corpo(self):
        anel = CoefficientRing.de_texto("z")

        with pytest.raises(CoeficienteNaoSuportadoError):
            ResolucaoMinimal(AlgebraTruncada(anel, 2, 2))

    def test_exige_1_reduzida(self, anel):
        """Com gerador de grau 1 o Tor não cabe na janela."""
        with pytest.raises(JanelaInsuficienteError):
            ResolucaoMinimal(AlgebraTruncada(anel, 1, 2))

    def test_oraculo_aplicavel(self, barra_esfera, tripla_triangulo, config_pequena):
        """O oráculo só vale para (pt, B, pt) com B 1-reduzida e d = 0."""
        barra = barra_da_tripla(tripla_triangulo.f, tripla_triangulo.p, config_pequena)

        assert oraculo_aplicavel(barra_esfera)
        assert not oraculo_aplicavel(barra)

    def test_oraculo_confere(self, barra_esfera, calculadora_esfera):
        assert comparar_oraculo(barra_esfera, calculadora_esfera.postos(), "(pt, S2, pt)").ok

    def test_oraculo_detecta_posto_errado(self, barra_esfera):
        resultado = comparar_oraculo(barra_esfera, {0: 1, 1: 2})

        assert not resultado.ok
