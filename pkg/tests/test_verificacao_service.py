"""
Testes para as suítes de verificação.
"""

import pytest

from src.models.configuracao import RunConfig
from src.models.vetor import Vector
from src.services.verificacao_service import ContextoFixture, VerificacaoService
from src.validators.exceptions import CoeficienteNaoSuportadoError, ContracaoInvalidaError, ModuloIncompativelError


def config_suites(*suites, **extras):
    """Configuração pequena com todas as tuplas de BC*(Δ¹) cabendo na amostra."""
    base = dict(janela=2, n_max=2, teto_comprimento=2, semente=3, amostras=500)
    base.update(extras)
    return RunConfig(suites=list(suites), **base)


class TestVerificacaoService:

    def test_configuracao_invalida(self):
        """Deve validar a configuração na construção."""
        with pytest.raises(CoeficienteNaoSuportadoError):
            VerificacaoService(RunConfig(coeficiente="zmod:6"))
        with pytest.raises(ModuloIncompativelError):
            VerificacaoService(RunConfig(suites=["complexos", "xyz"]))

    def test_sem_suites(self, delta1):
        relatorio = VerificacaoService(config_suites()).verificar([delta1], [])

        assert relatorio.ok
        assert relatorio.resultados == []

    def test_complexos_e_contracao(self, delta1, s2):
        """d² = 0, EZ e f∘G = 1 em Δ¹ e S²; H* vai para o relatório."""
        relatorio = VerificacaoService(config_suites("complexos", "contracao")).verificar([s2, delta1], [])

        assert relatorio.ok, [str(r) for r in relatorio.falhas]
        assert relatorio.cohomologias[s2.nome].postos == {0: 1, 1: 0, 2: 1}
        assert {r.fixture for r in relatorio.resultados} == {delta1.nome, s2.nome}

    def test_hga(self, delta1):
        relatorio = VerificacaoService(config_suites("hga")).verificar([delta1], [])

        assert relatorio.ok, [str(r) for r in relatorio.falhas]
        assert len(relatorio.resultados) == 4

    def test_mutacao_de_sinal_detectada(self, delta1):
        """Com sinal_E = −1 a identidade de torção de 𝐄 falha com testemunhas."""
        relatorio = VerificacaoService(config_suites("hga", sinal_E=-1)).verificar([delta1], [])

        assert not relatorio.ok
        falhas = {r.identidade for r in relatorio.falhas}
        assert "𝐄 cocadeia de torção" in falhas
        assert all(r.testemunhas for r in relatorio.falhas)

    def test_ainf_morfismo_e_lemas(self, delta1):
        config = config_suites("ainf", "morfismo", "lemas", amostras=20)

        relatorio = VerificacaoService(config).verificar([delta1], [])

        assert relatorio.ok, [str(r) for r in relatorio.falhas]

    def test_gm(self, delta1):
        relatorio = VerificacaoService(config_suites("gm", n_max=3)).verificar([delta1], [])

        assert relatorio.ok, [str(r) for r in relatorio.falhas]

    def test_gm_exige_contracao_valida(self, delta1, anel):
        """Gₙ não é construída sobre uma homotopia que quebra d(h) = f∘g − 1."""
        ctx = ContextoFixture(delta1, anel, 1)
        ctx.ez.homotopia_chave = lambda z: Vector.zero(anel)

        with pytest.raises(ContracaoInvalidaError):
            ctx.gm

    def test_comparar_shc(self, delta1, delta2):
        relatorio = VerificacaoService(config_suites(n_max=3)).comparar_shc([delta2, delta1])

        assert relatorio.comando == "shc-compare"
        assert [r.fixture for r in relatorio.resultados] == ["Δ1", "Δ2"]
        assert relatorio.ok

    def test_tor_na_esfera(self, tripla_esfera):
        """A suíte tor gera os dois anéis, a comparação e o oráculo."""
        relatorio = VerificacaoService(config_suites("tor", amostras=20)).verificar([], [tripla_esfera])

        assert relatorio.ok, [str(r) for r in relatorio.falhas]
        assert len(relatorio.aneis) == 2
        assert relatorio.comparacoes[0].graus_iso == [0]
        identidades = {r.identidade for r in relatorio.resultados}
        assert "Tor pela resolução minimal" in identidades
        assert "H(f₁) isomorfismo" not in identidades
        assert any("não exigido" in aviso for aviso in relatorio.avisos)

    def test_tor_no_triangulo_exige_isomorfismo(self, tripla_triangulo):
        """Com f = p = 1 o isomorfismo com o pull-back entra como identidade."""
        relatorio = VerificacaoService(config_suites("tor", amostras=20)).verificar([], [tripla_triangulo])

        assert relatorio.ok, [str(r) for r in relatorio.falhas]
        assert "H(f₁) isomorfismo" in {r.identidade for r in relatorio.resultados}

    def test_calcular_tor(self, tripla_triangulo):
        relatorio = VerificacaoService(config_suites()).calcular_tor([tripla_triangulo])

        assert relatorio.comando == "tor"
        assert relatorio.ok
        assert relatorio.aneis[0].postos == {0: 1, 1: 0, 2: 0}
