import pytest

from src.models.algebra import AlgebraBase, AlgebraTruncada, morfismo_aumento, morfismo_identidade
from src.models.configuracao import RunConfig
from src.services.cadeias import CochainAlgebra
from src.validators.exceptions import (
    CoeficienteNaoSuportadoError,
    JanelaInsuficienteError,
    ModuloIncompativelError,
)
from src.validators.politica_truncamento import ModoTruncamento, PoliticaTruncamento


class TestValidacao:

    def test_configuracao_padrao_valida(self):
        """A configuração padrão passa sem exceção."""
        PoliticaTruncamento(RunConfig()).validar()

    @pytest.mark.parametrize("coeficiente", ["zmod:4", "zmod:", "reais"])
    def test_coeficiente_invalido(self, coeficiente):
        with pytest.raises(CoeficienteNaoSuportadoError) as exc_info:
            PoliticaTruncamento(RunConfig(coeficiente=coeficiente)).validar()

        assert coeficiente.split(":")[0] in str(exc_info.value).lower()

    def test_janela_pequena(self):
        with pytest.raises(JanelaInsuficienteError) as exc_info:
            PoliticaTruncamento(RunConfig(janela=1)).validar()

        assert "1 < 2" in str(exc_info.value)

    def test_n_max_pequeno(self):
        with pytest.raises(JanelaInsuficienteError) as exc_info:
            PoliticaTruncamento(RunConfig(n_max=1)).validar()

        assert "n_max" in str(exc_info.value)

    def test_suite_desconhecida(self):
        with pytest.raises(ModuloIncompativelError) as exc_info:
            PoliticaTruncamento(RunConfig(suites=["hga", "nada"])).validar()

        assert "nada" in str(exc_info.value)


class TestModoTruncamento:

    def test_exato_para_1_reduzida(self, s2, anel):
        """C*(S²) só tem parte reduzida em grau 2."""
        A = CochainAlgebra(s2, anel)
        k = AlgebraBase(anel)

        assert PoliticaTruncamento(RunConfig()).modo(k, A, morfismo_aumento(A, k)) is ModoTruncamento.EXATO

    def test_contracao_com_identidade(self, delta1, anel):
        A = CochainAlgebra(delta1, anel)

        assert PoliticaTruncamento(RunConfig()).modo(A, A, morfismo_identidade(A)) is ModoTruncamento.CONTRACAO

    def test_teto_nos_demais_casos(self, delta1, anel):
        """C*(Δ¹) tem parte reduzida em grau 0 e 𝕜 à esquerda não é o meio."""
        A = CochainAlgebra(delta1, anel)
        k = AlgebraBase(anel)

        assert PoliticaTruncamento(RunConfig()).modo(k, A, morfismo_aumento(A, k)) is ModoTruncamento.TETO

    def test_tetos(self):
        politica = PoliticaTruncamento(RunConfig(janela=3, teto_comprimento=5))

        assert politica.teto(ModoTruncamento.EXATO) == 4
        assert politica.teto(ModoTruncamento.CONTRACAO) == 0
        assert politica.teto(ModoTruncamento.TETO) == 5

    def test_grau_reduzido_minimo(self, anel):
        assert PoliticaTruncamento.grau_reduzido_minimo(AlgebraTruncada(anel, 3, 2)) == 3
        assert PoliticaTruncamento.grau_reduzido_minimo(AlgebraBase(anel)) is None
