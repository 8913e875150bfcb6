"""
Testes da interface de linha de comando.
"""

import copy

import pytest

from app import SAIDA_ERRO, SAIDA_OK, SAIDA_VIOLACAO, VerificadorHomologico, construir_parser, main
from src.infrastructure.settings_loader import RAIZ_PROJETO, SettingsLoader
from src.models.configuracao import RunConfig


FIXTURES = RAIZ_PROJETO / "fixtures"


@pytest.fixture
def settings_pequenos(monkeypatch):
    """settings.json com janela 2, palavras curtas e amostra que cobre todos os pares."""
    dados = copy.deepcopy(SettingsLoader.carregar())
    dados["janela"].update({"grau_maximo": 2, "n_max": 2, "teto_comprimento": 2})
    dados["amostragem"]["quantidade"] = 500
    monkeypatch.setattr(SettingsLoader, "_settings", dados)
    return dados


class TestParser:

    def test_suites_separadas_por_virgula(self):
        args = construir_parser().parse_args(["verify", "--suite", "hga, ainf"])

        assert args.suite == ["hga", "ainf"]

    def test_suite_vazia(self):
        assert construir_parser().parse_args(["verify", "--suite", ""]).suite == []

    def test_comando_desconhecido(self):
        with pytest.raises(SystemExit):
            construir_parser().parse_args(["compilar"])

    def test_sinal_e_restrito(self):
        with pytest.raises(SystemExit):
            construir_parser().parse_args(["verify", "--sinal-e", "2"])


class TestMain:

    def test_sem_suites_sai_com_zero(self, capsys):
        """--suite vazia não faz nada e sai com 0."""
        assert main(["verify", "--suite", ""]) == SAIDA_OK
        assert "TODAS AS 0 IDENTIDADES VALEM" in capsys.readouterr().out

    def test_coeficiente_invalido_sai_com_dois(self, capsys):
        assert main(["verify", "--suite", "", "--coeff", "zmod:4"]) == SAIDA_ERRO
        assert "CoeficienteNaoSuportadoError" in capsys.readouterr().err

    def test_fixture_inexistente_sai_com_dois(self, capsys):
        assert main(["verify", "--suite", "complexos", "--fixture", str(FIXTURES / "nada.json")]) == SAIDA_ERRO
        assert "FixtureInvalidaError" in capsys.readouterr().err

    def test_verify_ok(self, settings_pequenos, capsys):
        codigo = main(["verify", "--suite", "complexos,hga", "--fixture", str(FIXTURES / "delta1.json")])

        assert codigo == SAIDA_OK
        assert "IDENTIDADES VALEM" in capsys.readouterr().out

    def test_verify_em_todas_as_fixtures(self, settings_pequenos, tmp_path):
        """Sem --suite nem --fixture: todas as suítes em todas as fixtures da pasta."""
        saida = tmp_path / "verify.txt"

        codigo = main(["verify", "--out", str(saida)])

        texto = saida.read_text(encoding="utf-8")
        assert codigo == SAIDA_OK, texto
        assert "IDENTIDADES VALEM" in texto

    def test_mutacao_sai_com_um(self, settings_pequenos, capsys):
        """--sinal-e -1 quebra a torção de 𝐄 e o código de saída é 1."""
        codigo = main([
            "verify", "--suite", "hga", "--sinal-e", "-1", "--fixture", str(FIXTURES / "delta1.json"),
        ])

        assert codigo == SAIDA_VIOLACAO
        assert "testemunha" in capsys.readouterr().out

    def test_relatorio_deterministico(self, settings_pequenos, tmp_path):
        """Duas execuções iguais produzem o mesmo arquivo, byte a byte."""
        saidas = [tmp_path / "a.txt", tmp_path / "b.txt"]
        for saida in saidas:
            main([
                "shc-compare", "--nmax", "2", "--fixture", str(FIXTURES / "delta1.json"), "--out", str(saida),
            ])

        assert saidas[0].read_bytes() == saidas[1].read_bytes()
        assert "shc-compare" in saidas[0].read_text(encoding="utf-8")

    def test_tor(self, settings_pequenos, tmp_path):
        saida = tmp_path / "tor.txt"

        codigo = main(["tor", "--fixture", str(FIXTURES / "tripla_pt_s2_pt.json"), "--out", str(saida)])

        assert codigo == SAIDA_OK
        assert "e0_0*e1_0 = (1)" in saida.read_text(encoding="utf-8")


class TestVerificadorHomologico:

    def test_mapa_vira_tripla(self):
        """Um arquivo de mapa f: X → B vira (X, B, B) com p = 1."""
        config = RunConfig(fixtures=[str(FIXTURES / "mapa_s1_s2.json")], suites=[])
        conjuntos, triplas = VerificadorHomologico(config).carregar_fixtures()

        assert conjuntos == []
        assert triplas[0].nome == "mapa_s1_s2"
        assert triplas[0].p.origem is triplas[0].f.destino

    def test_pasta_padrao(self):
        """Sem --fixture, todas as fixtures da pasta são lidas."""
        conjuntos, triplas = VerificadorHomologico(RunConfig(suites=[])).carregar_fixtures()

        assert "Δ2" in {X.nome for X in conjuntos}
        assert "(pt, S2, pt)" in {t.nome for t in triplas}
