"""
Testes para o repositório de fixtures simpliciais.
"""

import json

import pytest

from src.infrastructure.simplicial_repository import (
    SimplexoNaoEncontradoError,
    SimplicialRepository,
    conjunto_from_dict,
)
from src.validators.exceptions import FixtureInvalidaError, MapaSimplicialInvalidoError, SimplexoInvalidoError


DELTA1 = {
    "tipo": "conjunto",
    "nome": "Δ1",
    "basepoint": "v0",
    "simplices": {"0": ["v0", "v1"], "1": ["v01"]},
    "faces": {"v01": [[[], "v1"], [[], "v0"]]},
}


def escrever(pasta, nome, conteudo):
    caminho = pasta / nome
    if isinstance(conteudo, str):
        caminho.write_text(conteudo, encoding="utf-8")
    else:
        caminho.write_text(json.dumps(conteudo, ensure_ascii=False), encoding="utf-8")
    return caminho


class TestCarregamento:
    """Testes de leitura das fixtures do projeto."""

    def test_esfera(self, repositorio):
        """s2_min.json tem um vértice e uma célula de dimensão 2."""
        S2 = repositorio.carregar("s2_min.json")

        assert {d: len(s) for d, s in S2.simplices.items()} == {0: 1, 2: 1}
        assert S2.basepoint.id == "*"

    def test_cache(self, repositorio):
        """O mesmo arquivo devolve o mesmo objeto."""
        assert repositorio.carregar("delta2.json") is repositorio.carregar("delta2.json")
        assert len(repositorio) == 1

    def test_mapa(self, repositorio):
        """mapa_s1_s2.json é o mapa constante S¹ → S²."""
        f = repositorio.carregar_mapa("mapa_s1_s2.json")

        assert f.origem.nome == repositorio.carregar("s1_min.json").nome
        assert f.destino is repositorio.carregar("s2_min.json")

    def test_tripla(self, tripla_esfera):
        assert tripla_esfera.nome == "(pt, S2, pt)"
        assert tripla_esfera.f.destino is tripla_esfera.p.destino

    def test_tipos(self, repositorio):
        assert repositorio.tipo("delta1.json") == "conjunto"
        assert repositorio.tipo("mapa_s1_s2.json") == "mapa"
        assert repositorio.tipo("tripla_delta2.json") == "tripla"

    def test_listar(self, repositorio):
        nomes = [c.name for c in repositorio.listar()]

        assert "delta2.json" in nomes
        assert nomes == sorted(nomes)

    def test_evento_de_carga(self, repositorio, eventos):
        repositorio.carregar("delta1.json")

        assert eventos.nomes() == ["FIXTURE_CARREGADA"]
        assert eventos.eventos[0][1]["simplexos"] == {0: 2, 1: 1}


class TestErros:
    """Testes de fixtures inválidas."""

    def test_arquivo_inexistente(self, tmp_path):
        with pytest.raises(FixtureInvalidaError) as exc_info:
            SimplicialRepository(tmp_path).carregar("nada.json")

        assert "não encontrado" in str(exc_info.value)

    def test_json_invalido(self, tmp_path):
        escrever(tmp_path, "ruim.json", "{ nome: ")

        with pytest.raises(FixtureInvalidaError):
            SimplicialRepository(tmp_path).carregar("ruim.json")

    def test_campo_faltando(self):
        with pytest.raises(FixtureInvalidaError):
            conjunto_from_dict({"nome": "sem simplexos", "basepoint": "v0"})

    def test_face_inexistente(self):
        dados = dict(DELTA1, faces={"v01": [[[], "v1"], [[], "v9"]]})

        with pytest.raises(SimplexoNaoEncontradoError) as exc_info:
            conjunto_from_dict(dados)

        assert "v9" in str(exc_info.value)

    def test_ponto_base_inexistente(self):
        with pytest.raises(SimplexoNaoEncontradoError):
            conjunto_from_dict(dict(DELTA1, basepoint="w"))

    def test_faces_inconsistentes(self):
        """Trocar ∂₀ e ∂₁ do triângulo quebra ∂₀∂₂ = ∂₁∂₀."""
        dados = {
            "nome": "Δ2 ruim",
            "basepoint": "a",
            "simplices": {"0": ["a", "b", "c"], "1": ["ab", "bc", "ac"], "2": ["t"]},
            "faces": {
                "ab": [[[], "b"], [[], "a"]],
                "bc": [[[], "c"], [[], "b"]],
                "ac": [[[], "c"], [[], "a"]],
                "t": [[[], "ac"], [[], "bc"], [[], "ab"]],
            },
        }

        with pytest.raises(SimplexoInvalidoError):
            conjunto_from_dict(dados)

    def test_tipo_errado(self, tmp_path):
        """Carregar um conjunto como mapa é erro."""
        escrever(tmp_path, "delta1.json", DELTA1)

        with pytest.raises(FixtureInvalidaError):
            SimplicialRepository(tmp_path).carregar_mapa("delta1.json")

    def test_mapa_sem_ponto_base(self, tmp_path):
        """v0 ↦ v1 não preserva o ponto base."""
        escrever(tmp_path, "delta1.json", DELTA1)
        escrever(tmp_path, "mapa.json", {
            "tipo": "mapa",
            "origem": "delta1.json",
            "destino": "delta1.json",
            "imagens": {"v0": [[], "v1"], "v1": [[], "v1"], "v01": [[0], "v1"]},
        })

        with pytest.raises(MapaSimplicialInvalidoError):
            SimplicialRepository(tmp_path).carregar_mapa("mapa.json")

    def test_mapa_com_simplexo_desconhecido(self, tmp_path):
        escrever(tmp_path, "delta1.json", DELTA1)
        escrever(tmp_path, "mapa.json", {
            "tipo": "mapa",
            "origem": "delta1.json",
            "destino": "delta1.json",
            "imagens": {"v0": [[], "v0"], "v7": [[], "v1"]},
        })

        with pytest.raises(SimplexoNaoEncontradoError):
            SimplicialRepository(tmp_path).carregar_mapa("mapa.json")

    def test_tripla_sem_campo(self, tmp_path):
        escrever(tmp_path, "delta1.json", DELTA1)
        escrever(tmp_path, "tripla.json", {"tipo": "tripla", "X": "delta1.json"})

        with pytest.raises(FixtureInvalidaError) as exc_info:
            SimplicialRepository(tmp_path).carregar_tripla("tripla.json")

        assert "'B'" in str(exc_info.value)
