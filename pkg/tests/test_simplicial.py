"""
Testes para conjuntos simpliciais finitos, formas normais, mapas,
produtos e pull-backs.
"""

import pytest

from src.models.simplicial import (
    FiniteSimplicialSet,
    NormalFormSimplex,
    SimplexRef,
    SimplicialMap,
    esfera_minima,
    simplexo_padrao,
)
from src.services.produto_simplicial import diagonal, product, projecao, pullback
from src.services.tor_service import identidade_simplicial
from src.validators.exceptions import MapaSimplicialInvalidoError, SimplexoInvalidoError


@pytest.fixture
def vertice():
    """Vértice solto usado nas formas normais."""
    return SimplexRef("v", 0)


class TestNormalFormSimplex:
    """Testes para NormalFormSimplex."""

    def test_degeneracias_ordenadas(self, vertice):
        """s1 s0 v tem dimensão 2 e degenerescências (1, 0)."""
        x = NormalFormSimplex.de_degeneracias(vertice, [1, 0])

        assert x.dim == 2
        assert x.degeneracias == (1, 0)
        assert x.eh_degenerado

    def test_identidade_simplicial_das_degeneracias(self):
        """s_i s_j = s_{j+1} s_i para i ≤ j."""
        aresta = SimplexRef("a", 1)
        nf = NormalFormSimplex.nao_degenerado(aresta)

        assert nf.degenerar(1).degenerar(0) == nf.degenerar(0).degenerar(2)

    def test_indice_invalido(self, vertice):
        """s_1 não existe em dimensão 0."""
        with pytest.raises(SimplexoInvalidoError):
            NormalFormSimplex.de_degeneracias(vertice, [1])

    def test_de_conjunto(self):
        """Deve reconstruir a forma normal pelo conjunto de degenerescências."""
        aresta = SimplexRef("a", 1)
        x = NormalFormSimplex.de_conjunto(aresta, {0}, 2)

        assert x == NormalFormSimplex.nao_degenerado(aresta).degenerar(0)


class TestFiniteSimplicialSet:
    """Testes para FiniteSimplicialSet."""

    def test_faces_do_simplexo_padrao(self, delta2):
        """∂₀v012 = v12 e ∂₂v012 = v01."""
        topo = NormalFormSimplex.nao_degenerado(delta2.simplexo("v012"))

        assert delta2.face(topo, 0).base == delta2.simplexo("v12")
        assert delta2.face(topo, 2).base == delta2.simplexo("v01")

    def test_faces_degeneradas_da_esfera(self, s2):
        """As faces da célula de S² são todas s0 * degenerado."""
        celula = NormalFormSimplex.nao_degenerado(s2.nao_degenerados(2)[0])

        for i in range(3):
            face = s2.face(celula, i)
            assert face.eh_degenerado
            assert face.base == s2.basepoint

    def test_frente_e_verso(self, delta2):
        """Faces frontal e traseira de v012."""
        topo = NormalFormSimplex.nao_degenerado(delta2.simplexo("v012"))

        assert delta2.frente(topo, 1).base.id == "v01"
        assert delta2.verso(topo, 1).base.id == "v12"

    def test_simplexo_inexistente(self, delta1):
        """Deve rejeitar ids desconhecidos."""
        with pytest.raises(SimplexoInvalidoError):
            delta1.simplexo("v7")

    def test_face_fora_do_intervalo(self, delta1):
        """∂₂ não existe em dimensão 1."""
        aresta = NormalFormSimplex.nao_degenerado(delta1.simplexo("v01"))

        with pytest.raises(SimplexoInvalidoError):
            delta1.face(aresta, 2)

    def test_identidade_simplicial_violada(self):
        """Uma tabela de faces inconsistente deve ser rejeitada na validação."""
        a, b, c = SimplexRef("a", 0), SimplexRef("b", 0), SimplexRef("c", 0)
        ab, bc, ac = SimplexRef("ab", 1), SimplexRef("bc", 1), SimplexRef("ac", 1)
        t = SimplexRef("t", 2)
        nf = NormalFormSimplex.nao_degenerado
        faces = {
            "ab": (nf(b), nf(a)),
            "bc": (nf(c), nf(b)),
            "ac": (nf(c), nf(a)),
            # ∂₀ e ∂₁ trocadas
            "t": (nf(ac), nf(bc), nf(ab)),
        }

        with pytest.raises(SimplexoInvalidoError) as exc_info:
            FiniteSimplicialSet("ruim", {0: [a, b, c], 1: [ab, bc, ac], 2: [t]}, faces, a)

        assert "Identidade simplicial" in str(exc_info.value)

    def test_ponto_base_invalido(self, delta1):
        """O ponto base precisa ser vértice do conjunto."""
        with pytest.raises(SimplexoInvalidoError):
            FiniteSimplicialSet("Δ1", delta1.simplices, delta1.faces, delta1.simplexo("v01"))

    def test_esfera_minima(self):
        """Sⁿ mínima tem um vértice e uma célula."""
        s3 = esfera_minima(3)

        assert {d: len(s) for d, s in s3.simplices.items()} == {0: 1, 3: 1}


class TestSimplicialMap:
    """Testes para SimplicialMap."""

    def test_mapa_constante(self, delta1, s2):
        """Δ¹ → S² constante no ponto base é simplicial."""
        v = NormalFormSimplex.nao_degenerado(s2.basepoint)
        imagens = {
            delta1.simplexo("v0"): v,
            delta1.simplexo("v1"): v,
            delta1.simplexo("v01"): v.degenerar(0),
        }
        f = SimplicialMap(delta1, s2, imagens)

        assert f.aplicar(NormalFormSimplex.nao_degenerado(delta1.simplexo("v01"))).eh_degenerado

    def test_mapa_nao_comuta_com_faces(self, delta1):
        """v01 ↦ v01 com v0 ↦ v1 não comuta com ∂₁."""
        nf = NormalFormSimplex.nao_degenerado
        imagens = {
            delta1.simplexo("v0"): nf(delta1.simplexo("v0")),
            delta1.simplexo("v1"): nf(delta1.simplexo("v0")),
            delta1.simplexo("v01"): nf(delta1.simplexo("v01")),
        }

        with pytest.raises(MapaSimplicialInvalidoError):
            SimplicialMap(delta1, delta1, imagens)

    def test_ponto_base_nao_preservado(self, delta1):
        """Trocar os vértices de Δ¹ não preserva o ponto base."""
        nf = NormalFormSimplex.nao_degenerado
        imagens = {
            delta1.simplexo("v0"): nf(delta1.simplexo("v1")),
            delta1.simplexo("v1"): nf(delta1.simplexo("v1")),
            delta1.simplexo("v01"): nf(delta1.simplexo("v1")).degenerar(0),
        }

        with pytest.raises(MapaSimplicialInvalidoError) as exc_info:
            SimplicialMap(delta1, delta1, imagens)

        assert "Ponto base" in str(exc_info.value)

    def test_falta_imagem(self, delta1):
        """Deve exigir imagem para todo simplexo não degenerado."""
        with pytest.raises(MapaSimplicialInvalidoError):
            SimplicialMap(delta1, delta1, {})


class TestProdutoSimplicial:
    """Testes para produtos, pull-backs e diagonais."""

    def test_quadrado(self, delta1):
        """Δ¹×Δ¹ tem 4 vértices, 5 arestas e 2 triângulos."""
        P = product(delta1, delta1)

        assert {d: len(s) for d, s in P.simplices.items()} == {0: 4, 1: 5, 2: 2}

    def test_produto_satisfaz_identidades(self, delta1):
        """O produto materializado passa na validação de faces."""
        product(delta1, delta1).validar()

    def test_produto_com_esfera(self, delta1, s2):
        """Δ¹×S² tem células de dimensão até 3."""
        P = product(delta1, s2)

        assert P.dimensao == 3
        P.validar()

    def test_pullback_pela_identidade(self, s2):
        """S¹ ×_{S²} S² com p = 1 é S¹."""
        s1 = esfera_minima(1)
        v = NormalFormSimplex.nao_degenerado(s2.basepoint)
        f = SimplicialMap(s1, s2, {s1.basepoint: v, s1.nao_degenerados(1)[0]: v.degenerar(0)})
        P = pullback(f, identidade_simplicial(s2))

        assert {d: len(s) for d, s in P.simplices.items()} == {0: 1, 1: 1}

    def test_pullback_exige_mesmo_destino(self, delta1, delta2):
        """Mapas com destinos diferentes não formam pull-back."""
        with pytest.raises(SimplexoInvalidoError):
            pullback(identidade_simplicial(delta1), identidade_simplicial(delta2))

    def test_diagonal_e_projecoes(self, delta1):
        """p_X ∘ Δ = 1 em todos os simplexos."""
        P = product(delta1, delta1)
        d = diagonal(delta1, P)
        p = projecao(P, 0)

        for x in delta1.todos():
            assert p.aplicar(d.aplicar(NormalFormSimplex.nao_degenerado(x))) == NormalFormSimplex.nao_degenerado(x)
