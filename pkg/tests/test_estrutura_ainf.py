"""
Testes para a estrutura A∞ em B(A′, A, A″), o A∞-morfismo de colapso
e os lemas da homotopia.
"""

import pytest

from src.models.algebra import AlgebraTruncada, morfismo_identidade
from src.models.barra import PALAVRA_VAZIA, UNIDADE, BarWord, TwoSidedBarElement
from src.models.vetor import Vector
from src.services.cadeias import Cocadeia, CochainAlgebra
from src.services.construcao_barra import ProdutoKS, TwoSidedBar
from src.services.estrutura_ainf import (
    EstruturaAInf,
    HomotopiaBarra,
    barra_sobre_base,
    morfismo_aumento_geral,
    morfismo_colapso,
)
from src.services.tor_service import check_length_filtration, m2_via_shc
from src.services.verificacao_ainf import (
    amostrar_tuplas,
    check_d_h,
    check_diagonal_h,
    check_diagonal_m,
    check_m_after_h,
    check_shift_lemma,
    verify_ainf_algebra,
    verify_ainf_morphism,
    verify_unidade_estrita,
)
from src.validators.exceptions import ModuloIncompativelError


AMOSTRAS = 25
SEMENTE = 11


def chaves_pequenas(barra):
    """Base de B(A′, A, A″) em graus −1..2 com palavras de comprimento ≤ 2."""
    return [x for n in range(-1, 3) for x in barra.base(n, 2)]


@pytest.fixture
def barra_delta1(cocadeias_delta1):
    """B(A, A, A) com A = C*(Δ¹) e mapas identidade."""
    A = cocadeias_delta1
    um = morfismo_identidade(A)
    return TwoSidedBar(A, A, A, um, um)


@pytest.fixture
def estrutura_delta1(barra_delta1):
    return EstruturaAInf(barra_delta1)


@pytest.fixture
def homotopia_delta1(barra_delta1):
    return HomotopiaBarra(barra_delta1)


@pytest.fixture
def chaves_delta1(barra_delta1):
    return chaves_pequenas(barra_delta1)


def amostra(chaves, n):
    return amostrar_tuplas(chaves, n, AMOSTRAS, SEMENTE)


class TestAmostragem:
    """Testes para amostrar_tuplas."""

    def test_todas_as_tuplas_quando_cabem(self):
        """Com poucas chaves devolve o produto cartesiano inteiro."""
        assert amostrar_tuplas(["a", "b"], 2, 10, 0) == [("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")]

    def test_amostra_deterministica(self):
        """A mesma semente gera a mesma amostra."""
        chaves = list(range(20))

        assert amostrar_tuplas(chaves, 3, 15, 4) == amostrar_tuplas(chaves, 3, 15, 4)
        assert len(amostrar_tuplas(chaves, 3, 15, 4)) == 15

    def test_sem_chaves(self):
        assert amostrar_tuplas([], 2, 10, 0) == []


class TestEstruturaAInf:
    """Testes para EstruturaAInf."""

    @pytest.mark.parametrize("n", [2, 3])
    def test_relacoes_ainf_na_aresta(self, estrutura_delta1, chaves_delta1, n):
        """As relações A∞ de mₙ valem em B(C*Δ¹, C*Δ¹, C*Δ¹)."""
        resultado = verify_ainf_algebra(estrutura_delta1.como_estrutura(), n, amostra(chaves_delta1, n), "Δ1")

        assert resultado.ok, resultado.testemunhas

    def test_relacao_m2_no_triangulo(self, delta2, anel):
        """m₂ é mapa de cadeias em B(C*Δ², C*Δ², C*Δ²)."""
        A = CochainAlgebra(delta2, anel)
        um = morfismo_identidade(A)
        barra = TwoSidedBar(A, A, A, um, um)
        chaves = [x for n in (0, 1) for x in barra.base(n, 1)]

        assert verify_ainf_algebra(EstruturaAInf(barra).como_estrutura(), 2, amostra(chaves, 2), "Δ2").ok

    def test_unidade_estrita(self, estrutura_delta1, chaves_delta1):
        """1⊗[]⊗1 é unidade estrita de m."""
        chaves = chaves_delta1[:12]

        assert verify_unidade_estrita(estrutura_delta1.como_estrutura(), 3, chaves, "Δ1").ok

    def test_aumento(self, estrutura_delta1, cocadeias_delta1):
        """O aumento vê só o comprimento 0 e os pontos base."""
        w = Cocadeia(cocadeias_delta1.X.simplexo("v0"))
        x = Cocadeia(cocadeias_delta1.X.simplexo("v01"))

        assert estrutura_delta1.aumento_chave(TwoSidedBarElement(w, PALAVRA_VAZIA, w)) == 1
        assert estrutura_delta1.aumento_chave(TwoSidedBarElement(w, BarWord((x,)), w)) == 0

    def test_aridade_errada(self, estrutura_delta1, chaves_delta1):
        """m_n exige exatamente n argumentos, n ≥ 2."""
        with pytest.raises(ModuloIncompativelError):
            estrutura_delta1.m_chave(3, tuple(chaves_delta1[:2]))
        with pytest.raises(ModuloIncompativelError):
            estrutura_delta1.m_chave(1, tuple(chaves_delta1[:1]))

    def test_exige_hgas(self, anel):
        """Sem operações E não há estrutura A∞ pela barra."""
        R = AlgebraTruncada(anel, 2, 2)
        um = morfismo_identidade(R)

        with pytest.raises(ModuloIncompativelError):
            EstruturaAInf(TwoSidedBar(R, R, R, um, um))

    def test_degeneracao_sobre_base(self, cocadeias_delta1):
        """Em B(𝕜, A, A) m₂ é o produto KS e m₃ se anula."""
        A = cocadeias_delta1
        barra = barra_sobre_base(A, A, morfismo_identidade(A))
        estrutura = EstruturaAInf(barra)
        ks = ProdutoKS(barra)
        chaves = chaves_pequenas(barra)

        for x, y in amostra(chaves, 2):
            assert estrutura.m_chave(2, (x, y)) == ks.produto_chave(x, y)
        for tupla in amostra(chaves, 3):
            assert not estrutura.m_chave(3, tupla)

    def test_m2_via_shc(self, estrutura_delta1, chaves_delta1):
        """m₂ coincide com B(Φ^hga, Φ^hga, Φ^hga)∘sh."""
        assert m2_via_shc(estrutura_delta1, amostra(chaves_delta1, 2), "Δ1").ok

    def test_filtracao_por_comprimento(self, estrutura_delta1, chaves_delta1):
        """m₂ não aumenta o comprimento e o topo é o produto da primeira página."""
        assert check_length_filtration(estrutura_delta1, amostra(chaves_delta1, 2), "Δ1").ok


class TestHomotopiaBarra:
    """Testes para HomotopiaBarra e o A∞-morfismo de colapso."""

    def test_exige_esquerda_igual_ao_meio(self, cocadeias_delta1):
        """S só existe em B(A, A, A″)."""
        A = cocadeias_delta1

        with pytest.raises(ModuloIncompativelError):
            HomotopiaBarra(barra_sobre_base(A, A, morfismo_identidade(A)))

    def test_S_de_vertice(self, homotopia_delta1, cocadeias_delta1, anel):
        """S(v⊗[]⊗1_A) = 1⊗[v]⊗1_A com v = v1* no ideal de aumento."""
        v = Cocadeia(cocadeias_delta1.X.simplexo("v1"))
        w = Cocadeia(cocadeias_delta1.X.simplexo("v0"))
        valor = homotopia_delta1.S_chave(TwoSidedBarElement(v, PALAVRA_VAZIA, w))

        assert valor == Vector.basis(anel, TwoSidedBarElement(UNIDADE, BarWord((v,)), w))

    def test_f1_zera_palavras(self, homotopia_delta1, cocadeias_delta1):
        """f₁ se anula fora do comprimento 0."""
        x = Cocadeia(cocadeias_delta1.X.simplexo("v01"))
        w = Cocadeia(cocadeias_delta1.X.simplexo("v0"))

        assert not homotopia_delta1.f1_chave(TwoSidedBarElement(w, BarWord((x,)), w))
        assert homotopia_delta1.f1_chave(TwoSidedBarElement(w, PALAVRA_VAZIA, x)) == cocadeias_delta1.vetor(x)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_colapso_e_morfismo(self, homotopia_delta1, estrutura_delta1, chaves_delta1, n):
        """(fₙ) é A∞-morfismo B(A, A, A) ⇒ A."""
        f = morfismo_colapso(homotopia_delta1, estrutura_delta1)

        assert verify_ainf_morphism(f, n, amostra(chaves_delta1, n), "Δ1").ok

    def test_morfismo_aumento_geral(self, estrutura_delta1, chaves_delta1, cocadeias_delta1):
        """Com χ′ = χ = χ″ = 1 o morfismo geral também satisfaz as relações."""
        um = morfismo_identidade(cocadeias_delta1)
        f = morfismo_aumento_geral(estrutura_delta1, cocadeias_delta1, um, um, um)

        assert verify_ainf_morphism(f, 2, amostra(chaves_delta1, 2), "Δ1").ok

    def test_lema_do_deslocamento(self, homotopia_delta1, chaves_delta1):
        assert check_shift_lemma(homotopia_delta1, chaves_delta1, "Δ1").ok

    @pytest.mark.parametrize("n", [2, 3])
    def test_lemas_de_diagonal(self, homotopia_delta1, estrutura_delta1, chaves_delta1, n):
        """↔Δ hₙ e ↔Δ mₙ se decompõem como esperado."""
        tuplas = amostra(chaves_delta1, n)

        assert check_diagonal_h(homotopia_delta1, n, tuplas, "Δ1").ok
        assert check_diagonal_m(estrutura_delta1, n, tuplas, "Δ1").ok

    def test_d_de_h(self, homotopia_delta1, estrutura_delta1, chaves_delta1):
        assert check_d_h(estrutura_delta1, homotopia_delta1, 2, amostra(chaves_delta1, 2), "Δ1").ok

    def test_m_apos_h(self, homotopia_delta1, estrutura_delta1, chaves_delta1):
        """m₂(a, h(b, c)) = m₃(a, b, c) ± h(m₂(a, b), c)."""
        assert check_m_after_h(estrutura_delta1, homotopia_delta1, 2, amostra(chaves_delta1, 3), "Δ1").ok
