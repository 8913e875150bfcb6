"""
Testes para a contração de Eilenberg–Zilber e a transferência de
Gugenheim–Munkholm.
"""

import pytest

from src.models.simplicial import NormalFormSimplex
from src.services.cadeias import Cocadeia, CochainAlgebra
from src.services.cortes_intervalo import phi_hga
from src.services.eilenberg_zilber import EilenbergZilber
from src.services.gugenheim_munkholm import (
    EstruturaGM,
    TransferenciaGM,
    check_gkgl,
    compare_shc,
    contracao_ez,
    eh_intervalo,
    instancias_h_alpha_beta,
    phi_gm,
    verify_ainf_coalgebra_morphism,
    verify_secao,
)
from src.services.produto_simplicial import product
from src.validators.exceptions import GrauIncompativelError


@pytest.fixture
def ez_quadrado(delta1, anel):
    """Contração de Δ¹×Δ¹."""
    return EilenbergZilber(product(delta1, delta1), anel)


@pytest.fixture
def gm_quadrado(ez_quadrado):
    """Gₙ para Δ¹×Δ¹."""
    return TransferenciaGM(ez_quadrado)


class TestEilenbergZilber:
    """Testes para EilenbergZilber."""

    def test_identidades_no_quadrado(self, ez_quadrado):
        """AW∘sh = 1, d(h) = sh∘AW − 1 e as condições laterais valem em Δ¹×Δ¹."""
        assert ez_quadrado.violacoes_contracao() == []

    def test_identidades_com_esfera(self, delta1, s2, anel):
        """As identidades valem também em Δ¹×S², com faces degeneradas."""
        assert EilenbergZilber(product(delta1, s2), anel).violacoes_contracao() == []

    def test_shuffle_de_duas_arestas(self, ez_quadrado, delta1):
        """sh(v01⊗v01) é a soma com sinal dos dois triângulos."""
        v01 = delta1.simplexo("v01")
        sh = ez_quadrado.shuffle_chave((v01, v01))

        assert len(sh) == 2
        assert all(z.dim == 2 for z in sh.chaves())
        assert sorted(c for _, c in sh.items()) == sorted([sh.anel.um, -sh.anel.um])

    def test_aw_do_vertice(self, ez_quadrado):
        """AW de um vértice (u, v) é u⊗v."""
        z = ez_quadrado.XY.basepoint
        u, v = z.id

        assert ez_quadrado.aw_chave(z).chaves() == [(u.base, v.base)]

    def test_contracao_construida(self, ez_quadrado):
        """A contração empacotada passa na verificação da construção."""
        contracao = contracao_ez(ez_quadrado)

        assert contracao.violacoes() == []


class TestTransferenciaGM:
    """Testes para TransferenciaGM."""

    def test_G1_e_AW(self, gm_quadrado, ez_quadrado):
        """G₁ é Alexander–Whitney, com chaves de um só par."""
        for z in ez_quadrado.XY.todos():
            esperado = {(par,): c for par, c in ez_quadrado.aw_chave(z).items()}
            assert dict(gm_quadrado.G(1, z).items()) == esperado

    def test_G_zero_em_grau_baixo(self, gm_quadrado, ez_quadrado):
        """Gₙ(z) = 0 quando dim z < n − 1."""
        vertice = ez_quadrado.XY.basepoint

        assert not gm_quadrado.G(3, vertice)

    def test_G_indefinido(self, gm_quadrado, ez_quadrado):
        """G₀ não existe."""
        with pytest.raises(GrauIncompativelError):
            gm_quadrado.G(0, ez_quadrado.XY.basepoint)

    def test_morfismo_de_coalgebras(self, gm_quadrado):
        """G é A∞-morfismo de coálgebras até n = 3."""
        assert verify_ainf_coalgebra_morphism(gm_quadrado, 3, "Δ1").ok

    def test_secao(self, gm_quadrado):
        """f∘G = 1 componente a componente."""
        assert verify_secao(gm_quadrado, 3, "Δ1").ok

    def test_G_igual_a_psi_projetado(self, gm_quadrado):
        """Gₙ = (p_X⊗p_Y)^{⊗n} Ψ^hgc_n em Δ¹×Δ¹."""
        resultado = compare_shc(gm_quadrado, 3, "Δ1")

        assert resultado.ok
        assert resultado.casos == 3 * len(gm_quadrado.XY.todos())

    def test_G_igual_a_psi_projetado_no_triangulo(self, delta2, anel):
        """Gₙ = G̃ₙ em Δ²×Δ², n ≤ 3."""
        gm = TransferenciaGM(EilenbergZilber(product(delta2, delta2), anel), verificar=False)

        assert compare_shc(gm, 3, "Δ2").ok


class TestPhiGM:
    """Testes para EstruturaGM e phi_gm."""

    def test_phi_gm_1_e_o_cup(self, delta2, anel):
        """Φ^GM_1 = Φ^hga_1 = ∪ em pares de cocadeias de Δ²."""
        A = CochainAlgebra(delta2, anel)
        estrutura = EstruturaGM(delta2, anel)
        chaves = [Cocadeia(x) for x in delta2.todos() if x.dim <= 1]
        for a in chaves:
            for b in chaves:
                assert estrutura.phi_chaves([(a, b)]) == phi_hga(A, [(a, b)])

    def test_phi_gm_2_na_aresta(self, delta1, anel):
        """Φ^GM_2 = Φ^hga_2 em toda a base de C*(Δ¹)."""
        A = CochainAlgebra(delta1, anel)
        estrutura = EstruturaGM(delta1, anel)
        chaves = [Cocadeia(x) for x in delta1.todos()]
        for a1 in chaves:
            for b1 in chaves:
                for a2 in chaves:
                    for b2 in chaves:
                        pares = [(a1, b1), (a2, b2)]
                        assert estrutura.phi_chaves(pares) == phi_hga(A, pares)

    def test_numero_de_pares(self, delta1, anel):
        """phi_gm exige exatamente n pares."""
        w = Cocadeia(delta1.simplexo("v0"))

        with pytest.raises(GrauIncompativelError):
            phi_gm(delta1, 2, [(w, w)], anel)


class TestAnulamentoHAlphaBeta:
    """Testes para check_gkgl."""

    def test_eh_intervalo(self):
        """(2, 3, 4) é intervalo; (1, 3) não é."""
        assert eh_intervalo((2, 3, 4))
        assert not eh_intervalo((1, 3))

    @pytest.mark.parametrize("n", [2, 3])
    def test_anulamento_no_quadrado(self, ez_quadrado, n):
        """As três afirmações do lema valem em todas as instâncias de Δ¹×Δ¹."""
        instancias = list(instancias_h_alpha_beta(ez_quadrado.XY, 1))

        assert instancias
        assert check_gkgl(ez_quadrado, n, instancias, "Δ1").ok

    def test_instancias_no_dominio(self, delta2, delta1, anel):
        """Toda instância tem p + q < m e dimensões m − q, m − p."""
        ez = EilenbergZilber(product(delta2, delta1), anel)

        instancias = list(instancias_h_alpha_beta(ez.XY, 3))

        assert instancias
        for alfa, beta, x, y, m, p, q in instancias:
            assert p + q < m
            assert (x.dim, y.dim) == (m - q, m - p)
            z = ez.h_alpha_beta(alfa, beta, NormalFormSimplex.nao_degenerado(x), NormalFormSimplex.nao_degenerado(y))
            assert all(k.dim == m + 1 for k in z.chaves())

    def test_sem_instancias_em_m_zero(self, ez_quadrado):
        assert list(instancias_h_alpha_beta(ez_quadrado.XY, 0)) == []

    def test_h_alpha_beta_fora_do_dominio(self, ez_quadrado, delta1):
        """Com p + q ≥ m o erro é de grau, não de simplexo."""
        v0 = NormalFormSimplex.nao_degenerado(delta1.simplexo("v0"))

        with pytest.raises(GrauIncompativelError) as exc_info:
            ez_quadrado.h_alpha_beta((), (0,), v0, v0)

        assert "p + q < m" in str(exc_info.value)
