"""
Testes para as operações de corte em intervalos: diagonal, E^k, Ψ^hgc e Φ^hga.
"""

from src.models.barra import UNIDADE
from src.models.algebra import AlgebraBase
from src.models.simplicial import simplexo_padrao
from src.models.sobrejecao import Surjection
from src.models.vetor import Vector
from src.services.cadeias import Cocadeia, CochainAlgebra
from src.services.cortes_intervalo import diagonal_cadeias, hgc_E, interval_cut, phi_hga, psi_hgc


class TestDiagonal:
    """Testes para diagonal_cadeias."""

    def test_aresta(self, delta1, anel):
        """Δ(v01) = v0⊗v01 + v01⊗v1."""
        v0, v1, v01 = (delta1.simplexo(n) for n in ("v0", "v1", "v01"))
        esperado = Vector.somar(anel, [((v0, v01), anel.um), ((v01, v1), anel.um)])

        assert diagonal_cadeias(delta1, v01, anel) == esperado

    def test_triangulo_tem_tres_termos(self, delta2, anel):
        """AW de v012 tem um termo por vértice de corte."""
        assert len(diagonal_cadeias(delta2, delta2.simplexo("v012"), anel)) == 3

    def test_descarta_faces_degeneradas(self, s2, anel):
        """Na esfera mínima só sobram * ⊗ σ e σ ⊗ *."""
        celula = s2.nao_degenerados(2)[0]
        termos = diagonal_cadeias(s2, celula, anel)

        assert sorted(termos.chaves(), key=repr) == sorted(
            [(s2.basepoint, celula), (celula, s2.basepoint)], key=repr
        )


class TestOperacoesE:
    """Testes para hgc_E."""

    def test_E0_e_identidade(self, delta2, anel):
        """E⁰ devolve o próprio simplexo."""
        x = delta2.simplexo("v012")

        assert hgc_E(delta2, 0, x, anel) == Vector.basis(anel, (x,))

    def test_E1_na_aresta(self, delta1, anel):
        """E¹(v01) tem um único termo v01⊗v01."""
        v01 = delta1.simplexo("v01")
        valor = hgc_E(delta1, 1, v01, anel)

        assert valor.chaves() == [(v01, v01)]

    def test_E1_em_vertice(self, delta1, anel):
        """E^k se anula em simplexos de dimensão menor que k."""
        assert not hgc_E(delta1, 1, delta1.simplexo("v0"), anel)

    def test_E2_em_grau_baixo(self, delta1, anel):
        """E² se anula em cadeias de grau ≤ 1."""
        for x in delta1.todos():
            assert not hgc_E(delta1, 2, x, anel)

    def test_E2_no_triangulo(self, delta2, anel):
        """E²(v012) é não nulo e os fatores somam dim x + 2."""
        valor = hgc_E(delta2, 2, delta2.simplexo("v012"), anel)

        assert valor
        for chave, _ in valor.items():
            assert sum(x.dim for x in chave) == 2 + 2

    def test_corte_de_grau_zero_respeita_sobrejecao(self, delta2, anel):
        """AW_{(1,2,3)} é a diagonal iterada, sem sinais."""
        valor = interval_cut(delta2, Surjection((1, 2, 3)), delta2.simplexo("v012"), anel)

        assert all(c == anel.um for _, c in valor.items())


class TestPsiHgc:
    """Testes para psi_hgc."""

    def test_n_igual_a_1_e_a_diagonal(self, delta2, anel):
        """Ψ^hgc_1 é a diagonal de Alexander–Whitney."""
        x = delta2.simplexo("v012")

        assert psi_hgc(delta2, 1, x, anel) == diagonal_cadeias(delta2, x, anel)

    def test_n_igual_a_2_tem_grau_um(self, delta2, anel):
        """Ψ^hgc_2 tem grau 1: os fatores somam dim x + 1."""
        x = delta2.simplexo("v012")

        for chave, _ in psi_hgc(delta2, 2, x, anel).items():
            assert len(chave) == 4
            assert sum(y.dim for y in chave) == x.dim + 1


class TestPhiHga:
    """Testes para phi_hga."""

    def test_n_igual_a_1_e_o_produto(self, cocadeias_delta1, delta1):
        """Φ^hga_1(a⊗b) = ab."""
        A = cocadeias_delta1
        w, x = Cocadeia(delta1.simplexo("v0")), Cocadeia(delta1.simplexo("v01"))

        assert phi_hga(A, [(w, x)]) == A.produto_chaves(w, x)

    def test_cdga_tem_componentes_superiores_nulas(self, anel):
        """Numa hga com E_k = 0 (k ≥ 1), Φ_n = 0 para n ≥ 2."""
        k = AlgebraBase(anel)

        assert not phi_hga(k, [(UNIDADE, UNIDADE), (UNIDADE, UNIDADE)])
        assert not phi_hga(k, [(UNIDADE, UNIDADE)] * 3)

    def test_ponto_tem_componentes_superiores_nulas(self, anel):
        """C*(pt) é comutativa: Φ_2 se anula."""
        pt = simplexo_padrao(0)
        A = CochainAlgebra(pt, anel)
        v = A.base(0)[0]

        assert not phi_hga(A, [(v, v), (v, v)])

    def test_grau_de_phi_2(self, delta2, anel):
        """Φ^hga_2 tem grau −1."""
        A = CochainAlgebra(delta2, anel)
        a = Cocadeia(delta2.simplexo("v01"))
        b = Cocadeia(delta2.simplexo("v12"))
        w = Cocadeia(delta2.simplexo("v0"))

        for chave, _ in phi_hga(A, [(a, w), (w, b)]).items():
            assert chave.grau == 2 - 1
