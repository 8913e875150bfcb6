"""
Testes para os sinais de Koszul.
"""

import pytest
from hypothesis import given, strategies as st

from src.models.koszul import Mapa, koszul_sign, sinal_ks
from src.validators.exceptions import ComprimentoInvalidoError, PermutacaoInvalidaError


class TestKoszulSign:
    """Testes para koszul_sign."""

    def test_troca_de_dois_impares(self):
        """Deve dar −1 ao trocar dois elementos de grau ímpar."""
        assert koszul_sign([1, 0], [1, 1]) == -1

    def test_troca_com_par(self):
        """Não deve mudar o sinal quando um dos elementos é par."""
        assert koszul_sign([1, 0], [2, 1]) == 1

    def test_ciclo_de_tres_impares(self):
        """Deve dar +1 no 3-ciclo de elementos ímpares."""
        assert koszul_sign([2, 0, 1], [1, 1, 1]) == 1

    def test_indices_a_partir_de_um_rejeitados(self):
        """Índices começam em 0: [3, 1, 2] não é permutação de {0, 1, 2}."""
        with pytest.raises(PermutacaoInvalidaError):
            koszul_sign([3, 1, 2], [1, 1, 1])

    def test_permutacao_sem_zero_nao_e_reinterpretada(self):
        """[1, 2] para dois graus fica fora de {0, 1} e é rejeitada."""
        with pytest.raises(PermutacaoInvalidaError):
            koszul_sign([1, 2], [1, 1])

    def test_identidade(self):
        """A identidade tem sinal +1."""
        assert koszul_sign([0, 1, 2], [1, 3, 5]) == 1

    def test_tamanhos_diferentes(self):
        """Deve rejeitar permutação e graus de tamanhos diferentes."""
        with pytest.raises(ComprimentoInvalidoError):
            koszul_sign([0, 1], [1])

    def test_nao_permutacao(self):
        """Deve rejeitar índices repetidos."""
        with pytest.raises(PermutacaoInvalidaError) as exc_info:
            koszul_sign([0, 0], [1, 1])

        assert "[0, 0]" in str(exc_info.value)

    @given(st.permutations(list(range(5))), st.lists(st.integers(-3, 3), min_size=5, max_size=5))
    def test_composicao_com_inversa(self, perm, graus):
        """O sinal de σ vezes o de σ⁻¹ (nos graus permutados) deve ser +1."""
        inversa = [perm.index(i) for i in range(5)]
        permutados = [graus[i] for i in perm]
        assert koszul_sign(perm, graus) * koszul_sign(inversa, permutados) == 1

    @given(st.permutations(list(range(4))), st.lists(st.integers(-4, 4).map(lambda g: 2 * g), min_size=4, max_size=4))
    def test_graus_pares_nao_trocam_sinal(self, perm, graus):
        """Com todos os graus pares o sinal é sempre +1."""
        assert koszul_sign(perm, graus) == 1


class TestSinalKs:
    """Testes para sinal_ks."""

    def test_mapa_passando_por_variavel_impar(self):
        """Um mapa ímpar escrito depois de uma variável ímpar custa −1."""
        assert sinal_ks([1, 1], [0, Mapa(1), 1]) == -1

    def test_mapa_no_inicio(self):
        """Um mapa escrito antes de todas as variáveis não custa nada."""
        assert sinal_ks([1, 1], [Mapa(1), 0, 1]) == 1

    def test_combina_permutacao_e_mapa(self):
        """Deve multiplicar o sinal da permutação pelo custo do mapa."""
        assert sinal_ks([1, 1], [1, Mapa(1), 0]) == 1
