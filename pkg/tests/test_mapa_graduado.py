"""
Testes para complexos e mapas graduados.
"""

import pytest

from src.models.mapa_graduado import (
    Desuspended,
    Dual,
    GradedMap,
    desuspend,
    diff_of_map,
    identidade,
    tensor_maps,
    transpose_map,
)
from src.models.vetor import Vector, tensor
from src.services.cadeias import normalized_chains
from src.validators.exceptions import ModuloIncompativelError


@pytest.fixture
def cadeias(delta1, anel):
    """C(Δ¹)."""
    return normalized_chains(delta1, anel)


def base_completa(complexo):
    return [k for n in complexo.graus for k in complexo.base(n)]


class TestDiffOfMap:

    def test_diferencial_e_ciclo(self, cadeias):
        """d(d) = d∘d + d∘d = 0."""
        d = cadeias.diferencial
        dd = diff_of_map(d, d, d)

        assert dd.grau == -2
        assert all(not dd.acao(k) for k in base_completa(cadeias))

    def test_identidade_e_mapa_de_cadeias(self, cadeias):
        um = identidade(cadeias)

        assert all(not diff_of_map(um, cadeias.diferencial, cadeias.diferencial).acao(k)
                   for k in base_completa(cadeias))

    def test_diferenciais_errados(self, cadeias, delta2, anel):
        outro = normalized_chains(delta2, anel)

        with pytest.raises(ModuloIncompativelError):
            diff_of_map(identidade(cadeias), outro.diferencial, cadeias.diferencial)


class TestTensorMaps:

    def test_origem_e_destino_sao_produtos(self, cadeias):
        """d⊗1 age entre C⊗C e C⊗C, com base de pares."""
        T = tensor_maps(cadeias.diferencial, identidade(cadeias))

        assert T.grau == -1
        assert len(T.origem.base(0)) == 4
        assert T.origem.finito

    def test_sinal_de_koszul(self, delta1, cadeias, anel):
        """(d⊗d)(e⊗e) = (−1)^{|d||e|} de⊗de = −de⊗de."""
        e = delta1.simplexo("v01")
        de = cadeias.diferencial_chave(e)

        imagem = tensor_maps(cadeias.diferencial, cadeias.diferencial).acao((e, e))

        assert imagem == tensor(de, de).escalar(anel.sinal(1))

    def test_diff_of_map_no_produto(self, cadeias):
        """d⊗1 comuta com d_⊗ a menos do sinal: d(d⊗1) = 0."""
        T = tensor_maps(cadeias.diferencial, identidade(cadeias))
        dT = diff_of_map(T, T.origem.diferencial, T.destino.diferencial)

        assert all(not dT.acao(k) for k in base_completa(T.origem))

    def test_transposto_do_produto(self, delta1, cadeias, anel):
        v0 = delta1.simplexo("v0")
        T = transpose_map(tensor_maps(identidade(cadeias), identidade(cadeias)))

        assert T.acao(Dual((v0, v0))) == Vector.basis(anel, Dual((v0, v0)))

    def test_exige_complexos(self, cadeias):
        solto = GradedMap(0, lambda k: k, None, None, "g")

        with pytest.raises(ModuloIncompativelError):
            tensor_maps(identidade(cadeias), solto)


class TestTransposeEDesuspend:

    def test_transposto_do_bordo(self, delta1, cadeias, anel):
        """d*(v1*) = v01*, pois d(v01) = v1 − v0."""
        dt = transpose_map(cadeias.diferencial)

        assert dt.acao(Dual(delta1.simplexo("v1"))) == Vector.basis(anel, Dual(delta1.simplexo("v01")))

    def test_dessuspensao(self, delta1, cadeias, anel):
        """s⁻¹C tem a aresta em grau 0 e d(s⁻¹x) = −s⁻¹(dx)."""
        D = desuspend(cadeias)
        e = Desuspended(delta1.simplexo("v01"))
        v0, v1 = (Desuspended(delta1.simplexo(v)) for v in ("v0", "v1"))

        assert D.base(0) == [e]
        assert D.diferencial_chave(e) == Vector.basis(anel, v0) - Vector.basis(anel, v1)
        assert D.verificar_d2() == []
