"""
Fixtures compartilhadas pelos testes.
"""

import pytest

from src.infrastructure.event_logger import MemoryLogger, logger
from src.infrastructure.settings_loader import RAIZ_PROJETO
from src.infrastructure.simplicial_repository import SimplicialRepository
from src.models.configuracao import RunConfig
from src.models.escalares import CoefficientRing
from src.models.simplicial import bordo_simplexo, esfera_minima, simplexo_padrao
from src.services.cadeias import CochainAlgebra


@pytest.fixture
def anel():
    """Racionais, o anel padrão."""
    return CoefficientRing.de_texto("q")


@pytest.fixture
def delta1():
    """Δ¹ com ponto base v0."""
    return simplexo_padrao(1)


@pytest.fixture
def delta2():
    """Δ² com ponto base v0."""
    return simplexo_padrao(2)


@pytest.fixture
def s2():
    """S² com um vértice e uma célula de dimensão 2."""
    return esfera_minima(2)


@pytest.fixture
def circulo():
    """∂Δ², um círculo com três vértices."""
    return bordo_simplexo(2)


@pytest.fixture
def cocadeias_delta1(delta1, anel):
    """C*(Δ¹) sobre ℚ."""
    return CochainAlgebra(delta1, anel)


@pytest.fixture
def config_pequena():
    """Configuração com janela e aridades pequenas para os testes."""
    return RunConfig(janela=3, n_max=3, teto_comprimento=3, semente=7, amostras=40)


@pytest.fixture
def repositorio():
    """Repositório apontando para a pasta fixtures/ do projeto."""
    return SimplicialRepository(RAIZ_PROJETO / "fixtures")


@pytest.fixture
def tripla_esfera(repositorio):
    """(pt, S², pt): Tor_{C*S²}(𝕜, 𝕜)."""
    return repositorio.carregar_tripla("tripla_pt_s2_pt.json")


@pytest.fixture
def tripla_triangulo(repositorio):
    """(Δ², Δ², Δ²) com mapas identidade."""
    return repositorio.carregar_tripla("tripla_delta2.json")


@pytest.fixture
def eventos():
    """Observer em memória ligado ao logger global durante o teste."""
    memoria = MemoryLogger()
    logger.subject.attach(memoria)
    yield memoria
    logger.subject.detach(memoria)
