"""
Repositório de fixtures simpliciais em JSON.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from src.infrastructure.event_logger import logger
from src.models.simplicial import (
    FiniteSimplicialSet,
    NormalFormSimplex,
    SimplexRef,
    SimplicialMap,
    TriplaSimplicial,
)
from src.validators.exceptions import FixtureInvalidaError


"""Camada de persistência (Repository) para conjuntos e mapas simpliciais."""

class SimplexoNaoEncontradoError(LookupError):
    """
    Exceção lançada quando um fixture cita um simplexo que não existe.

    Example:
        >>> raise SimplexoNaoEncontradoError("Simplexo 'v3' não existe em Δ2")
    """
    pass


def _forma_normal(X: FiniteSimplicialSet, entrada: Any) -> NormalFormSimplex:
    """[palavra de degenerescência, id da base] → forma normal em X."""
    try:
        palavra, base_id = entrada
    except (TypeError, ValueError):
        raise FixtureInvalidaError(f"Entrada {entrada!r} deveria ser [palavra, base]")
    base = X.procurar(base_id)
    if base is None:
        raise SimplexoNaoEncontradoError(f"Simplexo {base_id!r} não existe em {X.nome}")
    return NormalFormSimplex.de_degeneracias(base, [int(j) for j in palavra])


def conjunto_from_dict(data: Dict) -> FiniteSimplicialSet:
    """
    Factory de conjunto simplicial a partir do dicionário do fixture.

    Formato: ``nome``, ``basepoint`` (id de vértice), ``simplices``
    (dimensão → ids) e ``faces`` (id → lista de [palavra, base], com a
    posição i dando ∂ᵢ).

    Raises:
        FixtureInvalidaError: Se faltarem campos.
        SimplexoInvalidoError: Se a tabela de faces for inconsistente.
        SimplexoNaoEncontradoError: Se uma face citar um id inexistente.

    Example:
        >>> data = {
        ...     "nome": "Δ1", "basepoint": "v0",
        ...     "simplices": {"0": ["v0", "v1"], "1": ["v01"]},
        ...     "faces": {"v01": [[[], "v1"], [[], "v0"]]},
        ... }
        >>> conjunto_from_dict(data).dimensao
        1
    """
    try:
        nome = data["nome"]
        simplices = {
            int(d): [SimplexRef(ident, int(d)) for ident in ids]
            for d, ids in data["simplices"].items()
        }
        basepoint_id = data["basepoint"]
    except (KeyError, TypeError, ValueError) as e:
        raise FixtureInvalidaError(f"Fixture de conjunto simplicial malformado: {e}")

    # Conjunto sem validação só para resolver as faces pelos ids
    provisorio = FiniteSimplicialSet(nome, simplices, {}, SimplexRef(basepoint_id, 0), validar=False)
    basepoint = provisorio.procurar(basepoint_id)
    if basepoint is None:
        raise SimplexoNaoEncontradoError(f"Ponto base {basepoint_id!r} não existe em {nome}")
    faces = {}
    for ident, entradas in data.get("faces", {}).items():
        if provisorio.procurar(ident) is None:
            raise SimplexoNaoEncontradoError(f"Faces dadas para {ident!r}, que não existe em {nome}")
        faces[ident] = tuple(_forma_normal(provisorio, e) for e in entradas)
    return FiniteSimplicialSet(nome, simplices, faces, basepoint)


def mapa_from_dict(imagens: Dict, origem: FiniteSimplicialSet, destino: FiniteSimplicialSet) -> SimplicialMap:
    """
    Mapa simplicial: id de cada simplexo não degenerado da origem →
    [palavra, base] no destino.

    Raises:
        SimplexoNaoEncontradoError: Se algum id não existir.
        MapaSimplicialInvalidoError: Se o mapa não for simplicial ou não
            preservar o ponto base.
    """
    convertidas = {}
    for ident, entrada in imagens.items():
        x = origem.procurar(ident)
        if x is None:
            raise SimplexoNaoEncontradoError(f"Simplexo {ident!r} não existe em {origem.nome}")
        convertidas[x] = _forma_normal(destino, entrada)
    return SimplicialMap(origem, destino, convertidas)


class SimplicialRepository:
    """
    Carrega conjuntos simpliciais, mapas e triplas de arquivos JSON.

    Cada arquivo tem um campo ``tipo``: ``conjunto`` (padrão), ``mapa``
    (com ``origem``, ``destino`` e ``imagens``) ou ``tripla`` (com
    ``X``, ``B``, ``E``, ``f`` e ``p``). Caminhos citados dentro de um
    arquivo são relativos à pasta dele. Um mesmo arquivo carregado duas
    vezes devolve o mesmo objeto.

    Attributes:
        _diretorio: Pasta padrão dos fixtures.
        _conjuntos: Cache caminho resolvido → conjunto simplicial.

    Example:
        >>> repo = SimplicialRepository("fixtures")
        >>> S2 = repo.carregar("s2_min.json")
        >>> tripla = repo.carregar_tripla("tripla_pt_s2_pt.json")
    """

    def __init__(self, diretorio: Union[str, Path] = "fixtures") -> None:
        self._diretorio = Path(diretorio)
        self._conjuntos: Dict[Path, FiniteSimplicialSet] = {}

    def _resolver(self, caminho: Union[str, Path], relativo_a: Path = None) -> Path:
        caminho = Path(caminho)
        if caminho.is_absolute():
            return caminho.resolve()
        if relativo_a is not None and (relativo_a / caminho).exists():
            return (relativo_a / caminho).resolve()
        if caminho.exists():
            return caminho.resolve()
        return (self._diretorio / caminho).resolve()

    def _ler(self, caminho: Path) -> Dict:
        if not caminho.exists():
            raise FixtureInvalidaError(f"Fixture {caminho} não encontrado")
        try:
            return json.loads(caminho.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise FixtureInvalidaError(f"Erro ao decodificar JSON em {caminho}: {e.msg}")

    # Leitura

    def carregar(self, caminho: Union[str, Path], relativo_a: Path = None) -> FiniteSimplicialSet:
        """
        Carrega um conjunto simplicial.

        Raises:
            FixtureInvalidaError: Se o arquivo não existir, não for JSON
                ou não descrever um conjunto simplicial.
        """
        resolvido = self._resolver(caminho, relativo_a)
        if resolvido not in self._conjuntos:
            data = self._ler(resolvido)
            if data.get("tipo", "conjunto") != "conjunto":
                raise FixtureInvalidaError(f"{resolvido} não é um conjunto simplicial")
            X = conjunto_from_dict(data)
            self._conjuntos[resolvido] = X
            logger.log(
                "FIXTURE_CARREGADA",
                fixture=X.nome,
                arquivo=resolvido.name,
                simplexos={d: len(s) for d, s in sorted(X.simplices.items())},
            )
        return self._conjuntos[resolvido]

    def carregar_mapa(self, caminho: Union[str, Path]) -> SimplicialMap:
        resolvido = self._resolver(caminho)
        data = self._ler(resolvido)
        if data.get("tipo") != "mapa":
            raise FixtureInvalidaError(f"{resolvido} não é um mapa simplicial")
        pasta = resolvido.parent
        try:
            origem = self.carregar(data["origem"], pasta)
            destino = self.carregar(data["destino"], pasta)
            return mapa_from_dict(data["imagens"], origem, destino)
        except KeyError as e:
            raise FixtureInvalidaError(f"Mapa em {resolvido} sem o campo {e}")

    def carregar_tripla(self, caminho: Union[str, Path]) -> TriplaSimplicial:
        resolvido = self._resolver(caminho)
        data = self._ler(resolvido)
        if data.get("tipo") != "tripla":
            raise FixtureInvalidaError(f"{resolvido} não é uma tripla")
        pasta = resolvido.parent
        try:
            X = self.carregar(data["X"], pasta)
            B = self.carregar(data["B"], pasta)
            E = self.carregar(data["E"], pasta)
            f = mapa_from_dict(data["f"], X, B)
            p = mapa_from_dict(data["p"], E, B)
        except KeyError as e:
            raise FixtureInvalidaError(f"Tripla em {resolvido} sem o campo {e}")
        return TriplaSimplicial(data.get("nome", resolvido.stem), f, p)

    def tipo(self, caminho: Union[str, Path]) -> str:
        return self._ler(self._resolver(caminho)).get("tipo", "conjunto")

    def listar(self) -> List[Path]:
        """Arquivos JSON da pasta de fixtures, em ordem de nome."""
        if not self._diretorio.exists():
            return []
        return sorted(self._diretorio.glob("*.json"))

    def __len__(self) -> int:
        return len(self._conjuntos)

    def __repr__(self) -> str:
        return f"SimplicialRepository({self._diretorio}, {len(self)} conjuntos)"
