"""
Produtos, pull-backs e diagonais de conjuntos simpliciais finitos.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple

from src.models.simplicial import (
    FiniteSimplicialSet,
    NormalFormSimplex,
    SimplexRef,
    SimplicialMap,
)
from src.validators.exceptions import SimplexoInvalidoError


class ProdutoSimplicial(FiniteSimplicialSet):
    """
    Produto X×Y (ou um subconjunto simplicial dele, como um pull-back).

    Os simplexos não degenerados são pares (u, v) de formas normais de
    mesma dimensão com conjuntos de degenerescências disjuntos.

    Attributes:
        fator_x: Primeiro fator.
        fator_y: Segundo fator.
    """

    def __init__(
        self,
        fator_x: FiniteSimplicialSet,
        fator_y: FiniteSimplicialSet,
        filtro: Optional[Callable[[NormalFormSimplex, NormalFormSimplex], bool]] = None,
        nome: Optional[str] = None,
    ):
        self.fator_x = fator_x
        self.fator_y = fator_y
        simplices: Dict[int, List[SimplexRef]] = {}
        for n in range(fator_x.dimensao + fator_y.dimensao + 1):
            lista = []
            for a in fator_x.todos():
                for b in fator_y.todos():
                    if a.dim > n or b.dim > n or a.dim + b.dim < n:
                        continue
                    for da in combinations(range(n), n - a.dim):
                        resto = [j for j in range(n) if j not in da]
                        for db in combinations(resto, n - b.dim):
                            u = NormalFormSimplex.de_conjunto(a, da, n)
                            v = NormalFormSimplex.de_conjunto(b, db, n)
                            if filtro is None or filtro(u, v):
                                lista.append(SimplexRef((u, v), n))
            if lista:
                simplices[n] = sorted(lista, key=repr)
        faces = {}
        for lista in simplices.values():
            for z in lista:
                if z.dim == 0:
                    continue
                u, v = z.id
                faces[z.id] = tuple(
                    self.par(fator_x.face(u, i), fator_y.face(v, i)) for i in range(z.dim + 1)
                )
        basepoint = SimplexRef(
            (NormalFormSimplex.nao_degenerado(fator_x.basepoint),
             NormalFormSimplex.nao_degenerado(fator_y.basepoint)),
            0,
        )
        super().__init__(
            nome or f"{fator_x.nome}×{fator_y.nome}", simplices, faces, basepoint, validar=False
        )

    @staticmethod
    def par(u: NormalFormSimplex, v: NormalFormSimplex) -> NormalFormSimplex:
        """Forma normal do par (u, v), fatorando as degenerescências comuns."""
        if u.dim != v.dim:
            raise SimplexoInvalidoError(f"Par de dimensões diferentes: {u!r}, {v!r}")
        comuns = set(u.degeneracias) & set(v.degeneracias)
        mantidas = [t for t in range(u.dim + 1) if t == 0 or (t - 1) not in comuns]
        u2 = NormalFormSimplex(u.base, tuple(u.sobrejecao[t] for t in mantidas))
        v2 = NormalFormSimplex(v.base, tuple(v.sobrejecao[t] for t in mantidas))
        sigma, indice = [], -1
        for t in range(u.dim + 1):
            if t == 0 or (t - 1) not in comuns:
                indice += 1
            sigma.append(indice)
        return NormalFormSimplex(SimplexRef((u2, v2), len(mantidas) - 1), tuple(sigma))

    def projecoes(self, z: NormalFormSimplex) -> Tuple[NormalFormSimplex, NormalFormSimplex]:
        """(p_X z, p_Y z) para um simplexo qualquer do produto."""
        u, v = z.base.id
        return (
            NormalFormSimplex(u.base, tuple(u.sobrejecao[t] for t in z.sobrejecao)),
            NormalFormSimplex(v.base, tuple(v.sobrejecao[t] for t in z.sobrejecao)),
        )

    def aplicar_operador(self, x: NormalFormSimplex, theta) -> NormalFormSimplex:
        u, v = self.projecoes(x)
        return self.par(
            self.fator_x.aplicar_operador(u, theta), self.fator_y.aplicar_operador(v, theta)
        )


def product(X: FiniteSimplicialSet, Y: FiniteSimplicialSet) -> ProdutoSimplicial:
    """Produto X×Y, materializado."""
    return ProdutoSimplicial(X, Y)


def pullback(f: SimplicialMap, p: SimplicialMap) -> ProdutoSimplicial:
    """Pull-back X ×_B E de f: X → B e p: E → B."""
    if f.destino is not p.destino:
        raise SimplexoInvalidoError("Pull-back exige mapas com o mesmo destino")
    return ProdutoSimplicial(
        f.origem, p.origem,
        filtro=lambda u, v: f.aplicar(u) == p.aplicar(v),
        nome=f"{f.origem.nome}×_{f.destino.nome}{p.origem.nome}",
    )


def diagonal(X: FiniteSimplicialSet, XX: ProdutoSimplicial) -> SimplicialMap:
    """Diagonal X → X×X, x ↦ (x, x)."""
    imagens = {
        x: XX.par(NormalFormSimplex.nao_degenerado(x), NormalFormSimplex.nao_degenerado(x))
        for x in X.todos()
    }
    return SimplicialMap(X, XX, imagens, validar=False)


def projecao(XY: ProdutoSimplicial, lado: int) -> SimplicialMap:
    """Projeção p_X (lado 0) ou p_Y (lado 1)."""
    alvo = XY.fator_x if lado == 0 else XY.fator_y
    imagens = {z: z.id[lado] for z in XY.todos()}
    return SimplicialMap(XY, alvo, imagens, validar=False)
