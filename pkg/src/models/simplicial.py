"""
Conjuntos simpliciais finitos em forma normal de Eilenberg–Zilber.

Um simplexo qualquer é guardado como (base não degenerada, sobrejeção
monótona η): o simplexo s_{j₁}…s_{j_r}(base) corresponde à sobrejeção
[0..n] → [0..dim base] que repete os vértices indicados.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from src.validators.exceptions import (
    MapaSimplicialInvalidoError,
    SimplexoInvalidoError,
)


@dataclass(frozen=True)
class SimplexRef:
    """
    Simplexo não degenerado de um conjunto simplicial.

    Attributes:
        id: Identificador opaco (texto nos fixtures, par de formas
            normais em produtos).
        dim: Dimensão.
    """

    id: Hashable
    dim: int

    @property
    def grau(self) -> int:
        return self.dim

    def __repr__(self) -> str:
        if isinstance(self.id, tuple):
            return f"({self.id[0]!r},{self.id[1]!r})"
        return str(self.id)


@dataclass(frozen=True)
class NormalFormSimplex:
    """
    Simplexo na forma normal s_{j₁}…s_{j_r}(base), j₁ > … > j_r.

    Attributes:
        base: Simplexo não degenerado.
        sobrejecao: Sobrejeção monótona [0..dim] → [0..base.dim].

    Example:
        >>> v = SimplexRef("v", 0)
        >>> NormalFormSimplex.de_degeneracias(v, [1, 0]).dim
        2
    """

    base: SimplexRef
    sobrejecao: Tuple[int, ...]

    @classmethod
    def nao_degenerado(cls, base: SimplexRef) -> "NormalFormSimplex":
        return cls(base, tuple(range(base.dim + 1)))

    @classmethod
    def de_degeneracias(cls, base: SimplexRef, palavra: Sequence[int]) -> "NormalFormSimplex":
        """
        Aplica a palavra s_{j₁}…s_{j_r} (o último índice age primeiro).

        Raises:
            SimplexoInvalidoError: Se algum índice estiver fora do
                intervalo admissível.
        """
        eta = tuple(range(base.dim + 1))
        for j in reversed(list(palavra)):
            if not 0 <= j < len(eta):
                raise SimplexoInvalidoError(
                    f"Degenerescência s_{j} inválida em dimensão {len(eta) - 1}"
                )
            eta = eta[: j + 1] + eta[j:]
        return cls(base, eta)

    @classmethod
    def de_conjunto(cls, base: SimplexRef, degenerados: Iterable[int], dim: int) -> "NormalFormSimplex":
        """Forma normal de dimensão ``dim`` cujo conjunto de degenerescências é dado."""
        conjunto = set(degenerados)
        eta = [0]
        for j in range(dim):
            eta.append(eta[-1] + (0 if j in conjunto else 1))
        if eta[-1] != base.dim:
            raise SimplexoInvalidoError(
                f"Degenerescências {sorted(conjunto)} incompatíveis com {base!r}"
            )
        return cls(base, tuple(eta))

    @property
    def dim(self) -> int:
        return len(self.sobrejecao) - 1

    @property
    def grau(self) -> int:
        return self.dim

    @property
    def degeneracias(self) -> Tuple[int, ...]:
        """Índices j com η(j) = η(j+1), em ordem decrescente."""
        eta = self.sobrejecao
        return tuple(j for j in reversed(range(len(eta) - 1)) if eta[j] == eta[j + 1])

    @property
    def eh_degenerado(self) -> bool:
        return self.dim != self.base.dim

    def degenerar(self, j: int) -> "NormalFormSimplex":
        if not 0 <= j <= self.dim:
            raise SimplexoInvalidoError(f"s_{j} fora do intervalo em dimensão {self.dim}")
        eta = self.sobrejecao
        return NormalFormSimplex(self.base, eta[: j + 1] + eta[j:])

    def degenerar_palavra(self, indices: Iterable[int]) -> "NormalFormSimplex":
        """s_{i_r}…s_{i_1} aplicados em ordem crescente de índice: s_β no sentido usual."""
        resultado = self
        for j in sorted(indices):
            resultado = resultado.degenerar(j)
        return resultado

    def __repr__(self) -> str:
        if not self.eh_degenerado:
            return repr(self.base)
        palavra = "".join(f"s{j}" for j in self.degeneracias)
        return f"{palavra}{self.base!r}"


class FiniteSimplicialSet:
    """
    Conjunto simplicial finito dado por seus simplexos não degenerados
    e pela tabela de faces.

    Attributes:
        nome: Nome do conjunto.
        simplices: Dimensão → lista de simplexos não degenerados.
        faces: Identificador → formas normais das faces ∂₀, …, ∂_n.
        basepoint: Vértice base.

    Example:
        >>> x = FiniteSimplicialSet("Δ¹", simplices, faces, v0)
        >>> x.face(NormalFormSimplex.nao_degenerado(aresta), 0)
        v1
    """

    def __init__(
        self,
        nome: str,
        simplices: Dict[int, List[SimplexRef]],
        faces: Dict[Hashable, Tuple[NormalFormSimplex, ...]],
        basepoint: SimplexRef,
        validar: bool = True,
    ):
        self.nome = nome
        self.simplices = {d: list(s) for d, s in simplices.items() if s}
        self.faces = dict(faces)
        self.basepoint = basepoint
        self._cache: Dict[Tuple, NormalFormSimplex] = {}
        self._por_id = {s.id: s for lista in self.simplices.values() for s in lista}
        if validar:
            self.validar()

    # Consulta

    @property
    def dimensao(self) -> int:
        return max(self.simplices) if self.simplices else -1

    def nao_degenerados(self, dim: int) -> List[SimplexRef]:
        return self.simplices.get(dim, [])

    def todos(self) -> List[SimplexRef]:
        return [s for d in sorted(self.simplices) for s in self.simplices[d]]

    def simplexo(self, ident: Hashable) -> SimplexRef:
        try:
            return self._por_id[ident]
        except KeyError:
            raise SimplexoInvalidoError(f"Simplexo {ident!r} não existe em {self.nome}")

    def procurar(self, ident: Hashable) -> Optional[SimplexRef]:
        return self._por_id.get(ident)

    def contem(self, s: SimplexRef) -> bool:
        return self._por_id.get(s.id) == s

    # Operadores simpliciais

    def aplicar_operador(self, x: NormalFormSimplex, theta: Sequence[int]) -> NormalFormSimplex:
        """
        Simplexo x·θ para θ monótona [0..l] → [0..dim x], dada pela
        sequência de seus valores (vértices, com repetição permitida).
        """
        composto = tuple(x.sobrejecao[t] for t in theta)
        imagem = sorted(set(composto))
        posicao = {v: i for i, v in enumerate(imagem)}
        y = self._restringir_base(x.base, tuple(imagem))
        return NormalFormSimplex(y.base, tuple(y.sobrejecao[posicao[c]] for c in composto))

    def _restringir_base(self, x: SimplexRef, vertices: Tuple[int, ...]) -> NormalFormSimplex:
        if len(vertices) == x.dim + 1:
            return NormalFormSimplex.nao_degenerado(x)
        chave = (x, vertices)
        if chave not in self._cache:
            faltando = max(set(range(x.dim + 1)) - set(vertices))
            face = self.faces[x.id][faltando]
            reindexado = tuple(v if v < faltando else v - 1 for v in vertices)
            self._cache[chave] = self.aplicar_operador(face, reindexado)
        return self._cache[chave]

    def restringir(self, x: NormalFormSimplex, vertices: Sequence[int]) -> NormalFormSimplex:
        """Restrição de x aos vértices indicados (ordem crescente)."""
        return self.aplicar_operador(x, vertices)

    def face(self, x: NormalFormSimplex, i: int) -> NormalFormSimplex:
        """
        Face ∂ᵢx em forma normal.

        Raises:
            SimplexoInvalidoError: Se i estiver fora de [0, dim x].
        """
        if x.dim == 0 or not 0 <= i <= x.dim:
            raise SimplexoInvalidoError(f"∂_{i} inválida em dimensão {x.dim}")
        return self.aplicar_operador(x, [t for t in range(x.dim + 1) if t != i])

    def frente(self, x: NormalFormSimplex, i: int) -> NormalFormSimplex:
        """Face frontal x|[0..i]."""
        return self.aplicar_operador(x, range(i + 1))

    def verso(self, x: NormalFormSimplex, i: int) -> NormalFormSimplex:
        """Face traseira x|[i..dim]."""
        return self.aplicar_operador(x, range(i, x.dim + 1))

    # Validação

    def validar(self) -> None:
        """
        Confere dimensões das faces, ponto base e identidades
        simpliciais ∂ᵢ∂ⱼ = ∂ⱼ₋₁∂ᵢ (i < j).

        Raises:
            SimplexoInvalidoError: Na primeira inconsistência encontrada.
        """
        if not self.contem(self.basepoint) or self.basepoint.dim != 0:
            raise SimplexoInvalidoError(f"Ponto base {self.basepoint!r} não é vértice de {self.nome}")
        for x in self.todos():
            if x.dim == 0:
                continue
            faces = self.faces.get(x.id)
            if faces is None or len(faces) != x.dim + 1:
                raise SimplexoInvalidoError(f"{x!r} precisa de {x.dim + 1} faces")
            for i, f in enumerate(faces):
                if f.dim != x.dim - 1 or not self.contem(f.base):
                    raise SimplexoInvalidoError(f"Face ∂_{i} de {x!r} inválida: {f!r}")
        for x in self.todos():
            if x.dim < 2:
                continue
            nf = NormalFormSimplex.nao_degenerado(x)
            for j in range(x.dim + 1):
                for i in range(j):
                    esquerda = self.face(self.face(nf, j), i)
                    direita = self.face(self.face(nf, i), j - 1)
                    if esquerda != direita:
                        raise SimplexoInvalidoError(
                            f"Identidade simplicial falha em {x!r}: ∂{i}∂{j} ≠ ∂{j - 1}∂{i}"
                        )

    def __len__(self) -> int:
        return len(self._por_id)

    def __repr__(self) -> str:
        contagem = {d: len(s) for d, s in sorted(self.simplices.items())}
        return f"FiniteSimplicialSet({self.nome}, {contagem})"


class SimplicialMap:
    """
    Mapa simplicial dado nas células não degeneradas da origem.

    Attributes:
        origem: Conjunto simplicial de origem.
        destino: Conjunto simplicial de destino.
        imagens: Simplexo não degenerado da origem → forma normal no destino.
    """

    def __init__(
        self,
        origem: FiniteSimplicialSet,
        destino: FiniteSimplicialSet,
        imagens: Dict[SimplexRef, NormalFormSimplex],
        validar: bool = True,
    ):
        self.origem = origem
        self.destino = destino
        self.imagens = dict(imagens)
        if validar:
            self.validar()

    def aplicar(self, x: NormalFormSimplex) -> NormalFormSimplex:
        """f(base·η) = f(base)·η."""
        return self.destino.aplicar_operador(self.imagens[x.base], x.sobrejecao)

    def validar(self) -> None:
        """
        Raises:
            MapaSimplicialInvalidoError: Se faltar imagem, a dimensão não
                for preservada, o ponto base não for preservado ou o mapa
                não comutar com as faces.
        """
        for x in self.origem.todos():
            imagem = self.imagens.get(x)
            if imagem is None:
                raise MapaSimplicialInvalidoError(f"Sem imagem para {x!r}")
            if imagem.dim != x.dim or not self.destino.contem(imagem.base):
                raise MapaSimplicialInvalidoError(f"Imagem inválida para {x!r}: {imagem!r}")
        base = self.aplicar(NormalFormSimplex.nao_degenerado(self.origem.basepoint))
        if base.base != self.destino.basepoint:
            raise MapaSimplicialInvalidoError(
                f"Ponto base {self.origem.basepoint!r} não vai em {self.destino.basepoint!r}"
            )
        for x in self.origem.todos():
            if x.dim == 0:
                continue
            nf = NormalFormSimplex.nao_degenerado(x)
            for i in range(x.dim + 1):
                if self.aplicar(self.origem.face(nf, i)) != self.destino.face(self.imagens[x], i):
                    raise MapaSimplicialInvalidoError(f"Mapa não comuta com ∂_{i} em {x!r}")

    def __repr__(self) -> str:
        return f"SimplicialMap({self.origem.nome} → {self.destino.nome})"


# Construções padrão


def _nome_face(vertices: Sequence[int]) -> str:
    return "v" + "".join(str(v) for v in vertices)


def simplexo_padrao(n: int) -> FiniteSimplicialSet:
    """Δⁿ com simplexos nomeados pelos vértices (v0, v01, v012, …)."""
    from itertools import combinations

    simplices: Dict[int, List[SimplexRef]] = {}
    refs: Dict[Tuple[int, ...], SimplexRef] = {}
    for d in range(n + 1):
        simplices[d] = []
        for vs in combinations(range(n + 1), d + 1):
            ref = SimplexRef(_nome_face(vs), d)
            refs[vs] = ref
            simplices[d].append(ref)
    faces = {}
    for vs, ref in refs.items():
        if len(vs) > 1:
            faces[ref.id] = tuple(
                NormalFormSimplex.nao_degenerado(refs[vs[:i] + vs[i + 1:]])
                for i in range(len(vs))
            )
    return FiniteSimplicialSet(f"Δ{n}", simplices, faces, refs[(0,)])


def bordo_simplexo(n: int) -> FiniteSimplicialSet:
    """∂Δⁿ: Δⁿ sem a célula de topo."""
    delta = simplexo_padrao(n)
    simplices = {d: s for d, s in delta.simplices.items() if d < n}
    faces = {k: v for k, v in delta.faces.items() if delta.simplexo(k).dim < n}
    return FiniteSimplicialSet(f"∂Δ{n}", simplices, faces, delta.basepoint)


def esfera_minima(n: int) -> FiniteSimplicialSet:
    """Sⁿ com um vértice e uma célula de dimensão n de faces degeneradas."""
    v = SimplexRef("*", 0)
    celula = SimplexRef(f"σ{n}", n)
    face = NormalFormSimplex.de_degeneracias(v, list(reversed(range(n - 1))))
    return FiniteSimplicialSet(
        f"S{n}", {0: [v], n: [celula]}, {celula.id: tuple(face for _ in range(n + 1))}, v,
    )


@dataclass
class TriplaSimplicial:
    """
    Dados X →f B ←p E de uma tripla de Eilenberg–Moore.

    Attributes:
        nome: Rótulo da tripla.
        f: Mapa X → B.
        p: Mapa E → B.
    """

    nome: str
    f: SimplicialMap
    p: SimplicialMap

    def __post_init__(self):
        if self.f.destino is not self.p.destino:
            raise MapaSimplicialInvalidoError(
                f"{self.nome}: f e p precisam ter o mesmo destino"
            )
