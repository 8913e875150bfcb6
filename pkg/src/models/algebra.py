"""
Álgebras diferenciais graduadas aumentadas, hgas e morfismos de dgas.

As álgebras trabalham sempre com uma base adaptada ao aumento: exatamente
uma chave de base tem aumento não nulo e as demais geram o ideal Ā.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, Dict, Hashable, List, Sequence, Tuple

from src.models.barra import UNIDADE
from src.models.escalares import CoefficientRing
from src.models.mapa_graduado import Complex
from src.models.vetor import Vector, grau, tensor


class AlgebraAumentada(ABC):
    """
    Interface de uma dga aumentada de base finita por grau.

    Subclasses implementam a estrutura nas chaves de base; as versões
    lineares (em vetores) são derivadas aqui.

    Attributes:
        nome: Nome exibido em relatórios.
        anel: Anel de coeficientes.
    """

    def __init__(self, nome: str, anel: CoefficientRing):
        self.nome = nome
        self.anel = anel
        self._base_reduzida: Dict[int, List[Hashable]] = {}

    @abstractmethod
    def base(self, grau: int) -> List[Hashable]:
        """Chaves de base em um grau."""

    @abstractmethod
    def graus(self) -> List[int]:
        """Graus com base não vazia."""

    @abstractmethod
    def produto_chaves(self, a: Hashable, b: Hashable) -> Vector:
        pass

    @abstractmethod
    def diferencial_chave(self, a: Hashable) -> Vector:
        pass

    @abstractmethod
    def unidade(self) -> Vector:
        pass

    @abstractmethod
    def aumento_chave(self, a: Hashable) -> Any:
        pass

    # Extensões lineares

    def produto(self, x: Vector, y: Vector) -> Vector:
        anel = self.anel
        termos: Dict[Hashable, Any] = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for k, c in self.produto_chaves(a, b).items():
                    termos[k] = termos.get(k, anel.zero) + ca * cb * c
        return Vector(anel, termos)

    def produto_varios(self, *fatores: Vector) -> Vector:
        resultado = self.unidade()
        for f in fatores:
            resultado = self.produto(resultado, f)
        return resultado

    def diferencial(self, v: Vector) -> Vector:
        return v.mapear(self.diferencial_chave)

    def aumento(self, v: Vector) -> Any:
        total = self.anel.zero
        for k, c in v.items():
            total += c * self.aumento_chave(k)
        return total

    def reduzir(self, v: Vector) -> Vector:
        """Projeção a ↦ ā = a − ε(a)·1 no ideal de aumento."""
        e = self.aumento(v)
        if not e:
            return v
        return v - self.unidade().escalar(e)

    def base_reduzida(self, grau: int) -> List[Hashable]:
        if grau not in self._base_reduzida:
            self._base_reduzida[grau] = [k for k in self.base(grau) if not self.aumento_chave(k)]
        return self._base_reduzida[grau]

    def vetor(self, chave: Hashable) -> Vector:
        return Vector.basis(self.anel, chave)

    def complexo(self) -> Complex:
        return Complex(self.nome, self.anel, self.base, self.diferencial_chave, 1, self.graus())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.nome})"


class AlgebraHga(AlgebraAumentada):
    """
    hga: dga aumentada com operações E_k(a; b₁, …, b_k) de grau −k.

    Attributes:
        sinal_E: Constante global que multiplica E_k para k ≥ 1.
    """

    def __init__(self, nome: str, anel: CoefficientRing, sinal_E: int = 1):
        super().__init__(nome, anel)
        self.sinal_E = sinal_E

    @abstractmethod
    def E_chaves(self, a: Hashable, bs: Tuple[Hashable, ...]) -> Vector:
        """E_k(a; b₁,…,b_k) em chaves, k = len(bs) ≥ 1, já com ``sinal_E``."""

    def E(self, a: Vector, bs: Sequence[Vector]) -> Vector:
        """Extensão multilinear de E_k; E₀(a) = a."""
        if not bs:
            return a
        anel = self.anel
        termos: Dict[Hashable, Any] = {}
        for chaves, coef in tensor(a, *bs).items():
            for k, c in self.E_chaves(chaves[0], tuple(chaves[1:])).items():
                termos[k] = termos.get(k, anel.zero) + coef * c
        return Vector(anel, termos)


class AlgebraBase(AlgebraHga):
    """O anel base 𝕜 como hga trivial concentrada em grau 0."""

    def __init__(self, anel: CoefficientRing):
        super().__init__("𝕜", anel)

    def base(self, grau: int) -> List[Hashable]:
        return [UNIDADE] if grau == 0 else []

    def graus(self) -> List[int]:
        return [0]

    def produto_chaves(self, a, b) -> Vector:
        return self.vetor(UNIDADE)

    def diferencial_chave(self, a) -> Vector:
        return Vector.zero(self.anel)

    def unidade(self) -> Vector:
        return self.vetor(UNIDADE)

    def aumento_chave(self, a) -> Any:
        return self.anel.um

    def E_chaves(self, a, bs) -> Vector:
        return Vector.zero(self.anel)


class TensorAlgebra(AlgebraAumentada):
    """Produto tensorial A⊗B com (a⊗b)(a′⊗b′) = (−1)^{|b||a′|} aa′⊗bb′."""

    def __init__(self, primeira: AlgebraAumentada, segunda: AlgebraAumentada):
        super().__init__(f"{primeira.nome}⊗{segunda.nome}", primeira.anel)
        self.primeira = primeira
        self.segunda = segunda
        self._bases: Dict[int, List[Tuple]] = {}

    def base(self, n: int) -> List[Tuple]:
        if n not in self._bases:
            self._bases[n] = [
                (a, b)
                for g in self.primeira.graus()
                for a in self.primeira.base(g)
                for b in self.segunda.base(n - g)
            ]
        return self._bases[n]

    def graus(self) -> List[int]:
        return sorted({g + h for g in self.primeira.graus() for h in self.segunda.graus()})

    def produto_chaves(self, x: Tuple, y: Tuple) -> Vector:
        (a, b), (a2, b2) = x, y
        sinal = self.anel.sinal(grau(b) * grau(a2))
        return tensor(
            self.primeira.produto_chaves(a, a2), self.segunda.produto_chaves(b, b2)
        ).escalar(sinal)

    def diferencial_chave(self, x: Tuple) -> Vector:
        a, b = x
        anel = self.anel
        return tensor(self.primeira.diferencial_chave(a), Vector.basis(anel, b)) + tensor(
            Vector.basis(anel, a), self.segunda.diferencial_chave(b)
        ).escalar(anel.sinal(grau(a)))

    def unidade(self) -> Vector:
        return tensor(self.primeira.unidade(), self.segunda.unidade())

    def aumento_chave(self, x: Tuple) -> Any:
        return self.primeira.aumento_chave(x[0]) * self.segunda.aumento_chave(x[1])

    def incluir(self, x: Vector, y: Vector) -> Vector:
        """x⊗y como vetor de A⊗B."""
        return tensor(x, y)


class MorfismoDga:
    """
    Morfismo de dgas aumentadas, dado nas chaves de base.

    Attributes:
        origem: Álgebra de origem.
        destino: Álgebra de destino.
        acao_chave: Imagem de cada chave.
        nome: Rótulo.
    """

    def __init__(
        self,
        origem: AlgebraAumentada,
        destino: AlgebraAumentada,
        acao_chave: Callable[[Hashable], Vector],
        nome: str = "φ",
    ):
        self.origem = origem
        self.destino = destino
        self.acao_chave = acao_chave
        self.nome = nome
        self._cache: Dict[Hashable, Vector] = {}

    def aplicar_chave(self, chave: Hashable) -> Vector:
        if chave not in self._cache:
            self._cache[chave] = self.acao_chave(chave)
        return self._cache[chave]

    def __call__(self, v: Vector) -> Vector:
        return v.mapear(self.aplicar_chave)

    def eh_identidade(self) -> bool:
        if self.origem is not self.destino:
            return False
        A = self.origem
        return all(self.aplicar_chave(a) == A.vetor(a) for g in A.graus() for a in A.base(g))

    def violacoes(self) -> List[str]:
        """Chaves em que φ falha em comutar com d, produto, unidade ou aumento."""
        A, B = self.origem, self.destino
        falhas = []
        if self(A.unidade()) != B.unidade():
            falhas.append("unidade")
        for g in A.graus():
            for a in A.base(g):
                if self(A.diferencial_chave(a)) != B.diferencial(self.aplicar_chave(a)):
                    falhas.append(f"d em {a!r}")
                if B.aumento(self.aplicar_chave(a)) != A.aumento_chave(a):
                    falhas.append(f"ε em {a!r}")
                for h in A.graus():
                    for b in A.base(h):
                        if self(A.produto_chaves(a, b)) != B.produto(
                            self.aplicar_chave(a), self.aplicar_chave(b)
                        ):
                            falhas.append(f"produto em {a!r}·{b!r}")
        return falhas

    def __repr__(self) -> str:
        return f"MorfismoDga({self.nome}: {self.origem.nome} → {self.destino.nome})"


def morfismo_identidade(A: AlgebraAumentada) -> MorfismoDga:
    return MorfismoDga(A, A, A.vetor, "1")


def morfismo_aumento(A: AlgebraAumentada, base: AlgebraBase) -> MorfismoDga:
    """ε: A → 𝕜."""
    return MorfismoDga(A, base, lambda k: base.unidade().escalar(A.aumento_chave(k)), "ε")


def morfismo_unidade(base: AlgebraBase, A: AlgebraAumentada) -> MorfismoDga:
    """η: 𝕜 → A."""
    return MorfismoDga(base, A, lambda k: A.unidade(), "η")


def morfismo_tensorial(f: MorfismoDga, g: MorfismoDga, origem: TensorAlgebra, destino: TensorAlgebra) -> MorfismoDga:
    return MorfismoDga(
        origem, destino,
        lambda x: tensor(f.aplicar_chave(x[0]), g.aplicar_chave(x[1])),
        f"{f.nome}⊗{g.nome}",
    )


@dataclass(frozen=True)
class Potencia:
    """uᵏ em uma álgebra monogênica."""

    expoente: int
    grau_gerador: int

    @property
    def grau(self) -> int:
        return self.expoente * self.grau_gerador

    def __repr__(self) -> str:
        return "1" if self.expoente == 0 else f"u^{self.expoente}"


class AlgebraTruncada(AlgebraAumentada):
    """
    𝕜[u]/(u^r) com |u| = d e diferencial nula.

    Example:
        >>> R = AlgebraTruncada(anel, grau_gerador=2, altura=2)   # H*(S²)
        >>> R.produto_chaves(R.base(2)[0], R.base(2)[0])
        0
    """

    def __init__(self, anel: CoefficientRing, grau_gerador: int, altura: int):
        if grau_gerador < 1 or altura < 1:
            raise ValueError("𝕜[u]/(u^r) exige |u| ≥ 1 e r ≥ 1")
        super().__init__(f"𝕜[u]/(u^{altura})", anel)
        self.grau_gerador = grau_gerador
        self.altura = altura

    def base(self, grau: int) -> List[Hashable]:
        k, resto = divmod(grau, self.grau_gerador)
        if resto or not 0 <= k < self.altura:
            return []
        return [Potencia(k, self.grau_gerador)]

    def graus(self) -> List[int]:
        return [k * self.grau_gerador for k in range(self.altura)]

    def produto_chaves(self, a: Potencia, b: Potencia) -> Vector:
        k = a.expoente + b.expoente
        if k >= self.altura:
            return Vector.zero(self.anel)
        return self.vetor(Potencia(k, self.grau_gerador))

    def diferencial_chave(self, a: Potencia) -> Vector:
        return Vector.zero(self.anel)

    def unidade(self) -> Vector:
        return self.vetor(Potencia(0, self.grau_gerador))

    def aumento_chave(self, a: Potencia) -> Any:
        return self.anel.um if a.expoente == 0 else self.anel.zero
