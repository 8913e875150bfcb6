"""
Complexos de base finita por grau e mapas graduados entre eles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Tuple

from src.models.escalares import CoefficientRing
from src.models.vetor import Vector, grau, tensor
from src.validators.exceptions import JanelaInsuficienteError, ModuloIncompativelError


@dataclass(frozen=True)
class Dual:
    """Funcional dual de uma chave de base; tem grau oposto."""

    chave: Any

    @property
    def grau(self) -> int:
        return -grau(self.chave)

    def __repr__(self) -> str:
        return f"{self.chave!r}*"


@dataclass(frozen=True)
class Desuspended:
    """Dessuspensão s⁻¹c de uma chave; grau diminui de 1."""

    chave: Any

    @property
    def grau(self) -> int:
        return grau(self.chave) - 1

    def __repr__(self) -> str:
        return f"s⁻¹{self.chave!r}"


@dataclass
class Complex:
    """
    Complexo graduado com base finita em cada grau.

    Attributes:
        nome: Identificação usada em mensagens e relatórios.
        anel: Anel de coeficientes.
        base: Função grau → lista ordenada de chaves.
        diferencial_chave: Diferencial em uma chave de base.
        direcao: +1 para complexos de cocadeias, −1 para cadeias.
        graus: Graus em que a base pode ser não vazia.
        finito: Falso quando ``base`` só descreve uma janela truncada.

    Example:
        >>> c = Complex("C(Δ¹)", anel, base, d, -1, range(0, 2))
        >>> c.verificar_d2()
        []
    """

    nome: str
    anel: CoefficientRing
    base: Callable[[int], List[Hashable]]
    diferencial_chave: Callable[[Hashable], Vector]
    direcao: int
    graus: Iterable[int]
    finito: bool = True

    @property
    def diferencial(self) -> "GradedMap":
        return GradedMap(self.direcao, self.diferencial_chave, self, self, "d")

    def diferencial_vetor(self, v: Vector) -> Vector:
        return v.mapear(self.diferencial_chave)

    def verificar_d2(self, graus: Optional[Iterable[int]] = None) -> List[Tuple[Hashable, Vector]]:
        """Retorna as chaves em que d∘d não se anula (lista vazia se d² = 0)."""
        testemunhas = []
        for n in (self.graus if graus is None else graus):
            for chave in self.base(n):
                dd = self.diferencial_vetor(self.diferencial_chave(chave))
                if dd:
                    testemunhas.append((chave, dd))
        return testemunhas

    def __repr__(self) -> str:
        return f"Complex({self.nome})"


@dataclass
class GradedMap:
    """
    Mapa linear homogêneo de grau ``grau``, definido nas chaves de base.

    Attributes:
        grau: Grau do mapa.
        acao: Imagem de cada chave de base.
        origem: Complexo de origem.
        destino: Complexo de destino.
        nome: Rótulo para mensagens.
    """

    grau: int
    acao: Callable[[Hashable], Vector]
    origem: Any
    destino: Any
    nome: str = "f"

    def __call__(self, v: Vector) -> Vector:
        return v.mapear(self.acao)

    def apos(self, outro: "GradedMap") -> "GradedMap":
        """Composição self∘outro."""
        if outro.destino is not self.origem:
            raise ModuloIncompativelError(
                f"Não é possível compor {self.nome} após {outro.nome}"
            )
        return GradedMap(
            self.grau + outro.grau,
            lambda k: self(outro.acao(k)),
            outro.origem,
            self.destino,
            f"{self.nome}∘{outro.nome}",
        )

    def __add__(self, outro: "GradedMap") -> "GradedMap":
        return GradedMap(
            self.grau, lambda k: self.acao(k) + outro.acao(k),
            self.origem, self.destino, f"{self.nome}+{outro.nome}",
        )

    def __sub__(self, outro: "GradedMap") -> "GradedMap":
        return GradedMap(
            self.grau, lambda k: self.acao(k) - outro.acao(k),
            self.origem, self.destino, f"{self.nome}-{outro.nome}",
        )

    def __repr__(self) -> str:
        return f"GradedMap({self.nome}, grau={self.grau})"


def identidade(c: Complex) -> GradedMap:
    return GradedMap(0, lambda k: Vector.basis(c.anel, k), c, c, "1")


def diff_of_map(f: GradedMap, d_origem: GradedMap, d_destino: GradedMap) -> GradedMap:
    """
    Diferencial de um mapa: d(f) = d_B f − (−1)^{|f|} f d_A.

    Raises:
        ModuloIncompativelError: Se os diferenciais não forem os da
            origem e do destino de f.
    """
    if d_origem.origem is not f.origem or d_destino.origem is not f.destino:
        raise ModuloIncompativelError(
            f"Diferenciais não correspondem a origem/destino de {f.nome}"
        )
    sinal = -1 if f.grau % 2 else 1

    def acao(k: Hashable) -> Vector:
        return d_destino(f.acao(k)) - f(d_origem.acao(k)).escalar(sinal)

    return GradedMap(f.grau + d_destino.grau, acao, f.origem, f.destino, f"d({f.nome})")


def tensor_maps(*mapas: GradedMap) -> GradedMap:
    """
    Produto tensorial de mapas, agindo em chaves-tupla:
    (f₁⊗…⊗f_r)(a₁⊗…⊗a_r) = (−1)^{Σ_i |f_i|·Σ_{j<i}|a_j|} f₁(a₁)⊗…⊗f_r(a_r).

    Origem e destino são os produtos tensoriais dos complexos dos fatores,
    de modo que o resultado admite ``diff_of_map`` e ``transpose_map``.

    Raises:
        ModuloIncompativelError: Se algum fator não tiver origem e destino.
    """
    if not mapas or any(not isinstance(c, Complex) for f in mapas for c in (f.origem, f.destino)):
        raise ModuloIncompativelError("Produto tensorial exige mapas entre complexos")
    anel = mapas[0].origem.anel

    def acao(chave: Tuple) -> Vector:
        if len(chave) != len(mapas):
            raise ModuloIncompativelError(
                f"Tensor de {len(mapas)} mapas aplicado a {len(chave)} fatores"
            )
        expoente, acumulado = 0, 0
        for f, a in zip(mapas, chave):
            expoente += f.grau * acumulado
            acumulado += grau(a)
        imagem = tensor(*(f.acao(a) for f, a in zip(mapas, chave)))
        return imagem.escalar(anel.sinal(expoente))

    return GradedMap(
        sum(f.grau for f in mapas), acao,
        produto_tensorial(*(f.origem for f in mapas)),
        produto_tensorial(*(f.destino for f in mapas)),
        "⊗".join(f.nome for f in mapas),
    )


def diferencial_tensorial(complexos: List[Complex]) -> Callable[[Tuple], Vector]:
    """Diferencial d_⊗ = Σ 1⊗…⊗d⊗…⊗1 em chaves-tupla."""
    anel = complexos[0].anel

    def acao(chave: Tuple) -> Vector:
        total = Vector.zero(anel)
        acumulado = 0
        for i, (c, a) in enumerate(zip(complexos, chave)):
            fatores = [Vector.basis(anel, x) for x in chave]
            fatores[i] = c.diferencial_chave(a)
            total = total + tensor(*fatores).escalar(anel.sinal(acumulado))
            acumulado += grau(a)
        return total

    return acao


def produto_tensorial(*complexos: Complex) -> Complex:
    """Complexo C₁⊗…⊗C_r com a base produto por grau total."""
    anel = complexos[0].anel
    graus_fatores = [list(c.graus) for c in complexos]
    cache: Dict[int, List] = {}

    def base(n: int) -> List:
        if n not in cache:
            chaves: List[Tuple] = [()]
            for c, gs in zip(complexos, graus_fatores):
                chaves = [k + (x,) for k in chaves for g in gs for x in c.base(g)]
            cache[n] = [k for k in chaves if grau(k) == n]
        return cache[n]

    totais = sorted({sum(t) for t in _somas(graus_fatores)})
    return Complex(
        "⊗".join(c.nome for c in complexos), anel, base,
        diferencial_tensorial(list(complexos)), complexos[0].direcao, totais,
        all(c.finito for c in complexos),
    )


def _somas(listas: List[List[int]]) -> List[Tuple[int, ...]]:
    resultado: List[Tuple[int, ...]] = [()]
    for gs in listas:
        resultado = [r + (g,) for r in resultado for g in gs]
    return resultado


def transpose_map(f: GradedMap) -> GradedMap:
    """
    Transposto f*: B∨ → A∨, f*(β) = (−1)^{|f||β|} β∘f.

    Raises:
        JanelaInsuficienteError: Se a origem não tiver posto finito.
    """
    origem: Complex = f.origem
    if not origem.finito:
        raise JanelaInsuficienteError(f"Transposto de {f.nome} exige posto finito")
    anel = origem.anel

    def acao(beta: Dual) -> Vector:
        alvo = grau(beta.chave) - f.grau
        sinal = anel.sinal(f.grau * grau(beta))
        termos = []
        for a in origem.base(alvo):
            c = f.acao(a).coeficiente(beta.chave)
            if c:
                termos.append((Dual(a), sinal * c))
        return Vector.somar(anel, termos)

    return GradedMap(f.grau, acao, dual(f.destino), dual(origem), f"{f.nome}*")


def dual(c: Complex) -> Complex:
    """Complexo dual C∨ com diferencial −(d_C)*."""
    if not c.finito:
        raise JanelaInsuficienteError(f"Dual de {c.nome} exige posto finito")
    anel = c.anel
    graus_duais = sorted(-g for g in c.graus)

    def base(n: int) -> List[Dual]:
        return [Dual(k) for k in c.base(-n)]

    def diferencial(beta: Dual) -> Vector:
        sinal = anel.sinal(1 + c.direcao * grau(beta))
        termos = []
        for a in c.base(grau(beta.chave) - c.direcao):
            coef = c.diferencial_chave(a).coeficiente(beta.chave)
            if coef:
                termos.append((Dual(a), sinal * coef))
        return Vector.somar(anel, termos)

    return Complex(f"{c.nome}∨", anel, base, diferencial, c.direcao, graus_duais)


def desuspend(c: Complex) -> Complex:
    """Dessuspensão s⁻¹C: graus diminuem de 1 e d(s⁻¹x) = −s⁻¹(dx)."""
    anel = c.anel

    def base(n: int) -> List[Desuspended]:
        return [Desuspended(k) for k in c.base(n + 1)]

    def diferencial(k: Desuspended) -> Vector:
        return -c.diferencial_chave(k.chave).mapear(lambda x: Vector.basis(anel, Desuspended(x)))

    return Complex(
        f"s⁻¹{c.nome}", anel, base, diferencial, c.direcao,
        [g - 1 for g in c.graus], c.finito,
    )


def desuspensao(c: Complex) -> GradedMap:
    """Mapa s⁻¹: C → s⁻¹C, de grau −1."""
    alvo = desuspend(c)
    return GradedMap(-1, lambda k: Vector.basis(c.anel, Desuspended(k)), c, alvo, "s⁻¹")
