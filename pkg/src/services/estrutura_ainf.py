"""
Estrutura A∞ na construção de barras bilateral B(A′, A, A″) de hgas.

O deslocamento S, o colapso f₁, a homotopia h e as famílias hₙ e fₙ
vivem em B(A, A, A″); as operações mₙ em B(A′, A, A″) usam a versão
esquerda B(A′, A′, 𝕜) dessas mesmas construções.
"""

from __future__ import annotations

from itertools import product
from typing import Any, Dict, Hashable, List, Sequence, Tuple

from src.models.ainf import AInfMorphismToDga, AInfStructure
from src.models.algebra import (
    AlgebraAumentada,
    AlgebraBase,
    AlgebraHga,
    MorfismoDga,
    morfismo_aumento,
    morfismo_identidade,
)
from src.models.barra import PALAVRA_VAZIA, UNIDADE, BarWord, TwoSidedBarElement
from src.models.koszul import Mapa, sinal_ks
from src.models.vetor import Vector, grau, tensor
from src.services.construcao_barra import BarComplex, ProdutoKS, TwoSidedBar
from src.validators.exceptions import ModuloIncompativelError


def aplicar_multilinear(funcao, anel, vetores: Sequence[Vector]) -> Vector:
    """Estende ``funcao`` (em tuplas de chaves) multilinearmente."""
    if not vetores:
        return funcao(())
    return tensor(*vetores).mapear(funcao)


def _colocar_esquerda(anel, a1: Hashable, v: Vector) -> Vector:
    """a′ ⊗ (1𝐰c) ↦ a′𝐰c."""
    return Vector(anel, {TwoSidedBarElement(a1, k.palavra, k.direita): c for k, c in v.items()})


def _juntar(anel, esquerda: Vector, direita: Vector) -> Vector:
    """Σ x ⊗ (1𝐰c) ↦ Σ x𝐰c, com x percorrendo as chaves de ``esquerda``."""
    total: Dict[TwoSidedBarElement, Any] = {}
    for a1, c1 in esquerda.items():
        for k, c2 in direita.items():
            chave = TwoSidedBarElement(a1, k.palavra, k.direita)
            total[chave] = total.get(chave, anel.zero) + c1 * c2
    return Vector(anel, total)


def barra_sobre_base(meio: AlgebraAumentada, direita: AlgebraAumentada, phi_direita: MorfismoDga,
                     barra: BarComplex = None) -> TwoSidedBar:
    """B(𝕜, A, A″) para φ″: A → A″."""
    base = AlgebraBase(meio.anel)
    return TwoSidedBar(base, meio, direita, morfismo_aumento(meio, base), phi_direita, barra)


class HomotopiaBarra:
    """
    S, f₁, h, hₙ e fₙ em B(A, A, A″).

    Attributes:
        barra: B(A, A, A″).
        barra_direita: B(𝕜, A, A″), alvo de S.
        ks: Produto de Kadeishvili–Saneblidze em B(𝕜, A, A″).

    Raises:
        ModuloIncompativelError: Se a álgebra da esquerda não for a do meio.
    """

    def __init__(self, barra: TwoSidedBar):
        if barra.esquerda is not barra.meio:
            raise ModuloIncompativelError(
                f"{barra.nome}: a álgebra da esquerda deve ser a do meio"
            )
        self.barra = barra
        self.anel = barra.anel
        self.barra_direita = barra_sobre_base(barra.meio, barra.direita, barra.phi_direita, barra.barra)
        self.ks = ProdutoKS(self.barra_direita)
        self._h: Dict[Tuple[TwoSidedBarElement, TwoSidedBarElement], Vector] = {}
        self._hn: Dict[Tuple[TwoSidedBarElement, ...], Vector] = {}

    def S_chave(self, x: TwoSidedBarElement) -> Vector:
        """S(a𝐚a″) = [ā|𝐚]a″, de grau −1."""
        a1, w, a2 = x
        letra = self.barra.barra.palavra(self.barra.meio.vetor(a1))
        return Vector(
            self.anel,
            {TwoSidedBarElement(UNIDADE, BarWord(k.letras + w.letras), a2): c for k, c in letra.items()},
        )

    def S(self, v: Vector) -> Vector:
        return v.mapear(self.S_chave)

    def f1_chave(self, x: TwoSidedBarElement) -> Vector:
        """f₁(a𝐚a″) = φ″(a)·ε(𝐚)·a″."""
        a1, w, a2 = x
        if w.comprimento:
            return Vector.zero(self.anel)
        return self.barra.direita.produto(
            self.barra.phi_direita.aplicar_chave(a1), self.barra.direita.vetor(a2)
        )

    def f1(self, v: Vector) -> Vector:
        return v.mapear(self.f1_chave)

    def h_chave(self, x: TwoSidedBarElement, y: TwoSidedBarElement) -> Vector:
        """h(a′𝐚a″, ↔𝐛) = (−1)^{|↔𝐚|} a′ ⊗ (𝐚a″)·S(↔𝐛)."""
        chave = (x, y)
        if chave not in self._h:
            a1, w, a2 = x
            direita = Vector.basis(self.anel, TwoSidedBarElement(UNIDADE, w, a2))
            produto_ks = self.ks.produto(direita, self.S_chave(y))
            self._h[chave] = _colocar_esquerda(self.anel, a1, produto_ks).escalar(
                self.anel.sinal(grau(x))
            )
        return self._h[chave]

    def h(self, x: Vector, y: Vector) -> Vector:
        return tensor(x, y).mapear(lambda k: self.h_chave(k[0], k[1]))

    def h_n_chave(self, chaves: Tuple[TwoSidedBarElement, ...]) -> Vector:
        """
        h₁ = 1, h₂ = h e hₙ(…, ↔𝐚ₙ₋₁, ↔𝐚ₙ) = ± hₙ₋₁(…, h(↔𝐚ₙ₋₁, ↔𝐚ₙ)).
        """
        chaves = tuple(chaves)
        n = len(chaves)
        if n == 1:
            return Vector.basis(self.anel, chaves[0])
        if chaves not in self._hn:
            interno = self.h_chave(chaves[-2], chaves[-1])
            sinal = self.anel.sinal(sum(grau(x) for x in chaves[:-2]))
            total = Vector.zero(self.anel)
            for k, c in interno.items():
                total = total + self.h_n_chave(chaves[:-2] + (k,)).escalar(c)
            self._hn[chaves] = total.escalar(sinal)
        return self._hn[chaves]

    def h_n(self, vetores: Sequence[Vector]) -> Vector:
        return aplicar_multilinear(self.h_n_chave, self.anel, vetores)

    def f_n_chave(self, chaves: Tuple[TwoSidedBarElement, ...]) -> Vector:
        """fₙ = f₁∘hₙ."""
        return self.f1(self.h_n_chave(tuple(chaves)))

    def f_n(self, vetores: Sequence[Vector]) -> Vector:
        return aplicar_multilinear(self.f_n_chave, self.anel, vetores)


class EstruturaAInf:
    """
    Operações mₙ em B(A′, A, A″).

    m₂(↔𝐚₁, ↔𝐚₂) = a′₁𝐄(𝐚₁₍₁₎, S h₁(←𝐚₂₍₁₎)) ⊗ →𝐚₁₍₂₎·→𝐚₂₍₂₎ + a′₁ε(a′₂) ⊗ →𝐚₁·→𝐚₂
    mₙ(↔𝐚₁, …, ↔𝐚ₙ) = a′₁𝐄(𝐚₁₍₁₎, S hₙ₋₁(←𝐚₂₍₁₎, …)) ⊗ →𝐚₁₍₂₎⋯→𝐚ₙ₍₂₎, n ≥ 3,

    com todos os sinais pela regra de Koszul. A′, A e A″ devem ser hgas.

    Example:
        >>> m = EstruturaAInf(TwoSidedBar(A, A, A, um, um))
        >>> m.m_chave(2, (x, y))
    """

    def __init__(self, barra: TwoSidedBar):
        for alg in (barra.esquerda, barra.meio, barra.direita):
            if not isinstance(alg, AlgebraHga):
                raise ModuloIncompativelError(f"{alg.nome} não é uma hga")
        self.barra = barra
        self.anel = barra.anel
        A1 = barra.esquerda
        self.bar_esquerda = BarComplex(A1)
        self.base = AlgebraBase(self.anel)
        self.barra_esquerda = TwoSidedBar(
            A1, A1, self.base, morfismo_identidade(A1), morfismo_aumento(A1, self.base), self.bar_esquerda
        )
        self.homotopia_esquerda = HomotopiaBarra(self.barra_esquerda)
        self.barra_direita = barra_sobre_base(barra.meio, barra.direita, barra.phi_direita, barra.barra)
        self.ks = ProdutoKS(self.barra_direita)
        self._m: Dict[Tuple[TwoSidedBarElement, ...], Vector] = {}

    def unidade(self) -> Vector:
        return self.barra.elemento(
            self.barra.esquerda.unidade(),
            Vector.basis(self.anel, PALAVRA_VAZIA),
            self.barra.direita.unidade(),
        )

    def aumento_chave(self, x: TwoSidedBarElement) -> Any:
        a1, w, a2 = x
        if w.comprimento:
            return self.anel.zero
        return self.barra.esquerda.aumento_chave(a1) * self.barra.direita.aumento_chave(a2)

    def _imagem_esquerda(self, w: BarWord) -> Vector:
        """Bφ′(𝐰) como palavra de BA′."""
        return self.barra.barra.imagem(self.barra.phi_esquerda, w)

    def m_chave(self, n: int, chaves: Tuple[TwoSidedBarElement, ...]) -> Vector:
        chaves = tuple(chaves)
        if len(chaves) != n or n < 2:
            raise ModuloIncompativelError(f"m_{n} aplicado a {len(chaves)} argumentos")
        if chaves in self._m:
            return self._m[chaves]
        anel = self.anel
        A1 = self.barra.esquerda
        total = Vector.zero(anel)
        cortes = [range(min(chaves[0].comprimento, 1) + 1)] + [
            range(x.comprimento + 1) for x in chaves[1:]
        ]
        for divisao in product(*cortes):
            prefixos = [x.palavra.prefixo(j) for x, j in zip(chaves, divisao)]
            sufixos = [x.palavra.sufixo(j) for x, j in zip(chaves, divisao)]
            esquerdas = [
                self.barra_esquerda.elemento(
                    A1.vetor(x.esquerda), self._imagem_esquerda(p), self.base.unidade()
                )
                for x, p in zip(chaves[1:], prefixos[1:])
            ]
            interno = self.homotopia_esquerda.S(self.homotopia_esquerda.h_n(esquerdas))
            if not interno:
                continue
            palavras = Vector(anel, {k.palavra: c for k, c in interno.items()})
            e = self.bar_esquerda.E_vetor(self._imagem_esquerda(prefixos[0]), palavras)
            if not e:
                continue
            lado_esquerdo = A1.produto(A1.vetor(chaves[0].esquerda), e)
            direitas = [
                Vector.basis(anel, TwoSidedBarElement(UNIDADE, s, x.direita))
                for x, s in zip(chaves, sufixos)
            ]
            lado_direito = self.ks.produto_varios(*direitas)
            total = total + _juntar(anel, lado_esquerdo, lado_direito).escalar(
                self._sinal_m(chaves, prefixos, sufixos)
            )
        if n == 2:
            epsilon = A1.aumento_chave(chaves[1].esquerda)
            if epsilon:
                direitas = [
                    Vector.basis(anel, TwoSidedBarElement(UNIDADE, x.palavra, x.direita)) for x in chaves
                ]
                total = total + _juntar(
                    anel, A1.vetor(chaves[0].esquerda), self.ks.produto_varios(*direitas)
                ).escalar(epsilon)
        self._m[chaves] = total
        return total

    @staticmethod
    def _sinal_m(chaves, prefixos: List[BarWord], sufixos: List[BarWord]) -> int:
        """
        Variáveis na ordem original a′₁, 𝐩₁, →𝐚₁, ←𝐚₂, →𝐚₂, …; escrita
        a′₁ 𝐄 𝐩₁ S hₙ₋₁ ←𝐚₂ … ←𝐚ₙ →𝐚₁ … →𝐚ₙ.
        """
        n = len(chaves)
        graus = [grau(chaves[0].esquerda), grau(prefixos[0]), grau(sufixos[0]) + grau(chaves[0].direita)]
        for x, p, s in zip(chaves[1:], prefixos[1:], sufixos[1:]):
            graus.append(grau(x.esquerda) + grau(p))
            graus.append(grau(s) + grau(x.direita))
        esquerdas = [3 + 2 * i for i in range(n - 1)]
        direitas = [2] + [4 + 2 * i for i in range(n - 1)]
        escrita = [0, Mapa(1), 1, Mapa(-1), Mapa(2 - n)] + esquerdas + direitas
        return sinal_ks(graus, escrita)

    def m(self, vetores: Sequence[Vector]) -> Vector:
        n = len(vetores)
        return aplicar_multilinear(lambda k: self.m_chave(n, k), self.anel, vetores)

    def como_estrutura(self) -> AInfStructure:
        return AInfStructure(
            self.barra.nome, self.anel, self.barra.diferencial_chave,
            self.m_chave, self.unidade(), self.aumento_chave,
        )


def morfismo_colapso(homotopia: HomotopiaBarra, estrutura: EstruturaAInf) -> AInfMorphismToDga:
    """O A∞-morfismo aumentado (fₙ): B(A, A, A″) ⇒ A″."""
    return AInfMorphismToDga(
        f"f: {homotopia.barra.nome} ⇒ {homotopia.barra.direita.nome}",
        estrutura.como_estrutura(),
        homotopia.barra.direita,
        lambda n, chaves: homotopia.f_n_chave(chaves),
    )


def mapa_estrito(
    origem: TwoSidedBar,
    destino: TwoSidedBar,
    chi_esquerda: MorfismoDga,
    chi_meio: MorfismoDga,
    chi_direita: MorfismoDga,
):
    """B(χ′, χ, χ″) em chaves, para morfismos de dgas compatíveis."""

    def acao(x: TwoSidedBarElement) -> Vector:
        a1, w, a2 = x
        return destino.elemento(
            chi_esquerda.aplicar_chave(a1),
            origem.barra.imagem(chi_meio, w),
            chi_direita.aplicar_chave(a2),
        )

    return acao


def morfismo_aumento_geral(
    estrutura: EstruturaAInf,
    alvo: AlgebraHga,
    chi_esquerda: MorfismoDga,
    chi_meio: MorfismoDga,
    chi_direita: MorfismoDga,
) -> AInfMorphismToDga:
    """
    f: B(A′, A, A″) ⇒ Ã como a composta de B(χ′, χ, χ″): B(A′, A, A″) →
    B(Ã, Ã, Ã) com o colapso B(Ã, Ã, Ã) ⇒ Ã.
    """
    um = morfismo_identidade(alvo)
    total = TwoSidedBar(alvo, alvo, alvo, um, um)
    homotopia = HomotopiaBarra(total)
    estrito = mapa_estrito(estrutura.barra, total, chi_esquerda, chi_meio, chi_direita)
    anel = alvo.anel

    def f(n: int, chaves: Tuple[TwoSidedBarElement, ...]) -> Vector:
        return aplicar_multilinear(homotopia.f_n_chave, anel, [estrito(x) for x in chaves])

    return AInfMorphismToDga(
        f"f: {estrutura.barra.nome} ⇒ {alvo.nome}", estrutura.como_estrutura(), alvo, f
    )
