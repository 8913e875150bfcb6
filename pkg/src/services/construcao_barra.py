"""
Construções de barras: BA reduzida, B(A′,A,A″) bilateral, cocadeias de
torção, o produto μ de uma hga e o produto de Kadeishvili–Saneblidze.

As construções são infinitas; a base é materializada por grau com um
teto de comprimento de palavra escolhido por quem chama.
"""

from __future__ import annotations

from itertools import combinations
from typing import Any, Callable, Dict, Hashable, Iterable, List, Optional, Tuple

from src.models.algebra import AlgebraAumentada, AlgebraBase, AlgebraHga, MorfismoDga
from src.models.ainf import AInfMorphismToDga
from src.models.barra import PALAVRA_VAZIA, UNIDADE, BarWord, TwoSidedBarElement
from src.models.koszul import koszul_sign
from src.models.mapa_graduado import Complex
from src.models.vetor import Vector, grau, tensor
from src.validators.exceptions import ModuloIncompativelError


def _composicoes(n: int) -> List[Tuple[int, ...]]:
    """Composições de n em partes positivas, em ordem lexicográfica."""
    if n == 0:
        return [()]
    return [(p,) + resto for p in range(1, n + 1) for resto in _composicoes(n - p)]


def _em_palavras(v: Vector) -> Vector:
    """Chaves-tupla de letras viram palavras."""
    return Vector(v.anel, {BarWord(k): c for k, c in v.items()})


class BarComplex:
    """
    Construção de barras reduzida BA de uma dga aumentada.

    Para uma hga também oferece a cocadeia de torção 𝐄: BA⊗BA → A e o
    produto μ que faz de BA uma biálgebra dg.

    Attributes:
        A: Álgebra de letras.
        anel: Anel de coeficientes.

    Example:
        >>> B = BarComplex(CochainAlgebra(simplexo_padrao(1), anel))
        >>> B.diferencial_chave(BarWord((Cocadeia(v1),)))
        -1*[v01*]
    """

    def __init__(self, A: AlgebraAumentada):
        self.A = A
        self.anel = A.anel
        self._palavras: Dict[Tuple[int, int], List[BarWord]] = {}
        self._mu: Dict[Tuple[BarWord, BarWord], Vector] = {}
        self._E: Dict[Tuple[BarWord, BarWord], Vector] = {}

    # Base

    def palavra(self, *letras: Vector) -> Vector:
        """[v₁|…|v_k] multilinear; cada letra é projetada em Ā."""
        if not letras:
            return Vector.basis(self.anel, PALAVRA_VAZIA)
        reduzidas = [self.A.reduzir(v) for v in letras]
        return _em_palavras(tensor(*reduzidas))

    def palavras(self, comprimento: int, grau_total: int) -> List[BarWord]:
        """Palavras de comprimento e grau dados, em ordem determinística."""
        chave = (comprimento, grau_total)
        if chave not in self._palavras:
            if comprimento == 0:
                lista = [PALAVRA_VAZIA] if grau_total == 0 else []
            else:
                lista = []
                for g in self.A.graus():
                    restante = grau_total - (g - 1)
                    for a in self.A.base_reduzida(g):
                        for resto in self.palavras(comprimento - 1, restante):
                            lista.append(BarWord((a,) + resto.letras))
            self._palavras[chave] = lista
        return self._palavras[chave]

    def base(self, grau_total: int, comprimento_max: int) -> List[BarWord]:
        return [w for k in range(comprimento_max + 1) for w in self.palavras(k, grau_total)]

    def complexo(self, comprimento_max: int, graus: Iterable[int]) -> Complex:
        return Complex(
            f"B{self.A.nome}", self.anel,
            lambda n: self.base(n, comprimento_max),
            self.diferencial_chave, 1, list(graus), finito=False,
        )

    # Estrutura de dgc

    def substituir(self, w: BarWord, i: int, j: int, v: Vector) -> Vector:
        """Troca as letras i..j−1 de w por cada chave de v."""
        return Vector(
            self.anel,
            {BarWord(w.letras[:i] + (k,) + w.letras[j:]): c for k, c in v.items()},
        )

    def diferencial_chave(self, w: BarWord) -> Vector:
        """
        d[a₁|…|a_k] = −Σᵢ (−1)^{ε_{i−1}} [… |daᵢ| …]
                      + Σᵢ (−1)^{ε_i} [… |aᵢa_{i+1}| …],
        com ε_i = |a₁| + … + |aᵢ| − i.
        """
        A, anel = self.A, self.anel
        total = Vector.zero(anel)
        epsilon = 0
        for i, a in enumerate(w.letras):
            total = total - self.substituir(w, i, i + 1, A.diferencial_chave(a)).escalar(
                anel.sinal(epsilon)
            )
            epsilon += grau(a) - 1
            if i + 1 < w.comprimento:
                produto = A.produto_chaves(a, w.letras[i + 1])
                total = total + self.substituir(w, i, i + 2, produto).escalar(anel.sinal(epsilon))
        return total

    def diagonal_chave(self, w: BarWord) -> Vector:
        """Δ[a₁|…|a_k] = Σᵢ [a₁|…|aᵢ] ⊗ [a_{i+1}|…|a_k]."""
        return Vector.somar(
            self.anel, [((w.prefixo(i), w.sufixo(i)), self.anel.um) for i in range(w.comprimento + 1)]
        )

    def aumento_chave(self, w: BarWord) -> Any:
        return self.anel.um if w.comprimento == 0 else self.anel.zero

    def t_chave(self, w: BarWord) -> Vector:
        """Cocadeia de torção canônica: [a] ↦ a, demais comprimentos ↦ 0."""
        if w.comprimento == 1:
            return self.A.vetor(w.letras[0])
        return Vector.zero(self.anel)

    def imagem(self, phi: MorfismoDga, w: BarWord) -> Vector:
        """Bφ[a₁|…|a_k] = [φa₁|…|φa_k]."""
        if phi.origem is not self.A:
            raise ModuloIncompativelError(f"{phi.nome} não parte de {self.A.nome}")
        if not w.letras:
            return Vector.basis(self.anel, PALAVRA_VAZIA)
        return _em_palavras(tensor(*(phi.aplicar_chave(a) for a in w.letras)))

    # Estrutura de hga

    def _hga(self) -> AlgebraHga:
        if not isinstance(self.A, AlgebraHga):
            raise ModuloIncompativelError(f"{self.A.nome} não é uma hga")
        return self.A

    def E_chave(self, w1: BarWord, w2: BarWord) -> Vector:
        """
        Cocadeia de torção 𝐄: BA⊗BA → A da hga.

        𝐄(𝐚, []) = t(𝐚), 𝐄([], 𝐛) = t(𝐛), 𝐄(𝐚, 𝐛) = 0 se 𝐚 tem
        comprimento ≥ 2 e 𝐄([a], [b₁|…|b_k]) = ±E_k(a; b₁, …, b_k).
        """
        chave = (w1, w2)
        if chave not in self._E:
            A = self._hga()
            if w1.comprimento == 0:
                valor = self.t_chave(w2)
            elif w2.comprimento == 0:
                valor = self.t_chave(w1)
            elif w1.comprimento >= 2:
                valor = Vector.zero(self.anel)
            else:
                a, bs = w1.letras[0], w2.letras
                k = len(bs)
                expoente = (k + 2) * (k + 3) // 2 + 1 + k * grau(a) + sum(grau(b) for b in bs)
                expoente += sum((k - j) * (grau(b) - 1) for j, b in enumerate(bs))
                valor = A.E_chaves(a, bs).escalar(self.anel.sinal(expoente))
            self._E[chave] = valor
        return self._E[chave]

    def E_vetor(self, x: Vector, y: Vector) -> Vector:
        return tensor(x, y).mapear(lambda k: self.E_chave(k[0], k[1]))

    def produto_chave(self, w1: BarWord, w2: BarWord) -> Vector:
        """
        μ(𝐚, 𝐛) = Σ_{(i,j)≠(0,0)} (−1)^{|𝐚[i:]||𝐛[:j]|}
        [𝐄(𝐚[:i], 𝐛[:j])] ⊔ μ(𝐚[i:], 𝐛[j:]), com μ([], []) = [].
        """
        chave = (w1, w2)
        if chave in self._mu:
            return self._mu[chave]
        anel = self.anel
        if w1.comprimento == 0 and w2.comprimento == 0:
            resultado = Vector.basis(anel, PALAVRA_VAZIA)
        else:
            resultado = Vector.zero(anel)
            for i in range(min(w1.comprimento, 1) + 1):
                for j in range(w2.comprimento + 1):
                    if i == 0 and j == 0:
                        continue
                    letra = self.E_chave(w1.prefixo(i), w2.prefixo(j))
                    if not letra:
                        continue
                    cauda = self.produto_chave(w1.sufixo(i), w2.sufixo(j))
                    sinal = anel.sinal(grau(w1.sufixo(i)) * grau(w2.prefixo(j)))
                    for (a, resto), c in tensor(self.A.reduzir(letra), cauda).items():
                        resultado = resultado + Vector.basis(
                            anel, BarWord((a,) + resto.letras), sinal * c
                        )
        self._mu[chave] = resultado
        return resultado

    def produto(self, x: Vector, y: Vector) -> Vector:
        return tensor(x, y).mapear(lambda k: self.produto_chave(k[0], k[1]))

    def diferencial_par(self, par: Tuple[BarWord, BarWord]) -> Vector:
        """d_⊗ em BA⊗BA."""
        w1, w2 = par
        anel = self.anel
        return tensor(self.diferencial_chave(w1), Vector.basis(anel, w2)) + tensor(
            Vector.basis(anel, w1), self.diferencial_chave(w2)
        ).escalar(anel.sinal(grau(w1)))

    def diagonal_par(self, par: Tuple[BarWord, BarWord]) -> Vector:
        """Δ(𝐚⊗𝐛) = Σ (−1)^{|𝐚₍₂₎||𝐛₍₁₎|} (𝐚₍₁₎⊗𝐛₍₁₎)⊗(𝐚₍₂₎⊗𝐛₍₂₎)."""
        w1, w2 = par
        termos = []
        for i in range(w1.comprimento + 1):
            for j in range(w2.comprimento + 1):
                sinal = self.anel.sinal(grau(w1.sufixo(i)) * grau(w2.prefixo(j)))
                termos.append(
                    (((w1.prefixo(i), w2.prefixo(j)), (w1.sufixo(i), w2.sufixo(j))), sinal)
                )
        return Vector.somar(self.anel, termos)

    def __repr__(self) -> str:
        return f"BarComplex(B{self.A.nome})"


def violacoes_torcao(
    tau: Callable[[Hashable], Vector],
    diferencial: Callable[[Hashable], Vector],
    diagonal: Callable[[Hashable], Vector],
    alvo: AlgebraAumentada,
    chaves: Iterable[Hashable],
) -> List[Tuple[Hashable, Vector]]:
    """
    Confere d(τ) = τ∪τ para uma cocadeia de torção τ de grau 1, com
    d(τ) = d_A τ + τ d e (τ∪τ)(c) = Σ (−1)^{|c₍₁₎|} τ(c₍₁₎) τ(c₍₂₎).

    Returns:
        Pares (chave, diferença) nas chaves em que a identidade falha.
    """
    falhas = []
    for c in chaves:
        lado_d = alvo.diferencial(tau(c)) + diferencial(c).mapear(tau)
        lado_cup = Vector.zero(alvo.anel)
        for (x, y), coef in diagonal(c).items():
            parcela = alvo.produto(tau(x), tau(y))
            lado_cup = lado_cup + parcela.escalar(coef * alvo.anel.sinal(grau(x)))
        if lado_d != lado_cup:
            falhas.append((c, lado_d - lado_cup))
    return falhas


class TwoSidedBar:
    """
    Construção de barras bilateral B(A′, A, A″) para mapas de dgas
    aumentadas φ′: A → A′ e φ″: A → A″.

    Attributes:
        esquerda: A′.
        meio: A.
        direita: A″.
        phi_esquerda: φ′.
        phi_direita: φ″.
        barra: BA, usada para as palavras do meio.
    """

    def __init__(
        self,
        esquerda: AlgebraAumentada,
        meio: AlgebraAumentada,
        direita: AlgebraAumentada,
        phi_esquerda: MorfismoDga,
        phi_direita: MorfismoDga,
        barra: Optional[BarComplex] = None,
    ):
        if phi_esquerda.origem is not meio or phi_esquerda.destino is not esquerda:
            raise ModuloIncompativelError(f"{phi_esquerda.nome} não é um mapa {meio.nome} → {esquerda.nome}")
        if phi_direita.origem is not meio or phi_direita.destino is not direita:
            raise ModuloIncompativelError(f"{phi_direita.nome} não é um mapa {meio.nome} → {direita.nome}")
        self.esquerda = esquerda
        self.meio = meio
        self.direita = direita
        self.phi_esquerda = phi_esquerda
        self.phi_direita = phi_direita
        self.barra = barra or BarComplex(meio)
        self.anel = meio.anel
        self.nome = f"B({esquerda.nome},{meio.nome},{direita.nome})"

    def elemento(self, esquerda: Vector, palavra: Vector, direita: Vector) -> Vector:
        """a′⊗𝐚⊗a″ multilinear."""
        return Vector(
            self.anel,
            {TwoSidedBarElement(*k): c for k, c in tensor(esquerda, palavra, direita).items()},
        )

    def base(self, grau_total: int, comprimento_max: int) -> List[TwoSidedBarElement]:
        chaves = []
        for g1 in self.esquerda.graus():
            for a1 in self.esquerda.base(g1):
                for g2 in self.direita.graus():
                    for a2 in self.direita.base(g2):
                        for w in self.barra.base(grau_total - g1 - g2, comprimento_max):
                            chaves.append(TwoSidedBarElement(a1, w, a2))
        return chaves

    def complexo(self, comprimento_max: int, graus: Iterable[int]) -> Complex:
        return Complex(
            self.nome, self.anel, lambda n: self.base(n, comprimento_max),
            self.diferencial_chave, 1, list(graus), finito=False,
        )

    def diferencial_chave(self, x: TwoSidedBarElement) -> Vector:
        """
        d = d_⊗ + (−1)^{|a′|} a′φ′(a₁)[a₂|…]a″
            − (−1)^{|a′|+ε_{k−1}} a′[…|a_{k−1}]φ″(a_k)a″.
        """
        anel = self.anel
        a1, w, a2 = x
        um = Vector.basis
        g1 = grau(a1)
        total = self.elemento(self.esquerda.diferencial_chave(a1), um(anel, w), um(anel, a2))
        total = total + self.elemento(
            um(anel, a1), self.barra.diferencial_chave(w), um(anel, a2)
        ).escalar(anel.sinal(g1))
        total = total + self.elemento(
            um(anel, a1), um(anel, w), self.direita.diferencial_chave(a2)
        ).escalar(anel.sinal(g1 + grau(w)))
        if w.comprimento:
            primeira = self.esquerda.produto(um(anel, a1), self.phi_esquerda.aplicar_chave(w.letras[0]))
            total = total + self.elemento(primeira, um(anel, w.sufixo(1)), um(anel, a2)).escalar(
                anel.sinal(g1)
            )
            k = w.comprimento
            ultima = self.direita.produto(self.phi_direita.aplicar_chave(w.letras[-1]), um(anel, a2))
            total = total - self.elemento(um(anel, a1), um(anel, w.prefixo(k - 1)), ultima).escalar(
                anel.sinal(g1 + grau(w.prefixo(k - 1)))
            )
        return total

    def diagonal_chave(self, x: TwoSidedBarElement) -> Vector:
        """↔Δ(a′𝐚a″) = Σᵢ a′[a₁|…|aᵢ]1 ⊗ 1[a_{i+1}|…|a_k]a″."""
        a1, w, a2 = x
        return Vector.somar(
            self.anel,
            [
                ((TwoSidedBarElement(a1, w.prefixo(i), UNIDADE),
                  TwoSidedBarElement(UNIDADE, w.sufixo(i), a2)), self.anel.um)
                for i in range(w.comprimento + 1)
            ],
        )

    def acao_direita(self, v: Vector, c: Vector) -> Vector:
        """Ação de A″ pela direita: (a′𝐚a″)·c = a′𝐚(a″c)."""
        total = Vector.zero(self.anel)
        for (a1, w, a2), coef in v.items():
            direita = self.direita.produto(Vector.basis(self.anel, a2), c)
            total = total + self.elemento(
                Vector.basis(self.anel, a1), Vector.basis(self.anel, w), direita
            ).escalar(coef)
        return total

    def __repr__(self) -> str:
        return f"TwoSidedBar({self.nome})"


class ProdutoKS:
    """
    Produto de Kadeishvili–Saneblidze em B(𝕜, A, A″) para um morfismo
    de hgas φ″: A → A″:

        (𝐚a″)·(𝐛b″) = Σ_j (−1)^{|a″||𝐛[:j]|} μ(𝐚, 𝐛[:j]) ⊗ 𝐄″([ā″], Bφ″(𝐛[j:]))·b″
                      + μ(𝐚, 𝐛) ⊗ ε(a″)b″.

    Com A″ = 𝕜 reduz-se ao produto μ de BA.
    """

    def __init__(self, barra: TwoSidedBar):
        if not isinstance(barra.esquerda, AlgebraBase):
            raise ModuloIncompativelError(f"{barra.nome} não tem 𝕜 à esquerda")
        self.barra = barra
        self.anel = barra.anel
        self.bar_meio = barra.barra
        self.bar_direita = BarComplex(barra.direita)
        self._cache: Dict[Tuple[TwoSidedBarElement, TwoSidedBarElement], Vector] = {}

    def produto_chave(self, x: TwoSidedBarElement, y: TwoSidedBarElement) -> Vector:
        chave = (x, y)
        if chave in self._cache:
            return self._cache[chave]
        anel = self.anel
        A2 = self.barra.direita
        _, w1, a2 = x
        _, w2, b2 = y
        b2_vetor = Vector.basis(anel, b2)
        letra = self.bar_direita.palavra(A2.vetor(a2))
        total = Vector.zero(anel)
        for j in range(w2.comprimento + 1):
            mu = self.bar_meio.produto_chave(w1, w2.prefixo(j))
            if not mu:
                continue
            imagem = self.bar_meio.imagem(self.barra.phi_direita, w2.sufixo(j))
            e = self.bar_direita.E_vetor(letra, imagem)
            if not e:
                continue
            sinal = anel.sinal(grau(a2) * grau(w2.prefixo(j)))
            total = total + self.barra.elemento(
                Vector.basis(anel, UNIDADE),
                mu, A2.produto(e, b2_vetor),
            ).escalar(sinal)
        epsilon = A2.aumento_chave(a2)
        if epsilon:
            total = total + self.barra.elemento(
                Vector.basis(anel, UNIDADE),
                self.bar_meio.produto_chave(w1, w2),
                b2_vetor.escalar(epsilon),
            )
        self._cache[chave] = total
        return total

    def produto(self, x: Vector, y: Vector) -> Vector:
        return tensor(x, y).mapear(lambda k: self.produto_chave(k[0], k[1]))

    def produto_varios(self, *fatores: Vector) -> Vector:
        resultado = fatores[0]
        for f in fatores[1:]:
            resultado = self.produto(resultado, f)
        return resultado

    def unidade(self) -> Vector:
        return self.barra.elemento(
            Vector.basis(self.anel, UNIDADE),
            Vector.basis(self.anel, PALAVRA_VAZIA),
            self.barra.direita.unidade(),
        )


# Shuffles

def bar_shuffle(destino: BarComplex, A: AlgebraAumentada, B: AlgebraAumentada, w1: BarWord, w2: BarWord) -> Vector:
    """
    [a₁|…|a_k] • [b₁|…|b_l] em B(A⊗B): soma sobre os (k,l)-shuffles das
    letras a⊗1 e 1⊗b, com o sinal de Koszul nos graus dessuspensos.
    """
    k, l = w1.comprimento, w2.comprimento
    letras_a = [tensor(A.vetor(a), B.unidade()) for a in w1.letras]
    letras_b = [tensor(A.unidade(), B.vetor(b)) for b in w2.letras]
    graus = [grau(a) - 1 for a in w1.letras] + [grau(b) - 1 for b in w2.letras]
    total = Vector.zero(destino.anel)
    for posicoes in combinations(range(k + l), k):
        ordem, letras = [], []
        ia, ib = 0, 0
        for p in range(k + l):
            if p in posicoes:
                ordem.append(ia)
                letras.append(letras_a[ia])
                ia += 1
            else:
                ordem.append(k + ib)
                letras.append(letras_b[ib])
                ib += 1
        sinal = koszul_sign(ordem, graus) if ordem else 1
        total = total + destino.palavra(*letras).escalar(sinal)
    return total


def shuffle_bilateral(
    destino: TwoSidedBar,
    origem: TwoSidedBar,
    x: TwoSidedBarElement,
    y: TwoSidedBarElement,
) -> Vector:
    """
    (a′𝐚a″) • (b′𝐛b″) = ± (a′⊗b′)(𝐚 • 𝐛)(a″⊗b″) em
    B(A′⊗A′, A⊗A, A″⊗A″), com o sinal de levar (a′,𝐚,a″,b′,𝐛,b″) a
    (a′,b′,𝐚,𝐛,a″,b″).
    """
    a1, w, a2 = x
    b1, v, b2 = y
    graus = [grau(a1), grau(w), grau(a2), grau(b1), grau(v), grau(b2)]
    sinal = koszul_sign([0, 3, 1, 4, 2, 5], graus)
    meio = origem.meio
    palavras = bar_shuffle(destino.barra, meio, meio, w, v)
    return destino.elemento(
        Vector.basis(destino.anel, (a1, b1)), palavras, Vector.basis(destino.anel, (a2, b2))
    ).escalar(sinal)


# Mapas induzidos por A∞-morfismos

def sinal_torcao(palavra: BarWord) -> int:
    """τ[a₁|…|aₙ] = (−1)^{(n+1)(n+2)/2 + 1 + Σ_j (n−j)(|a_j|−1)} fₙ(a₁,…,aₙ)."""
    n = palavra.comprimento
    expoente = (n + 1) * (n + 2) // 2 + 1
    expoente += sum((n - j) * (grau(a) - 1) for j, a in enumerate(palavra.letras, start=1))
    return -1 if expoente % 2 else 1


def cocadeia_torcao(f: AInfMorphismToDga, palavra: BarWord) -> Vector:
    """Cocadeia de torção BA → destino associada ao A∞-morfismo f."""
    if palavra.comprimento == 0:
        return Vector.zero(f.destino.anel)
    return f.componente(palavra.comprimento, palavra.letras).escalar(sinal_torcao(palavra))


class MapaBarraInduzido:
    """
    B(f′, f, f″): B(S′, S, S″) → B(A′, A, A″) para A∞-morfismos
    f′: S′ ⇒ A′, f: S ⇒ A e f″: S″ ⇒ A″ compatíveis com os mapas
    estruturais.

    a′𝐰a″ ↦ Σ θ′(a′, 𝐰₁) ⊗ Bf(𝐰₂) ⊗ θ″(𝐰₃, a″), com
    θ′ = τ′([ā′|Bψ′𝐰₁]) + ε(a′)ε(𝐰₁), θ″ = (−1)^{|𝐰₃|} τ″([Bψ″𝐰₃|ā″]) + ε(𝐰₃)ε(a″)
    e Bf(𝐰) = Σ [τ(𝐛₁)|…|τ(𝐛_r)] sobre as decomposições de 𝐰 em blocos.
    """

    def __init__(
        self,
        origem: TwoSidedBar,
        destino: TwoSidedBar,
        f_esquerda: AInfMorphismToDga,
        f_meio: AInfMorphismToDga,
        f_direita: AInfMorphismToDga,
    ):
        self.origem = origem
        self.destino = destino
        self.f_esquerda = f_esquerda
        self.f_meio = f_meio
        self.f_direita = f_direita
        self.anel = destino.anel
        self._barra_esquerda = BarComplex(origem.esquerda)
        self._barra_direita = BarComplex(origem.direita)
        self._cache: Dict[TwoSidedBarElement, Vector] = {}

    def _tau(self, f: AInfMorphismToDga, palavras: Vector) -> Vector:
        return palavras.mapear(lambda w: cocadeia_torcao(f, w))

    def theta_esquerda(self, a1: Hashable, w1: BarWord) -> Vector:
        S1 = self.origem.esquerda
        letras = [S1.vetor(a1)] + [self.origem.phi_esquerda.aplicar_chave(a) for a in w1.letras]
        valor = self._tau(self.f_esquerda, self._barra_esquerda.palavra(*letras))
        if w1.comprimento == 0:
            valor = valor + self.f_esquerda.destino.unidade().escalar(S1.aumento_chave(a1))
        return valor

    def theta_direita(self, w3: BarWord, a2: Hashable) -> Vector:
        S2 = self.origem.direita
        letras = [self.origem.phi_direita.aplicar_chave(a) for a in w3.letras] + [S2.vetor(a2)]
        valor = self._tau(self.f_direita, self._barra_direita.palavra(*letras))
        valor = valor.escalar(self.anel.sinal(grau(w3)))
        if w3.comprimento == 0:
            valor = valor + self.f_direita.destino.unidade().escalar(S2.aumento_chave(a2))
        return valor

    def barra_meio(self, w: BarWord) -> Vector:
        """Bf(𝐰) = Σ [τ(𝐛₁)|…|τ(𝐛_r)]."""
        total = Vector.zero(self.anel)
        for partes in _composicoes(w.comprimento):
            letras, inicio = [], 0
            for p in partes:
                letras.append(cocadeia_torcao(self.f_meio, BarWord(w.letras[inicio:inicio + p])))
                inicio += p
            total = total + self.destino.barra.palavra(*letras)
        return total

    def aplicar_chave(self, x: TwoSidedBarElement) -> Vector:
        if x not in self._cache:
            a1, w, a2 = x
            total = Vector.zero(self.anel)
            n = w.comprimento
            for i in range(n + 1):
                esquerda = self.theta_esquerda(a1, w.prefixo(i))
                if not esquerda:
                    continue
                for j in range(i, n + 1):
                    meio = self.barra_meio(BarWord(w.letras[i:j]))
                    direita = self.theta_direita(w.sufixo(j), a2)
                    total = total + self.destino.elemento(esquerda, meio, direita)
            self._cache[x] = total
        return self._cache[x]

    def __call__(self, v: Vector) -> Vector:
        return v.mapear(self.aplicar_chave)
