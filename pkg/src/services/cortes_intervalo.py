"""
Operações de corte em intervalos sobre cadeias normalizadas, as
cooperações E^k, as sobrejeções u(𝐣) e as famílias Ψ^hgc e Φ^hga.
"""

from __future__ import annotations

from typing import Dict, Hashable, List, Sequence, Tuple, Union

from src.models.algebra import AlgebraHga
from src.models.escalares import CoefficientRing
from src.models.koszul import Mapa, koszul_sign, sinal_ks
from src.models.simplicial import FiniteSimplicialSet, NormalFormSimplex, SimplexRef
from src.models.sobrejecao import Decomposition, IntervalCut, Surjection
from src.models.vetor import Vector, grau


Simplexo = Union[SimplexRef, NormalFormSimplex]


def _forma_normal(x: Simplexo) -> NormalFormSimplex:
    return x if isinstance(x, NormalFormSimplex) else NormalFormSimplex.nao_degenerado(x)


def sinal_corte(u: Surjection, corte: IntervalCut) -> int:
    """
    Sinal de um termo do corte: sinal de Koszul da ordenação estável dos
    intervalos por rótulo, com grau comprimento+1 para intervalos internos
    e comprimento para o último de cada rótulo, vezes (−1) elevado à soma
    das extremidades direitas dos intervalos internos.
    """
    finais = u.ultimas_ocorrencias()
    intervalos = corte.intervalos()
    graus = [
        (b - a) if final else (b - a + 1)
        for (a, b), final in zip(intervalos, finais)
    ]
    ordem = sorted(range(len(intervalos)), key=lambda t: u.valores[t])
    posicao = sum(b for (_, b), final in zip(intervalos, finais) if not final)
    sinal = koszul_sign(ordem, graus)
    return -sinal if posicao % 2 else sinal


def interval_cut(
    X: FiniteSimplicialSet, u: Surjection, x: Simplexo, anel: CoefficientRing
) -> Vector:
    """
    Operação AW_u aplicada a um simplexo.

    Returns:
        Vetor de tuplas (x₁, …, x_r) de simplexos não degenerados; termos
        com vértice repetido ou face degenerada são descartados.
    """
    nf = _forma_normal(x)
    if nf.eh_degenerado:
        return Vector.zero(anel)
    r = u.aridade
    termos: List[Tuple[Tuple[SimplexRef, ...], object]] = []
    for corte in IntervalCut.todos(nf.dim, len(u.valores)):
        vertices: List[List[int]] = [[] for _ in range(r)]
        valido = True
        for (a, b), rotulo in zip(corte.intervalos(), u.valores):
            seq = vertices[rotulo - 1]
            if seq and seq[-1] >= a:
                valido = False
                break
            seq.extend(range(a, b + 1))
        if not valido:
            continue
        fatores = []
        for seq in vertices:
            y = X.aplicar_operador(nf, seq)
            if y.eh_degenerado:
                valido = False
                break
            fatores.append(y.base)
        if valido:
            termos.append((tuple(fatores), anel(sinal_corte(u, corte))))
    return Vector.somar(anel, termos)


def hgc_E(X: FiniteSimplicialSet, k: int, x: Simplexo, anel: CoefficientRing) -> Vector:
    """Cooperação E^k: C(X) → C(X)⊗C(X)^{⊗k}; E⁰ é a identidade."""
    return interval_cut(X, Surjection.alternada(k), x, anel)


def diagonal_cadeias(X: FiniteSimplicialSet, x: Simplexo, anel: CoefficientRing) -> Vector:
    """Diagonal de Alexander–Whitney de C(X): corte com u = (1,2)."""
    return interval_cut(X, Surjection((1, 2)), x, anel)


def u_of_j(decomposicao: Decomposition) -> Surjection:
    """
    Sobrejeção u(𝐣) de comprimento 3n−1 e grau n−1, com v_t = 2t−1 e
    w_t = 2t: o bloco s é v_s seguido dos pares (w, v_s) dos índices
    consumidos por j_s; a sequência termina em w_n.

    Example:
        >>> u_of_j(Decomposition((0, 0, 2, 1))).valores
        (1, 3, 5, 2, 5, 4, 5, 7, 6, 7, 8)
    """
    valores: List[int] = []
    for s, bloco in enumerate(decomposicao.blocos(), start=1):
        v = 2 * s - 1
        valores.append(v)
        for indice in bloco:
            valores += [2 * indice, v]
    valores.append(2 * decomposicao.n)
    return Surjection(tuple(valores))


def psi_hgc(X: FiniteSimplicialSet, n: int, x: Simplexo, anel: CoefficientRing) -> Vector:
    """
    Ψ^hgc_n(x) = (−1)^{n−1} Σ_𝐣 AW_{u(𝐣)}(x), em chaves (a₁,b₁,…,aₙ,bₙ).
    """
    total = Vector.zero(anel)
    for decomposicao in Decomposition.todas(n):
        total = total + interval_cut(X, u_of_j(decomposicao), x, anel)
    return total.escalar(anel.sinal(n - 1))


def phi_j(A: AlgebraHga, decomposicao: Decomposition, pares: Sequence[Tuple[Hashable, Hashable]]) -> Vector:
    """
    Φ_𝐣(a₁⊗b₁, …, aₙ⊗bₙ) = E_{j₁}(a₁; …)⋯E_{jₙ}(aₙ; …)·bₙ, com o sinal
    de Koszul da leitura escrita.
    """
    n = decomposicao.n
    graus = [grau(c) for par in pares for c in par]
    escrita: List = []
    fator_vetores: List[Vector] = []
    for s, bloco in enumerate(decomposicao.blocos(), start=1):
        a = pares[s - 1][0]
        escrita += [Mapa(len(bloco)), 2 * (s - 1)] + [2 * i - 1 for i in bloco]
        fator_vetores.append(A.E(A.vetor(a), [A.vetor(pares[i - 1][1]) for i in bloco]))
    escrita.append(2 * n - 1)
    fator_vetores.append(A.vetor(pares[n - 1][1]))
    return A.produto_varios(*fator_vetores).escalar(sinal_ks(graus, escrita))


def phi_hga(A: AlgebraHga, pares: Sequence[Tuple[Hashable, Hashable]]) -> Vector:
    """
    Componente Φ^hga_n da estrutura shc natural de uma hga, n = len(pares):
    Φ^hga_n = (−1)^{n−1} Σ_𝐣 Φ_𝐣. Para n = 1 é o produto.
    """
    n = len(pares)
    total = Vector.zero(A.anel)
    for decomposicao in Decomposition.todas(n):
        total = total + phi_j(A, decomposicao, pares)
    return total.escalar(A.anel.sinal(n - 1))


class IndiceTransposto:
    """
    Índice invertido de uma cooperação z ↦ Σ ± (x₁, …, x_r) sobre todos
    os simplexos de X, para avaliar o transposto em cocadeias.

    Attributes:
        grau_operacao: Grau da cooperação (paridade basta).
    """

    def __init__(self, X: FiniteSimplicialSet, operacao, grau_operacao: int, anel: CoefficientRing):
        self.grau_operacao = grau_operacao
        self.anel = anel
        self._indice: Dict[Tuple[SimplexRef, ...], List[Tuple[SimplexRef, object]]] = {}
        for z in X.todos():
            for chave, coef in operacao(z).items():
                self._indice.setdefault(chave, []).append((z, coef))

    def termos(self, simplexos: Tuple[SimplexRef, ...]) -> List[Tuple[SimplexRef, object]]:
        """
        Pares (z, coeficiente) do transposto aplicado às cocadeias duais de
        ``simplexos``: inclui (−1)^{k|β|} do transposto e o sinal de
        Koszul Σ_{i<j} dᵢdⱼ da inclusão C*⊗…⊗C* → (C⊗…⊗C)∨.
        """
        graus = [s.dim for s in simplexos]
        expoente = self.grau_operacao * sum(graus)
        expoente += sum(graus[i] * graus[j] for i in range(len(graus)) for j in range(i + 1, len(graus)))
        sinal = self.anel.sinal(expoente)
        return [(z, sinal * c) for z, c in self._indice.get(simplexos, [])]
