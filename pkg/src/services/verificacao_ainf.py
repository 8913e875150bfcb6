"""
Verificação exata das relações de álgebra A∞, de A∞-morfismo e dos
lemas estruturais da homotopia em B(A, A, A″).

Cada verificador avalia os dois lados em tuplas de chaves de base e
registra como testemunha toda diferença não nula.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Callable, Hashable, Iterable, List, Sequence, Tuple

from src.infrastructure.event_logger import logger
from src.models.ainf import AInfMorphismToDga, AInfStructure
from src.models.algebra import AlgebraBase, morfismo_aumento
from src.models.barra import UNIDADE, TwoSidedBarElement
from src.models.koszul import Mapa, sinal_ks
from src.models.relatorio import ResultadoVerificacao
from src.models.vetor import Vector, grau, tensor
from src.services.construcao_barra import TwoSidedBar
from src.services.estrutura_ainf import EstruturaAInf, HomotopiaBarra, aplicar_multilinear


def amostrar_tuplas(
    chaves: Sequence[Hashable], n: int, quantidade: int, semente: int
) -> List[Tuple[Hashable, ...]]:
    """
    Todas as n-uplas de ``chaves`` se couberem em ``quantidade``; senão
    uma amostra determinística pela semente.
    """
    chaves = list(chaves)
    if not chaves:
        return []
    if len(chaves) ** n <= quantidade:
        return list(product(chaves, repeat=n))
    gerador = random.Random(semente * 1009 + n)
    return [tuple(gerador.choice(chaves) for _ in range(n)) for _ in range(quantidade)]


def diferencial_tuplas(diferencial: Callable, anel, chaves: Tuple) -> Vector:
    """d_⊗(a₁⊗…⊗aₙ) = Σᵢ (−1)^{|a₁|+…+|aᵢ₋₁|} (…, daᵢ, …), em chaves-tupla."""
    total = Vector.zero(anel)
    acumulado = 0
    for i, a in enumerate(chaves):
        fatores = [Vector.basis(anel, x) for x in chaves]
        fatores[i] = diferencial(a)
        total = total + tensor(*fatores).escalar(anel.sinal(acumulado))
        acumulado += grau(a)
    return total


def _com_bloco(funcao, anel, chaves: Tuple, i: int, l: int, bloco: Vector) -> Vector:
    """funcao(a₁, …, aᵢ, bloco, a_{i+l+1}, …) multilinear."""
    vetores = (
        [Vector.basis(anel, x) for x in chaves[:i]]
        + [bloco]
        + [Vector.basis(anel, x) for x in chaves[i + l:]]
    )
    return aplicar_multilinear(funcao, anel, vetores)


def _soma_composicoes(m: Callable[[int, Tuple], Vector], externa: Callable[[int, Tuple], Vector],
                      anel, chaves: Tuple, l_min: int, l_max: int) -> Vector:
    """
    Σ_{l} Σ_i (−1)^{i + l(n−i−l) + l·(|a₁|+…+|aᵢ|)}
    externa_{n−l+1}(a₁, …, m_l(a_{i+1}, …, a_{i+l}), …).
    """
    n = len(chaves)
    total = Vector.zero(anel)
    for l in range(l_min, l_max + 1):
        for i in range(n - l + 1):
            interno = m(l, chaves[i:i + l])
            if not interno:
                continue
            A_i = sum(grau(x) for x in chaves[:i])
            sinal = anel.sinal(i + l * (n - i - l) + l * A_i)
            parcela = _com_bloco(lambda k: externa(n - l + 1, k), anel, chaves, i, l, interno)
            total = total + parcela.escalar(sinal)
    return total


def registrar_resultado(resultado: ResultadoVerificacao) -> ResultadoVerificacao:
    evento = "IDENTIDADE_VERIFICADA" if resultado.ok else "IDENTIDADE_VIOLADA"
    logger.log(
        evento,
        identidade=resultado.identidade,
        fixture=resultado.fixture,
        casos=resultado.casos,
        testemunhas=len(resultado.testemunhas),
    )
    return resultado


# Relações A∞

def verify_ainf_algebra(
    estrutura: AInfStructure, n: int, tuplas: Iterable[Tuple], fixture: str = ""
) -> ResultadoVerificacao:
    """
    Confere d(mₙ) = −Σ_{l=2}^{n−1} Σᵢ ± m_{n−l+1}(…, m_l(…), …), com
    d(mₙ) = d∘mₙ − (−1)ⁿ mₙ∘d_⊗.

    Args:
        estrutura: Estrutura A∞.
        n: Aridade verificada (n ≥ 2).
        tuplas: n-uplas de chaves de base.
        fixture: Rótulo para o relatório.

    Returns:
        Resultado com uma testemunha por tupla violada.
    """
    anel = estrutura.anel
    d = estrutura.diferencial_chave
    resultado = ResultadoVerificacao(f"relação A∞ m_{n}", fixture)
    for chaves in tuplas:
        resultado.contar()
        mn = estrutura.m(n, chaves)
        esquerda = mn.mapear(d) - diferencial_tuplas(d, anel, chaves).mapear(
            lambda k: estrutura.m(n, k)
        ).escalar(anel.sinal(n))
        direita = -_soma_composicoes(estrutura.m, estrutura.m, anel, chaves, 2, n - 1)
        if esquerda != direita:
            resultado.registrar(chaves, esquerda - direita)
    return registrar_resultado(resultado)


def verify_ainf_morphism(
    f: AInfMorphismToDga, n: int, tuplas: Iterable[Tuple], fixture: str = ""
) -> ResultadoVerificacao:
    """
    Confere d(fₙ) = d fₙ + (−1)ⁿ fₙ d_⊗ =
    Σ_{l=1}^{n−1} (−1)^{l+(1−n+l)A_l} f_l·f_{n−l} + Σ_{l=2}^{n} Σᵢ ± f_{n−l+1}(…, m_l(…), …).
    """
    origem, alvo = f.origem, f.destino
    anel = origem.anel
    resultado = ResultadoVerificacao(f"relação de A∞-morfismo f_{n}", fixture)
    for chaves in tuplas:
        resultado.contar()
        esquerda = alvo.diferencial(f.componente(n, chaves)) + diferencial_tuplas(
            origem.diferencial_chave, anel, chaves
        ).mapear(lambda k: f.componente(n, k)).escalar(anel.sinal(n))
        direita = Vector.zero(anel)
        for l in range(1, n):
            A_l = sum(grau(x) for x in chaves[:l])
            produto = alvo.produto(f.componente(l, chaves[:l]), f.componente(n - l, chaves[l:]))
            direita = direita + produto.escalar(anel.sinal(l + (1 - n + l) * A_l))
        direita = direita + _soma_composicoes(origem.m, f.componente, anel, chaves, 2, n)
        if esquerda != direita:
            resultado.registrar(chaves, esquerda - direita)
    return registrar_resultado(resultado)


def verify_unidade_estrita(
    estrutura: AInfStructure, n_max: int, chaves: Sequence[Hashable], fixture: str = ""
) -> ResultadoVerificacao:
    """m₂(1, x) = m₂(x, 1) = x e mₙ(…, 1, …) = 0 para n ≥ 3."""
    anel = estrutura.anel
    um = estrutura.unidade
    resultado = ResultadoVerificacao("unidade estrita", fixture)
    for x in chaves:
        resultado.contar()
        vx = Vector.basis(anel, x)
        for lado in (0, 1):
            vetores = [um, vx] if lado == 0 else [vx, um]
            valor = aplicar_multilinear(lambda k: estrutura.m(2, k), anel, vetores)
            if valor != vx:
                resultado.registrar(("m2", lado, x), valor - vx)
        for n in range(3, n_max + 1):
            for posicao in range(n):
                vetores = [vx] * n
                vetores[posicao] = um
                valor = aplicar_multilinear(lambda k: estrutura.m(n, k), anel, vetores)
                if valor:
                    resultado.registrar((f"m{n}", posicao, x), valor)
    return registrar_resultado(resultado)


# Lemas da homotopia

def check_shift_lemma(homotopia: HomotopiaBarra, chaves: Iterable[TwoSidedBarElement],
                      fixture: str = "") -> ResultadoVerificacao:
    """
    d(S)(↔𝐚) = ε(a′)𝐚a″ − 1⊗f₁(↔𝐚) e →Δ S(↔𝐚) = 1⊗S(↔𝐚) + S(←𝐚₍₁₎)⊗→𝐚₍₂₎.
    """
    barra, destino = homotopia.barra, homotopia.barra_direita
    anel = homotopia.anel
    resultado = ResultadoVerificacao("lema do deslocamento S", fixture)
    for x in chaves:
        resultado.contar()
        a1, w, a2 = x
        S_x = homotopia.S_chave(x)
        dS = S_x.mapear(destino.diferencial_chave) + barra.diferencial_chave(x).mapear(homotopia.S_chave)
        esperado = Vector.basis(anel, TwoSidedBarElement(UNIDADE, w, a2)).escalar(
            barra.meio.aumento_chave(a1)
        ) - destino.elemento(
            Vector.basis(anel, UNIDADE), Vector.basis(anel, w.prefixo(0)), homotopia.f1_chave(x)
        )
        if dS != esperado:
            resultado.registrar(("d(S)", x), dS - esperado)

        diagonal = S_x.mapear(
            lambda k: Vector.somar(anel, [
                ((k.palavra.prefixo(j), TwoSidedBarElement(UNIDADE, k.palavra.sufixo(j), k.direita)), anel.um)
                for j in range(k.comprimento + 1)
            ])
        )
        esperado = Vector(anel, {(w.prefixo(0), k): c for k, c in S_x.items()})
        for i in range(w.comprimento + 1):
            frente = homotopia.S_chave(TwoSidedBarElement(a1, w.prefixo(i), UNIDADE))
            for k, c in frente.items():
                chave = (k.palavra, TwoSidedBarElement(UNIDADE, w.sufixo(i), a2))
                esperado = esperado + Vector.basis(anel, chave, c)
        if diagonal != esperado:
            resultado.registrar(("ΔS", x), diagonal - esperado)
    return registrar_resultado(resultado)


def _divisoes(chaves: Sequence[TwoSidedBarElement]):
    """Todas as escolhas de ↔𝐚ᵢ = ←𝐚ᵢ₍₁₎ ⊗ →𝐚ᵢ₍₂₎, com os graus de cada parte."""
    for cortes in product(*(range(x.comprimento + 1) for x in chaves)):
        esquerdas, direitas = [], []
        for x, j in zip(chaves, cortes):
            esquerdas.append(TwoSidedBarElement(x.esquerda, x.palavra.prefixo(j), UNIDADE))
            direitas.append(TwoSidedBarElement(UNIDADE, x.palavra.sufixo(j), x.direita))
        yield esquerdas, direitas


def _graus_intercalados(esquerdas, direitas) -> List[int]:
    graus = []
    for e, d in zip(esquerdas, direitas):
        graus += [grau(e), grau(d)]
    return graus


def check_diagonal_h(homotopia: HomotopiaBarra, n: int, tuplas: Iterable[Tuple],
                     fixture: str = "") -> ResultadoVerificacao:
    """
    ↔Δ hₙ = hₙ(←…)⊗→⋯→ + Σ_{k<n} h_k(←…)⊗(→𝐚₁₍₂₎⋯→𝐚_k₍₂₎·S h_{n−k}(↔𝐚_{k+1}, …)),
    com h_k à esquerda tomando valores em B(A, A, 𝕜).
    """
    barra = homotopia.barra
    anel = homotopia.anel
    meio = barra.meio
    base = AlgebraBase(anel)
    esquerda_total = TwoSidedBar(meio, meio, base, barra.phi_esquerda, morfismo_aumento(meio, base), barra.barra)
    h_esquerda = HomotopiaBarra(esquerda_total)
    ks = homotopia.ks
    resultado = ResultadoVerificacao(f"diagonal de h_{n}", fixture)
    for chaves in tuplas:
        resultado.contar()
        lado = homotopia.h_n_chave(chaves).mapear(barra.diagonal_chave)
        esperado = Vector.zero(anel)
        for esquerdas, direitas in _divisoes(chaves):
            graus = _graus_intercalados(esquerdas, direitas)
            escrita = [Mapa(1 - n)] + [2 * i for i in range(n)] + [2 * i + 1 for i in range(n)]
            sinal = sinal_ks(graus, escrita)
            termo = tensor(
                h_esquerda.h_n_chave(tuple(esquerdas)),
                ks.produto_varios(*(Vector.basis(anel, d) for d in direitas)),
            )
            esperado = esperado + termo.escalar(sinal)
        for k in range(1, n):
            cauda = chaves[k:]
            S_cauda = homotopia.S(homotopia.h_n_chave(cauda))
            if not S_cauda:
                continue
            for esquerdas, direitas in _divisoes(chaves[:k]):
                graus = _graus_intercalados(esquerdas, direitas) + [grau(x) for x in cauda]
                escrita = (
                    [Mapa(1 - k)] + [2 * i for i in range(k)] + [2 * i + 1 for i in range(k)]
                    + [Mapa(-1), Mapa(1 - (n - k))] + [2 * k + i for i in range(n - k)]
                )
                sinal = sinal_ks(graus, escrita)
                direita = ks.produto_varios(*(Vector.basis(anel, d) for d in direitas), S_cauda)
                termo = tensor(h_esquerda.h_n_chave(tuple(esquerdas)), direita)
                esperado = esperado + termo.escalar(sinal)
        if lado != esperado:
            resultado.registrar(chaves, lado - esperado)
    return registrar_resultado(resultado)


def check_diagonal_m(estrutura: EstruturaAInf, n: int, tuplas: Iterable[Tuple],
                     fixture: str = "") -> ResultadoVerificacao:
    """↔Δ mₙ = mₙ(←𝐚₁₍₁₎, …) ⊗ →𝐚₁₍₂₎⋯→𝐚ₙ₍₂₎, com mₙ à esquerda em B(A′, A, 𝕜)."""
    barra = estrutura.barra
    anel = estrutura.anel
    base = AlgebraBase(anel)
    esquerda_total = TwoSidedBar(
        barra.esquerda, barra.meio, base, barra.phi_esquerda, morfismo_aumento(barra.meio, base), barra.barra
    )
    m_esquerda = EstruturaAInf(esquerda_total)
    ks = estrutura.ks
    resultado = ResultadoVerificacao(f"diagonal de m_{n}", fixture)
    for chaves in tuplas:
        resultado.contar()
        lado = estrutura.m_chave(n, chaves).mapear(barra.diagonal_chave)
        esperado = Vector.zero(anel)
        for esquerdas, direitas in _divisoes(chaves):
            graus = _graus_intercalados(esquerdas, direitas)
            escrita = [Mapa(2 - n)] + [2 * i for i in range(n)] + [2 * i + 1 for i in range(n)]
            termo = tensor(
                m_esquerda.m_chave(n, tuple(esquerdas)),
                ks.produto_varios(*(Vector.basis(anel, d) for d in direitas)),
            )
            esperado = esperado + termo.escalar(sinal_ks(graus, escrita))
        if lado != esperado:
            resultado.registrar(chaves, lado - esperado)
    return registrar_resultado(resultado)


def check_m_after_h(estrutura: EstruturaAInf, homotopia: HomotopiaBarra, n: int,
                    tuplas: Iterable[Tuple], fixture: str = "") -> ResultadoVerificacao:
    """
    (−1)^{|↔𝐚₁|+…+|↔𝐚ₙ₋₁|} mₙ(…, h(↔𝐚ₙ, ↔𝐚ₙ₊₁)) = mₙ₊₁(…) + (−1)ⁿ h(mₙ(↔𝐚₁, …, ↔𝐚ₙ), ↔𝐚ₙ₊₁).
    """
    anel = estrutura.anel
    resultado = ResultadoVerificacao(f"m_{n} após h", fixture)
    for chaves in tuplas:
        resultado.contar()
        interno = homotopia.h_chave(chaves[n - 1], chaves[n])
        lado = _com_bloco(lambda k: estrutura.m_chave(n, k), anel, chaves, n - 1, 2, interno)
        lado = lado.escalar(anel.sinal(sum(grau(x) for x in chaves[:n - 1])))
        esperado = estrutura.m_chave(n + 1, chaves) + homotopia.h(
            estrutura.m_chave(n, chaves[:n]), Vector.basis(anel, chaves[n])
        ).escalar(anel.sinal(n))
        if lado != esperado:
            resultado.registrar(chaves, lado - esperado)
    return registrar_resultado(resultado)


def check_d_h(estrutura: EstruturaAInf, homotopia: HomotopiaBarra, n: int,
              tuplas: Iterable[Tuple], fixture: str = "") -> ResultadoVerificacao:
    """
    d(hₙ) = Σ_{l=1}^{n−1} (−1)^{l+(1−n+l)A_l} h_l(…)·f_{n−l}(…)
            + Σ_{l=2}^{n} Σᵢ ± h_{n−l+1}(…, m_l(…), …).
    """
    barra = homotopia.barra
    anel = homotopia.anel
    resultado = ResultadoVerificacao(f"d(h_{n})", fixture)

    def h(k: int, chaves: Tuple) -> Vector:
        return homotopia.h_n_chave(chaves)

    for chaves in tuplas:
        resultado.contar()
        lado = homotopia.h_n_chave(chaves).mapear(barra.diferencial_chave) + diferencial_tuplas(
            barra.diferencial_chave, anel, chaves
        ).mapear(homotopia.h_n_chave).escalar(anel.sinal(n))
        esperado = Vector.zero(anel)
        for l in range(1, n):
            A_l = sum(grau(x) for x in chaves[:l])
            termo = barra.acao_direita(homotopia.h_n_chave(chaves[:l]), homotopia.f_n_chave(chaves[l:]))
            esperado = esperado + termo.escalar(anel.sinal(l + (1 - n + l) * A_l))
        esperado = esperado + _soma_composicoes(estrutura.m_chave, h, anel, chaves, 2, n)
        if lado != esperado:
            resultado.registrar(chaves, lado - esperado)
    return registrar_resultado(resultado)
