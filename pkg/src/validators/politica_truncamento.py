"""
Validação da configuração de execução e escolha do modo de truncamento
da construção de barras.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

from sympy import isprime

from src.models.algebra import AlgebraAumentada, MorfismoDga
from src.models.configuracao import SUITES, RunConfig
from src.validators.exceptions import (
    CoeficienteNaoSuportadoError,
    JanelaInsuficienteError,
    ModuloIncompativelError,
)


class ModoTruncamento(Enum):
    """Como a barra bilateral é truncada para calcular Tor na janela."""

    EXATO = "exato"
    CONTRACAO = "contracao"
    TETO = "teto"


class PoliticaTruncamento:
    """
    Regras de validade da configuração e do truncamento.

    - p primo em zmod:p, janela ≥ 2 e n_max ≥ 2;
    - modo EXATO quando a parte reduzida da álgebra do meio está em
      graus ≥ 2 (palavras de grau n têm comprimento ≤ n);
    - modo CONTRACAO quando a álgebra da esquerda é a do meio com mapa
      identidade (Tor_A(A, A″) ≅ H(A″) via f₁);
    - modo TETO nos demais casos, com teto de comprimento e verificação
      de estabilidade.

    Example:
        >>> politica = PoliticaTruncamento(config)
        >>> politica.validar()
        >>> politica.modo(A1, A, phi1)
        <ModoTruncamento.EXATO: 'exato'>
    """

    def __init__(self, config: RunConfig):
        self.config = config

    def validar(self) -> None:
        """
        Raises:
            CoeficienteNaoSuportadoError: Se zmod:p tiver p não primo.
            JanelaInsuficienteError: Se janela < 2 ou n_max < 2.
            ModuloIncompativelError: Se alguma suíte for desconhecida.
        """
        coef = self.config.coeficiente.strip().lower()
        if coef.startswith("zmod:"):
            p = coef.split(":", 1)[1]
            if not p.isdigit() or not isprime(int(p)):
                raise CoeficienteNaoSuportadoError(f"zmod:{p} exige p primo")
        elif coef not in ("q", "z"):
            raise CoeficienteNaoSuportadoError(f"Coeficientes desconhecidos: {coef!r}")
        if self.config.janela < 2:
            raise JanelaInsuficienteError(f"Janela {self.config.janela} < 2")
        if self.config.n_max < 2:
            raise JanelaInsuficienteError(f"n_max {self.config.n_max} < 2")
        desconhecidas = [s for s in self.config.suites if s not in SUITES]
        if desconhecidas:
            raise ModuloIncompativelError(
                f"Suítes desconhecidas: {', '.join(desconhecidas)} (use {', '.join(SUITES)})"
            )

    @staticmethod
    def grau_reduzido_minimo(A: AlgebraAumentada) -> Optional[int]:
        graus = [g for g in A.graus() if A.base_reduzida(g)]
        return min(graus) if graus else None

    def modo(
        self, esquerda: AlgebraAumentada, meio: AlgebraAumentada, phi_esquerda: MorfismoDga
    ) -> ModoTruncamento:
        minimo = self.grau_reduzido_minimo(meio)
        if minimo is None or minimo >= 2:
            return ModoTruncamento.EXATO
        if esquerda is meio and phi_esquerda.eh_identidade():
            return ModoTruncamento.CONTRACAO
        return ModoTruncamento.TETO

    def teto(self, modo: ModoTruncamento) -> int:
        """Teto de comprimento das palavras para o modo escolhido."""
        if modo is ModoTruncamento.EXATO:
            return self.config.janela + 1
        if modo is ModoTruncamento.CONTRACAO:
            return 0
        return self.config.teto_comprimento

    def __repr__(self) -> str:
        return f"PoliticaTruncamento(janela={self.config.janela}, n_max={self.config.n_max})"
