"""
Configuração de uma execução do CLI.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.infrastructure.settings_loader import SettingsLoader


SUITES = ("complexos", "contracao", "hga", "ainf", "morfismo", "lemas", "gm", "tor")


@dataclass
class RunConfig:
    """
    Parâmetros de uma execução: settings.json sobreposto pelas flags.

    Attributes:
        coeficiente: "q", "z" ou "zmod:p".
        fixtures: Caminhos de arquivos de fixture.
        janela: Grau total máximo.
        n_max: Maior aridade verificada.
        suites: Suítes selecionadas (vazia = nada a fazer).
        saida: Arquivo do relatório (None = saída padrão).
        teto_comprimento: Teto de comprimento das palavras no modo truncado.
        passo_estabilidade: Acréscimo do teto na verificação de estabilidade.
        sinal_E: Constante que multiplica as operações E_k (k ≥ 1).
        semente: Semente da amostragem de tuplas.
        amostras: Tuplas por identidade e aridade.
        verbose: Liga o log no console.
    """

    coeficiente: str = "q"
    fixtures: List[str] = field(default_factory=list)
    janela: int = 4
    n_max: int = 4
    suites: List[str] = field(default_factory=lambda: list(SUITES))
    saida: Optional[str] = None
    teto_comprimento: int = 4
    passo_estabilidade: int = 2
    sinal_E: int = 1
    semente: int = 0
    amostras: int = 60
    verbose: bool = False

    @classmethod
    def de_settings(cls, **sobrepostos: Any) -> "RunConfig":
        """
        Monta a configuração a partir de settings.json; valores None em
        ``sobrepostos`` são ignorados.
        """
        obter = SettingsLoader.obter
        base: Dict[str, Any] = {
            "coeficiente": obter("coeficientes", "padrao", "q"),
            "janela": obter("janela", "grau_maximo", 4),
            "n_max": obter("janela", "n_max", 4),
            "teto_comprimento": obter("janela", "teto_comprimento", 4),
            "passo_estabilidade": obter("janela", "passo_estabilidade", 2),
            "sinal_E": obter("hga", "sinal_E", 1),
            "semente": obter("amostragem", "semente", 0),
            "amostras": obter("amostragem", "quantidade", 60),
            "verbose": obter("log", "verbose", False),
        }
        base.update({k: v for k, v in sobrepostos.items() if v is not None})
        return cls(**base)

    def como_dict(self) -> Dict[str, Any]:
        """Parâmetros que afetam o conteúdo do relatório (sem saída nem verbose)."""
        return {
            "coeficiente": self.coeficiente,
            "fixtures": sorted(Path(f).name for f in self.fixtures),
            "janela": self.janela,
            "n_max": self.n_max,
            "suites": list(self.suites),
            "teto_comprimento": self.teto_comprimento,
            "passo_estabilidade": self.passo_estabilidade,
            "sinal_E": self.sinal_E,
            "semente": self.semente,
            "amostras": self.amostras,
        }
