"""
Anéis de coeficientes exatos: racionais, inteiros e inteiros módulo p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from sympy import GF, QQ, ZZ, isprime

from src.validators.exceptions import CoeficienteNaoSuportadoError


@dataclass(frozen=True)
class CoefficientRing:
    """
    Anel de coeficientes 𝕜 apoiado em um domínio do sympy.

    Os elementos são os próprios elementos do domínio (``QQ``, ``ZZ``
    ou ``GF(p)``), de modo que toda a aritmética é exata.

    Attributes:
        nome: Especificação textual ("q", "z" ou "zmod:p").
        dominio: Domínio do sympy que realiza a aritmética.
        caracteristica: 0 para q e z, p para zmod:p.

    Example:
        >>> anel = CoefficientRing.de_texto("zmod:3")
        >>> anel(4) == anel(1)
        True
    """

    nome: str
    dominio: Any
    caracteristica: int

    @classmethod
    def de_texto(cls, especificacao: str) -> "CoefficientRing":
        """
        Constrói o anel a partir de "q", "z" ou "zmod:p".

        Raises:
            CoeficienteNaoSuportadoError: Se a especificação for
                desconhecida ou p não for primo.
        """
        texto = especificacao.strip().lower()
        if texto == "q":
            return cls("q", QQ, 0)
        if texto == "z":
            return cls("z", ZZ, 0)
        if texto.startswith("zmod:"):
            try:
                p = int(texto.split(":", 1)[1])
            except ValueError:
                raise CoeficienteNaoSuportadoError(
                    f"Módulo inválido em {especificacao!r}"
                )
            if not isprime(p):
                raise CoeficienteNaoSuportadoError(
                    f"zmod:{p} exige p primo"
                )
            return cls(f"zmod:{p}", GF(p), p)
        raise CoeficienteNaoSuportadoError(
            f"Coeficientes desconhecidos: {especificacao!r} (use q, z ou zmod:p)"
        )

    def __call__(self, valor: int) -> Any:
        return self.dominio(valor)

    @property
    def zero(self) -> Any:
        return self.dominio.zero

    @property
    def um(self) -> Any:
        return self.dominio.one

    @property
    def eh_corpo(self) -> bool:
        return bool(self.dominio.is_Field)

    def sinal(self, expoente: int) -> Any:
        """Retorna (−1)^expoente como elemento do anel."""
        return self.um if expoente % 2 == 0 else -self.um

    def texto(self, coeficiente: Any) -> str:
        """Forma textual estável de um coeficiente, para relatórios."""
        return str(self.dominio.to_sympy(coeficiente))

    def __repr__(self) -> str:
        return f"CoefficientRing({self.nome})"
