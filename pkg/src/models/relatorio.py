"""
Resultados de verificação de identidades e apresentações de anéis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class ResultadoVerificacao:
    """
    Resultado da verificação de uma identidade em uma fixture.

    Attributes:
        identidade: Nome da identidade verificada.
        fixture: Fixture (ou tripla) em que foi avaliada.
        casos: Quantidade de tuplas de base avaliadas.
        testemunhas: Descrição dos termos em que a identidade falhou.
        observacoes: Avisos que não invalidam o resultado.
    """

    identidade: str
    fixture: str
    casos: int = 0
    testemunhas: List[str] = field(default_factory=list)
    observacoes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.testemunhas

    def registrar(self, caso: Any, diferenca: Any) -> None:
        """Anota uma violação, com o caso e o termo que sobrou."""
        self.testemunhas.append(f"{caso!r}: {diferenca!r}")

    def contar(self, n: int = 1) -> None:
        self.casos += n

    def como_dict(self) -> Dict[str, Any]:
        return {
            "identidade": self.identidade,
            "fixture": self.fixture,
            "casos": self.casos,
            "ok": self.ok,
            "testemunhas": list(self.testemunhas),
            "observacoes": list(self.observacoes),
        }

    def __str__(self) -> str:
        estado = "OK" if self.ok else f"FALHA ({len(self.testemunhas)} testemunhas)"
        return f"{self.identidade} [{self.fixture}]: {estado}, {self.casos} casos"


@dataclass
class CohomologyPresentation:
    """
    Cohomologia de um complexo em uma janela de graus.

    Attributes:
        postos: Posto livre por grau.
        representantes: Cociclos representantes por grau (vetores).
        torcao: Fatores invariantes de torção por grau (só sobre ℤ).
        incertos: Graus na borda da janela, cujo posto não é confiável.
    """

    postos: Dict[int, int]
    representantes: Dict[int, List[Any]] = field(default_factory=dict)
    torcao: Dict[int, List[int]] = field(default_factory=dict)
    incertos: List[int] = field(default_factory=list)

    def como_dict(self) -> Dict[str, Any]:
        return {
            "postos": {str(g): p for g, p in sorted(self.postos.items())},
            "torcao": {str(g): t for g, t in sorted(self.torcao.items()) if t},
            "incertos": sorted(self.incertos),
        }


@dataclass
class RingPresentation:
    """
    Anel graduado em uma janela: classes de base por grau e constantes
    de estrutura do produto induzido.

    Attributes:
        nome: Identificação do anel (por exemplo Tor de uma tripla).
        postos: Posto por grau.
        geradores: Nomes das classes de base por grau.
        constantes: (classe_i, classe_j) ↦ coordenadas do produto.
        comutativo: Resultado da verificação de comutatividade graduada.
    """

    nome: str
    postos: Dict[int, int]
    geradores: Dict[int, List[str]] = field(default_factory=dict)
    constantes: Dict[str, List[str]] = field(default_factory=dict)
    comutativo: bool = True
    bem_definido: bool = True
    observacoes: List[str] = field(default_factory=list)

    def como_dict(self) -> Dict[str, Any]:
        return {
            "nome": self.nome,
            "postos": {str(g): p for g, p in sorted(self.postos.items())},
            "geradores": {str(g): nomes for g, nomes in sorted(self.geradores.items())},
            "constantes": dict(sorted(self.constantes.items())),
            "comutativo": self.comutativo,
            "bem_definido": self.bem_definido,
            "observacoes": list(self.observacoes),
        }


@dataclass
class ComparacaoEM:
    """
    Comparação entre Tor da tripla de cocadeias e a cohomologia do
    pull-back, através do A∞-morfismo f.

    Attributes:
        tripla: Rótulo da tripla (X, B, E).
        postos_barra: Postos de H(B(C*X, C*B, C*E)) por grau.
        postos_pullback: Postos de H*(X ×_B E) por grau.
        graus_iso: Graus em que H(f₁) é isomorfismo.
        esperado: Se o isomorfismo é exigido: um dos mapas da tripla é a
            identidade, de modo que o pull-back é X ou E. Nos demais casos
            o pull-back estrito pode não calcular Tor e os graus só são
            relatados.
        verificacoes: Identidades conferidas (A∞-morfismo e multiplicatividade).
    """

    tripla: str
    postos_barra: Dict[int, int]
    postos_pullback: Dict[int, int]
    graus_iso: List[int] = field(default_factory=list)
    esperado: bool = False
    verificacoes: List[ResultadoVerificacao] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verificacoes)

    @property
    def isomorfismo(self) -> bool:
        return sorted(self.graus_iso) == sorted(self.postos_barra)

    def como_dict(self) -> Dict[str, Any]:
        return {
            "tripla": self.tripla,
            "postos_barra": {str(g): p for g, p in sorted(self.postos_barra.items())},
            "postos_pullback": {str(g): p for g, p in sorted(self.postos_pullback.items())},
            "graus_iso": sorted(self.graus_iso),
            "isomorfismo": self.isomorfismo,
            "esperado": self.esperado,
            "verificacoes": [v.como_dict() for v in self.verificacoes],
        }


@dataclass
class Relatorio:
    """
    Tudo o que um comando do CLI produziu, na ordem das fixtures.

    Attributes:
        comando: verify, shc-compare ou tor.
        configuracao: Parâmetros efetivos da execução.
        resultados: Identidades verificadas.
        cohomologias: H*(X) de cada conjunto simplicial, por nome.
        aneis: Apresentações de anéis Tor.
        comparacoes: Comparações com o pull-back.
        avisos: Observações que não afetam o código de saída.
    """

    comando: str
    configuracao: Dict[str, Any]
    resultados: List[ResultadoVerificacao] = field(default_factory=list)
    cohomologias: Dict[str, CohomologyPresentation] = field(default_factory=dict)
    aneis: List[RingPresentation] = field(default_factory=list)
    comparacoes: List[ComparacaoEM] = field(default_factory=list)
    avisos: List[str] = field(default_factory=list)

    @property
    def falhas(self) -> List[ResultadoVerificacao]:
        return [r for r in self.resultados if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.falhas

    def como_dict(self) -> Dict[str, Any]:
        return {
            "comando": self.comando,
            "configuracao": self.configuracao,
            "ok": self.ok,
            "resultados": [r.como_dict() for r in self.resultados],
            "cohomologias": {nome: h.como_dict() for nome, h in sorted(self.cohomologias.items())},
            "aneis": [a.como_dict() for a in self.aneis],
            "comparacoes": [c.como_dict() for c in self.comparacoes],
            "avisos": list(self.avisos),
        }
