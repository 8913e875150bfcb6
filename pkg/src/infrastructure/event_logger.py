"""
Eventos das verificações (padrão Observer).

Os serviços chamam ``logger.log(EVENTO, **dados)``; cada observer decide o
que fazer com o evento: o arquivo ``sistema.log`` guarda todos, o console
só mostra com ``--verbose`` e os testes usam ``MemoryLogger``.
"""

import sys
from abc import ABC, abstractmethod
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from src.infrastructure.settings_loader import SettingsLoader


EVENTOS = (
    "FIXTURE_CARREGADA",
    "IDENTIDADE_VERIFICADA",
    "IDENTIDADE_VIOLADA",
    "COHOMOLOGIA_CALCULADA",
    "TOR_CALCULADO",
    "RELATORIO_GERADO",
)


def _formatar_dados(dados: Dict[str, Any]) -> str:
    return ", ".join(f"{chave}={valor}" for chave, valor in sorted(dados.items()))


class Observer(ABC):
    """Recebe os eventos publicados pelo ``EventSubject``."""

    @abstractmethod
    def update(self, evento: str, dados: Dict[str, Any]) -> None:
        ...


class EventSubject:
    """Lista de observers notificados na ordem em que foram ligados."""

    def __init__(self) -> None:
        self._observers: List[Observer] = []

    def attach(self, observer: Observer) -> None:
        if observer not in self._observers:
            self._observers.append(observer)

    def detach(self, observer: Observer) -> None:
        if observer in self._observers:
            self._observers.remove(observer)

    def notify(self, evento: str, dados: Dict[str, Any]) -> None:
        for observer in list(self._observers):
            observer.update(evento, dados)


class FileLogger(Observer):
    """
    Acrescenta um bloco por evento em ``<diretorio>/sistema.log``.

    A pasta só é criada na primeira escrita; importar a biblioteca não
    toca no disco.
    """

    def __init__(self, diretorio: str = "logs") -> None:
        self.diretorio = Path(diretorio)
        self.arquivo = self.diretorio / "sistema.log"

    def update(self, evento: str, dados: Dict[str, Any]) -> None:
        self.diretorio.mkdir(parents=True, exist_ok=True)
        linhas = [f"[{datetime.now().isoformat(timespec='seconds')}] {evento}"]
        linhas += [f"  {chave}: {valor}" for chave, valor in sorted(dados.items())]
        linhas.append("-" * 80)
        with open(self.arquivo, "a", encoding="utf-8") as f:
            f.write("\n".join(linhas) + "\n")


class ConsoleLogger(Observer):
    """
    Mostra os eventos em stderr quando ``verbose`` está ligado.

    stdout fica livre para o relatório.
    """

    def __init__(self, verbose: bool = False) -> None:
        self.verbose = verbose

    def update(self, evento: str, dados: Dict[str, Any]) -> None:
        if self.verbose:
            instante = datetime.now().strftime("%H:%M:%S")
            print(f"[{instante}] {evento}: {_formatar_dados(dados)}", file=sys.stderr)


class MemoryLogger(Observer):
    """Guarda os eventos recebidos como pares (nome, dados)."""

    def __init__(self) -> None:
        self.eventos: List[Tuple[str, Dict[str, Any]]] = []

    def update(self, evento: str, dados: Dict[str, Any]) -> None:
        self.eventos.append((evento, dict(dados)))

    def nomes(self) -> List[str]:
        return [evento for evento, _ in self.eventos]


class EventLogger:
    """
    Ponto único de publicação de eventos (Singleton).

    Na criação liga o ``FileLogger`` na pasta de ``log.diretorio`` e o
    ``ConsoleLogger`` com ``log.verbose`` de settings.json.
    """

    _instance: Optional["EventLogger"] = None

    def __new__(cls) -> "EventLogger":
        if cls._instance is None:
            instancia = super().__new__(cls)
            instancia.subject = EventSubject()
            instancia.arquivo = FileLogger(SettingsLoader.obter("log", "diretorio", "logs"))
            instancia.console = ConsoleLogger(bool(SettingsLoader.obter("log", "verbose", False)))
            instancia.subject.attach(instancia.arquivo)
            instancia.subject.attach(instancia.console)
            cls._instance = instancia
        return cls._instance

    def log(self, evento: str, **dados: Any) -> None:
        """
        Publica um evento.

        Args:
            evento: Um dos nomes de ``EVENTOS``.
            **dados: Campos do evento (fixture, identidade, postos, ...).

        Raises:
            ValueError: Se o evento não for conhecido.
        """
        if evento not in EVENTOS:
            raise ValueError(f"Evento desconhecido: {evento}")
        self.subject.notify(evento, dados)

    def enable_console(self) -> None:
        self.console.verbose = True


logger = EventLogger()
