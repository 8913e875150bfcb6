"""
Leitura de settings.json.

O arquivo traz os padrões de uma execução: coeficientes, janela de graus,
sinal das operações E_k, amostragem, pasta dos relatórios e log. As flags
do CLI sobrepõem esses valores em ``RunConfig.de_settings``.
"""

import json
from pathlib import Path
from typing import Any, ClassVar, Dict, Optional


RAIZ_PROJETO = Path(__file__).resolve().parents[2]
ARQUIVO_PADRAO = "settings.json"


class SettingsLoader:
    """
    Cache de classe das configurações.

    O arquivo é lido uma vez por processo; ``recarregar`` descarta o cache.
    Caminhos relativos que não existem no diretório atual são procurados
    na raiz do projeto, para que o CLI funcione de qualquer pasta.

    Example:
        >>> SettingsLoader.obter("janela", "grau_maximo")
        4
    """

    _settings: ClassVar[Optional[Dict[str, Dict[str, Any]]]] = None

    @staticmethod
    def _resolver(caminho: str) -> Path:
        arquivo = Path(caminho)
        if not arquivo.is_absolute() and not arquivo.exists():
            arquivo = RAIZ_PROJETO / arquivo
        return arquivo

    @classmethod
    def carregar(cls, caminho: str = ARQUIVO_PADRAO) -> Dict[str, Dict[str, Any]]:
        """
        Devolve as configurações, lendo o arquivo na primeira chamada.

        Raises:
            FileNotFoundError: Se o arquivo não existir.
            ValueError: Se o JSON for inválido ou a raiz não for um objeto.
        """
        if cls._settings is not None:
            return cls._settings

        arquivo = cls._resolver(caminho)
        if not arquivo.exists():
            raise FileNotFoundError(f"Arquivo de configurações não encontrado: {caminho}")

        try:
            dados = json.loads(arquivo.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise ValueError(f"JSON inválido em {arquivo.name}, linha {e.lineno}: {e.msg}") from e
        if not isinstance(dados, dict):
            raise ValueError(f"{arquivo.name} deve conter um objeto com seções")

        cls._settings = dados
        return dados

    @classmethod
    def recarregar(cls, caminho: str = ARQUIVO_PADRAO) -> Dict[str, Dict[str, Any]]:
        cls._settings = None
        return cls.carregar(caminho)

    @classmethod
    def secao(cls, nome: str) -> Dict[str, Any]:
        """Seção inteira, ou dicionário vazio se não existir."""
        return dict(cls.carregar().get(nome) or {})

    @classmethod
    def obter(cls, secao: str, chave: str, padrao: Any = None) -> Any:
        """
        Valor de ``secao.chave``, ou ``padrao`` se o arquivo, a seção ou a
        chave não existirem.

        Example:
            >>> SettingsLoader.obter("hga", "sinal_E", 1)
            1
        """
        try:
            return cls.secao(secao).get(chave, padrao)
        except FileNotFoundError:
            return padrao
