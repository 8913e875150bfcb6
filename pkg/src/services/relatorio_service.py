"""
Serviço de geração de relatórios das verificações.
"""

import json
from pathlib import Path
from typing import List, Optional, Union

from src.infrastructure.event_logger import logger
from src.infrastructure.settings_loader import SettingsLoader
from src.models.relatorio import Relatorio


SEPARADOR = "=" * 60


class RelatorioService:
    """
    Gera o relatório de uma execução: um resumo legível seguido de um
    bloco JSON com chaves ordenadas.

    O texto não contém horários nem caminhos absolutos, de modo que a
    mesma configuração produz sempre o mesmo relatório, byte a byte.

    Attributes:
        diretorio: Pasta onde ficam relatórios dados só pelo nome.

    Example:
        >>> service = RelatorioService()
        >>> texto = service.gerar(relatorio)
        >>> service.salvar(relatorio, "verify.txt")
    """

    def __init__(self, diretorio: Optional[Union[str, Path]] = None):
        """Inicializa o serviço com a pasta de settings.json se nenhuma for dada."""
        self.diretorio = Path(diretorio or SettingsLoader.obter("relatorio", "diretorio", "relatorios"))

    def resumo(self, relatorio: Relatorio) -> str:
        """
        Resumo legível: uma linha por identidade, testemunhas das falhas,
        postos de cohomologia e de Tor e avisos.

        Args:
            relatorio: Relatório a resumir.

        Returns:
            Texto com uma linha final de veredito.
        """
        linhas: List[str] = [SEPARADOR, f"RELATÓRIO {relatorio.comando}", SEPARADOR]
        config = relatorio.configuracao
        linhas.append(
            f"coeficientes {config.get('coeficiente')}, janela {config.get('janela')}, "
            f"n_max {config.get('n_max')}, suítes {','.join(config.get('suites', [])) or '-'}"
        )

        if relatorio.resultados:
            linhas.append("")
            for resultado in relatorio.resultados:
                linhas.append(f"  {'OK ' if resultado.ok else 'XX '} {resultado}")
                for testemunha in resultado.testemunhas:
                    linhas.append(f"        testemunha {testemunha}")

        if relatorio.cohomologias:
            linhas.append("")
            for nome, h in sorted(relatorio.cohomologias.items()):
                postos = " ".join(f"H{g}={p}" for g, p in sorted(h.postos.items()))
                torcao = "".join(
                    f" tor{g}={'⊕'.join(f'ℤ/{t}' for t in ts)}" for g, ts in sorted(h.torcao.items()) if ts
                )
                linhas.append(f"  H*({nome}): {postos}{torcao}")

        for anel in relatorio.aneis:
            linhas.append("")
            postos = " ".join(f"{g}:{p}" for g, p in sorted(anel.postos.items()))
            linhas.append(f"  {anel.nome}: postos {postos}")
            for chave, coords in sorted(anel.constantes.items()):
                linhas.append(f"        {chave} = ({', '.join(coords)})")

        for comparacao in relatorio.comparacoes:
            linhas.append("")
            veredito = "isomorfismo" if comparacao.isomorfismo else f"iso nos graus {comparacao.graus_iso}"
            if not comparacao.esperado:
                veredito += " (não exigido)"
            linhas.append(f"  pull-back {comparacao.tripla}: {veredito}")

        if relatorio.avisos:
            linhas.append("")
            for aviso in relatorio.avisos:
                linhas.append(f"  aviso: {aviso}")

        linhas.append("")
        total = len(relatorio.resultados)
        if relatorio.ok:
            linhas.append(f"TODAS AS {total} IDENTIDADES VALEM")
        else:
            linhas.append(f"{len(relatorio.falhas)} DE {total} IDENTIDADES VIOLADAS")
        linhas.append(SEPARADOR)
        return "\n".join(linhas)

    def bloco(self, relatorio: Relatorio) -> str:
        """Bloco JSON do relatório, com chaves ordenadas."""
        return json.dumps(relatorio.como_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    def gerar(self, relatorio: Relatorio) -> str:
        return f"{self.resumo(relatorio)}\n{self.bloco(relatorio)}\n"

    def salvar(self, relatorio: Relatorio, saida: Optional[str] = None) -> str:
        """
        Escreve o relatório em ``saida`` ou na saída padrão.

        Um nome sem pasta vai para ``diretorio``; caminhos com pasta são
        usados como dados.

        Returns:
            O texto escrito.
        """
        texto = self.gerar(relatorio)
        if saida is None:
            print(texto, end="")
            destino = "stdout"
        else:
            caminho = Path(saida)
            if not caminho.is_absolute() and caminho.parent == Path("."):
                caminho = self.diretorio / caminho
            caminho.parent.mkdir(parents=True, exist_ok=True)
            caminho.write_text(texto, encoding="utf-8")
            destino = str(caminho)
        logger.log(
            "RELATORIO_GERADO",
            comando=relatorio.comando,
            destino=destino,
            identidades=len(relatorio.resultados),
            falhas=len(relatorio.falhas),
        )
        return texto
