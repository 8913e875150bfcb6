"""
Verificador de identidades homológicas - Interface CLI
Carrega fixtures simpliciais, executa as suítes de verificação, calcula
anéis Tor e emite relatórios.

Uso:
    python app.py verify [--suite complexos,hga] [--fixture fixtures/delta2.json]
    python app.py shc-compare --nmax 3
    python app.py tor --fixture fixtures/tripla_pt_s2_pt.json --coeff zmod:3
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from src.infrastructure.event_logger import logger
from src.infrastructure.settings_loader import RAIZ_PROJETO
from src.infrastructure.simplicial_repository import SimplexoNaoEncontradoError, SimplicialRepository
from src.models.configuracao import SUITES, RunConfig
from src.models.relatorio import Relatorio
from src.models.simplicial import FiniteSimplicialSet, TriplaSimplicial
from src.services.relatorio_service import RelatorioService
from src.services.tor_service import identidade_simplicial
from src.services.verificacao_service import VerificacaoService
from src.validators.exceptions import HomologiaError


# ============================================================================
# CONSTANTES
# ============================================================================

SAIDA_OK = 0
SAIDA_VIOLACAO = 1
SAIDA_ERRO = 2

COMANDOS = ("verify", "shc-compare", "tor")


# ============================================================================
# CLASSE PRINCIPAL DA APLICAÇÃO
# ============================================================================

class VerificadorHomologico:
    """
    Orquestra uma execução do CLI.

    Responsável por:
    - Carregar as fixtures (conjuntos, mapas e triplas)
    - Encaminhar cada comando ao serviço de verificação
    - Emitir o relatório e decidir o código de saída

    Attributes:
        config: Configuração efetiva.
        repositorio: Repositório de fixtures.
        verificacao: Serviço que executa as suítes.
        relatorios: Serviço de relatórios.
    """

    def __init__(self, config: RunConfig, repositorio: Optional[SimplicialRepository] = None):
        self.config = config
        self.repositorio = repositorio or SimplicialRepository(RAIZ_PROJETO / "fixtures")
        self.verificacao = VerificacaoService(config)
        self.relatorios = RelatorioService()

    def carregar_fixtures(self) -> Tuple[List[FiniteSimplicialSet], List[TriplaSimplicial]]:
        """
        Lê as fixtures da configuração, ou todas as da pasta padrão.

        Um arquivo de mapa f: X → B vira a tripla (X, B, B) com p = 1.

        Returns:
            Conjuntos simpliciais e triplas, na ordem de leitura.
        """
        caminhos = [Path(f) for f in self.config.fixtures] or self.repositorio.listar()
        conjuntos: List[FiniteSimplicialSet] = []
        triplas: List[TriplaSimplicial] = []
        for caminho in caminhos:
            tipo = self.repositorio.tipo(caminho)
            if tipo == "tripla":
                triplas.append(self.repositorio.carregar_tripla(caminho))
            elif tipo == "mapa":
                f = self.repositorio.carregar_mapa(caminho)
                triplas.append(TriplaSimplicial(caminho.stem, f, identidade_simplicial(f.destino)))
            else:
                conjuntos.append(self.repositorio.carregar(caminho))
        return conjuntos, triplas

    # ========================================================================
    # COMANDOS
    # ========================================================================

    def cmd_verify(self) -> int:
        """Roda as suítes selecionadas; código 1 se alguma identidade falhar."""
        if not self.config.suites:
            return self._emitir(self.verificacao.verificar([], []))
        conjuntos, triplas = self.carregar_fixtures()
        return self._emitir(self.verificacao.verificar(conjuntos, triplas))

    def cmd_shc_compare(self) -> int:
        """Φ^GM_n = Φ^hga_n em cada conjunto simplicial, n ≤ n_max."""
        conjuntos, _ = self.carregar_fixtures()
        return self._emitir(self.verificacao.comparar_shc(conjuntos))

    def cmd_tor(self) -> int:
        """Tor por m₂ e por Eilenberg–Moore–Smith em cada tripla, com o veredito."""
        _, triplas = self.carregar_fixtures()
        return self._emitir(self.verificacao.calcular_tor(triplas))

    def _emitir(self, relatorio: Relatorio) -> int:
        self.relatorios.salvar(relatorio, self.config.saida)
        return SAIDA_OK if relatorio.ok else SAIDA_VIOLACAO

    def executar(self, comando: str) -> int:
        if comando == "verify":
            return self.cmd_verify()
        if comando == "shc-compare":
            return self.cmd_shc_compare()
        return self.cmd_tor()


# ============================================================================
# LINHA DE COMANDO
# ============================================================================

def _lista_suites(texto: str) -> List[str]:
    return [s.strip() for s in texto.split(",") if s.strip()]


def construir_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="app.py",
        description="Verificação exata de estruturas A∞ na construção de barras bilateral.",
    )
    parser.add_argument("comando", choices=COMANDOS)
    parser.add_argument("--coeff", help="q, z ou zmod:p")
    parser.add_argument("--window", type=int, help="grau total máximo")
    parser.add_argument("--nmax", type=int, help="maior aridade verificada")
    parser.add_argument(
        "--suite", type=_lista_suites,
        help=f"suítes separadas por vírgula ({','.join(SUITES)}); vazia não faz nada",
    )
    parser.add_argument("--fixture", nargs="+", action="extend", help="arquivos de fixture")
    parser.add_argument("--out", help="arquivo do relatório (padrão: saída padrão)")
    parser.add_argument("--sinal-e", type=int, choices=(1, -1), dest="sinal_e",
                        help="constante das operações E_k (-1 é a mutação de teste)")
    parser.add_argument("--verbose", action="store_true", help="mostra os eventos no console")
    return parser


def config_de_argumentos(args: argparse.Namespace) -> RunConfig:
    """settings.json sobreposto pelas flags dadas."""
    return RunConfig.de_settings(
        coeficiente=args.coeff,
        janela=args.window,
        n_max=args.nmax,
        suites=args.suite,
        fixtures=args.fixture,
        saida=args.out,
        sinal_E=args.sinal_e,
        verbose=True if args.verbose else None,
    )


# ============================================================================
# PONTO DE ENTRADA
# ============================================================================

def main(argv: Optional[Sequence[str]] = None) -> int:
    """Função principal - devolve o código de saída."""
    args = construir_parser().parse_args(argv)
    try:
        config = config_de_argumentos(args)
        if config.verbose:
            logger.enable_console()
        return VerificadorHomologico(config).executar(args.comando)
    except (HomologiaError, SimplexoNaoEncontradoError) as e:
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return SAIDA_ERRO


if __name__ == "__main__":
    sys.exit(main())
