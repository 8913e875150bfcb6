"""
Exceções customizadas da biblioteca de álgebra homológica.
"""


class HomologiaError(Exception):
    """Exceção base para erros da biblioteca."""
    pass


class GrauIncompativelError(HomologiaError):
    """
    Exceção lançada quando um vetor ou mapa não é homogêneo
    no grau esperado.

    Example:
        >>> raise GrauIncompativelError("Vetor com termos de graus 1 e 2")
    """
    pass


class ModuloIncompativelError(HomologiaError):
    """
    Exceção lançada quando mapas graduados de módulos diferentes
    são combinados.

    Example:
        >>> raise ModuloIncompativelError("Origem de f difere de dA")
    """
    pass


class ComprimentoInvalidoError(HomologiaError):
    """
    Exceção lançada quando listas que deveriam ter o mesmo
    comprimento não têm.

    Example:
        >>> raise ComprimentoInvalidoError("3 posições para 2 graus")
    """
    pass


class PermutacaoInvalidaError(HomologiaError):
    """
    Exceção lançada quando uma lista de posições não é permutação.

    Example:
        >>> raise PermutacaoInvalidaError("Posição 4 repetida")
    """
    pass


class SobrejecaoInvalidaError(HomologiaError):
    """
    Exceção lançada para sobrejeções degeneradas ou não sobrejetoras.

    Example:
        >>> raise SobrejecaoInvalidaError("u(2) = u(3) = 1")
    """
    pass


class DecomposicaoInvalidaError(HomologiaError):
    """
    Exceção lançada quando uma decomposição viola a condição
    das somas parciais.

    Example:
        >>> raise DecomposicaoInvalidaError("(1, 0) tem j1 = 1")
    """
    pass


class SimplexoInvalidoError(HomologiaError):
    """
    Exceção lançada para índices de face fora do intervalo
    ou dados de face inconsistentes.

    Example:
        >>> raise SimplexoInvalidoError("Face 3 de um 2-simplexo")
    """
    pass


class MapaSimplicialInvalidoError(HomologiaError):
    """
    Exceção lançada quando um mapa não comuta com as faces
    ou não preserva o ponto base.

    Example:
        >>> raise MapaSimplicialInvalidoError("f(∂0 x) != ∂0 f(x)")
    """
    pass


class ContracaoInvalidaError(HomologiaError):
    """
    Exceção lançada quando uma contração viola alguma de suas
    identidades.

    Example:
        >>> raise ContracaoInvalidaError("h h != 0")
    """
    pass


class JanelaInsuficienteError(HomologiaError):
    """
    Exceção lançada quando a janela de graus não contém todos
    os termos necessários para avaliar uma identidade.

    Example:
        >>> raise JanelaInsuficienteError("Janela 2 < grau 3 exigido")
    """
    pass


class TruncamentoInstavelError(HomologiaError):
    """
    Exceção lançada quando a cohomologia truncada muda ao
    aumentar o teto de comprimento.

    Example:
        >>> raise TruncamentoInstavelError("Posto em grau 1: 2 -> 3")
    """
    pass


class CoeficienteNaoSuportadoError(HomologiaError):
    """
    Exceção lançada para especificações de coeficientes inválidas
    ou não suportadas pela operação.

    Example:
        >>> raise CoeficienteNaoSuportadoError("zmod:4 não é primo")
    """
    pass


class FixtureInvalidaError(HomologiaError):
    """
    Exceção lançada quando um arquivo de fixture não segue o formato.

    Example:
        >>> raise FixtureInvalidaError("Falta a chave 'basepoint'")
    """
    pass
