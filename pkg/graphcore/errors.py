"""
Jerarquía de errores del framework.

Todos los errores heredan de AntidimError. Los errores de entrada además
heredan de ValueError para que el CLI los traduzca al código de salida 2;
TooLarge y BudgetExceeded indican presupuesto agotado (código 3).
"""


class AntidimError(Exception):
    """Base class for every error raised by the framework."""


class InvalidGraph(AntidimError, ValueError):
    """Out-of-range vertex id, self-loop or malformed vertex count."""


class DisconnectedGraph(AntidimError, ValueError):
    """The operation needs a connected graph."""


class EmptySet(AntidimError, ValueError):
    """The vertex set S is empty."""


class FullSet(AntidimError, ValueError):
    """The vertex set S covers every vertex of the graph."""


class NotATree(AntidimError, ValueError):
    """The graph has a cycle or edge_count != n - 1."""


class NotGeodetic(AntidimError, ValueError):
    """Some pair of vertices has more than one shortest path."""


class NotBlockGraph(AntidimError, ValueError):
    """Some biconnected component is not complete."""


class FactorTooSmall(AntidimError, ValueError):
    """A product factor is below the order required by the product bound."""


class OrderTooLarge(AntidimError, ValueError):
    """The requested order is above the built-in enumeration cap."""


class ParameterError(AntidimError, ValueError):
    """Invalid family or random-model parameter."""


class EdgeListError(AntidimError, ValueError):
    """Malformed edge-list line."""


class Graph6Error(AntidimError, ValueError):
    """Malformed graph6 line."""


class BadHeader(Graph6Error):
    """Size header missing or out of the printable graph6 range."""


class TruncatedBits(Graph6Error):
    """Fewer adjacency chunks than the header announces."""


class TrailingGarbage(Graph6Error):
    """Extra bytes after the adjacency chunks, or non-zero padding bits."""


class TooLarge(AntidimError):
    """Exhaustive search refused because 2^n subsets exceed the limit."""


class BudgetExceeded(AntidimError):
    """A wall-time budget ran out before a verdict was reached."""
