"""Finite n-quandles of two-bridge links, torus links and torus links with an axis."""

from .enumerator import CapExceeded, CayleyTable, enumerate_quandle, to_dot
from .links import BraidWord, braid_closure, braid_closure_with_axis, named, parse_link_spec, torus, torus_with_axis, two_bridge
from .presentation import QuandlePresentation, parse_presentation
from .quandle import FiniteQuandle, from_cayley
from .report import analyze

__all__ = [
    "BraidWord",
    "CapExceeded",
    "CayleyTable",
    "FiniteQuandle",
    "QuandlePresentation",
    "analyze",
    "braid_closure",
    "braid_closure_with_axis",
    "enumerate_quandle",
    "from_cayley",
    "named",
    "parse_link_spec",
    "parse_presentation",
    "to_dot",
    "torus",
    "torus_with_axis",
    "two_bridge",
]
