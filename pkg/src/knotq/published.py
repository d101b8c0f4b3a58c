"""Published orders and group structures the table reproduction is checked against.

Group names use the :func:`knotq.groups.reference_group` syntax; ``Hol(Zk)``
is the holomorph ``Z_k ⋊ Z_k*`` and ``Dk`` has order ``2k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable

from . import links
from .presentation import QuandlePresentation


@dataclass(frozen=True)
class Expected:
    table: str
    label: str
    build: Callable[[], QuandlePresentation]
    size: int
    aut: str | None
    inn: str | None
    trans: str | None


def two_bridge_row(q: int, table: str = "2", p: int = 1) -> Expected:
    k = q // gcd(2, q)
    if table == "2":
        label, build = f"Q2(L{p}/{q})", (lambda: links.two_bridge(p, q, 2))
    else:
        label, build = f"Q2(T2,{q})", (lambda: links.torus(2, q, None, 2))
    return Expected(table, label, build, q, f"Hol(Z{q})", f"D{k}", f"Z{k}")


def torus_axis_row(q: int) -> Expected:
    return Expected("5", f"Q2(T2,{q} u A)", lambda: links.torus_with_axis(q), 2 + 2 * q,
                    f"Z2 x Hol(Z{2 * q})", f"D{2 * q // gcd(2, q)}", f"D{q}")


TABLE4_FIXED = (
    Expected("4", "Q3(T2,3)", lambda: links.torus(2, 3, None, 3), 4, "A4", "A4", "Z2 x Z2"),
    Expected("4", "Q4(T2,3)", lambda: links.torus(2, 3, None, 4), 6, "S4", "S4", "A4"),
    Expected("4", "Q5(T2,3)", lambda: links.torus(2, 3, None, 5), 12, "A5", "A5", "A5"),
    Expected("4", "Q3(T2,4)", lambda: links.torus(2, 4, "++", 3), 8, "S4", "A4", "A4"),
    Expected("4", "Q3(T2,4+-)", lambda: links.torus(2, 4, "+-", 3), 8, "Z2 x A4", "A4", "Z2 x Z2"),
    Expected("4", "Q3(T2,5)", lambda: links.torus(2, 5, None, 3), 20, "S5", "A5", "A5"),
    Expected("4", "Q2(T3,3)", lambda: links.torus(3, 3, None, 2), 6, "Z2 x S4", "Z2 x Z2", "Z2 x Z2"),
    Expected("4", "Q2(T3,4)", lambda: links.torus(3, 4, None, 2), 12, "Z2 x S4", "A4", "A4"),
    Expected("4", "Q2(T3,5)", lambda: links.torus(3, 5, None, 2), 30, "Z2 x S5", "A5", "A5"),
)

TREFOIL_AXIS_B = Expected("5", "Q2(T2,3 u B)", lambda: links.named("trefoil-axis-b"), 18,
                          "Z2 x Z2 x S4", "S4", "S4")


def table_rows(table: str, qs: range | None = None) -> list[Expected]:
    if table == "2":
        return [two_bridge_row(q, "2") for q in (qs or range(3, 16))]
    if table == "4":
        return [two_bridge_row(q, "4") for q in (qs or range(3, 9))] + list(TABLE4_FIXED)
    if table == "5":
        return [torus_axis_row(q) for q in (qs or range(3, 9))] + [TREFOIL_AXIS_B]
    raise ValueError(f"no table {table!r}")
