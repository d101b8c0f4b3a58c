"""End-to-end analysis of a presented quandle and the table reproduction."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import groups
from .enumerator import CayleyTable, enumerate_quandle
from .presentation import QuandlePresentation, describe
from .published import Expected
from .quandle import FiniteQuandle, components, from_cayley, is_medial


@dataclass
class Analysis:
    presentation: QuandlePresentation
    cayley: CayleyTable
    quandle: FiniteQuandle
    components: list[list[int]]
    aut: groups.PermGroup
    inn: groups.PermGroup
    trans: groups.PermGroup
    medial: bool
    names: dict[str, str] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return self.quandle.size


def analyze(p: QuandlePresentation, cap: int | None = None) -> Analysis:
    t = enumerate_quandle(p, cap)
    Q = from_cayley(t)
    result = Analysis(
        presentation=p,
        cayley=t,
        quandle=Q,
        components=components(Q),
        aut=groups.automorphism_group(Q),
        inn=groups.inner_group(Q),
        trans=groups.transvection_group(Q),
        medial=is_medial(Q),
    )
    result.names = {key: groups.identify(getattr(result, key)) for key in ("aut", "inn", "trans")}
    return result


def format_report(a: Analysis) -> str:
    sizes = ", ".join(str(len(c)) for c in a.components)
    lines = [
        f"presentation: {describe(a.presentation)}",
        f"order: {a.size}",
        f"components: {len(a.components)} ({sizes})",
        f"Aut: order {a.aut.order}, {a.names['aut']}",
        f"Inn: order {a.inn.order}, {a.names['inn']}",
        f"Trans: order {a.trans.order}, {a.names['trans']}",
        f"medial: {'yes' if a.medial else 'no'}",
    ]
    return "\n".join(lines) + "\n"


@dataclass
class TableRow:
    expected: Expected
    analysis: Analysis
    mismatches: list[str]

    def cells(self) -> list[str]:
        a = self.analysis
        return [
            self.expected.table,
            self.expected.label,
            str(a.size),
            str(len(a.components)),
            str(a.aut.order),
            a.names["aut"],
            str(a.inn.order),
            a.names["inn"],
            str(a.trans.order),
            a.names["trans"],
            "yes" if a.medial else "no",
            "ok" if not self.mismatches else "MISMATCH",
        ]


HEADER = ["table", "quandle", "order", "components", "|Aut|", "Aut", "|Inn|", "Inn",
          "|Trans|", "Trans", "medial", "status"]


def check_row(expected: Expected, cap: int | None = None) -> TableRow:
    a = analyze(expected.build(), cap)
    bad = []
    if a.size != expected.size:
        bad.append(f"{expected.label}: order {a.size}, published {expected.size}")
    for key in ("aut", "inn", "trans"):
        want = getattr(expected, key)
        if want is None:
            continue
        if not groups.group_isomorphic(getattr(a, key), groups.reference_group(want)):
            bad.append(f"{expected.label}: {key.capitalize()} is {a.names[key]} "
                       f"(order {getattr(a, key).order}), published {want}")
    return TableRow(expected, a, bad)


def to_tsv(rows: list[TableRow]) -> str:
    return "\n".join("\t".join(r) for r in [HEADER] + [row.cells() for row in rows]) + "\n"


def to_text(rows: list[TableRow]) -> str:
    grid = [HEADER] + [row.cells() for row in rows]
    widths = [max(len(r[i]) for r in grid) for i in range(len(HEADER))]
    out = []
    for k, r in enumerate(grid):
        out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        if k == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out) + "\n"
