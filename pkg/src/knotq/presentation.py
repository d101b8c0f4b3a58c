"""Quandle presentations and the relations Winker's method traces.

Text format, one directive per line (``#`` starts a comment)::

    gens a b
    n 2
    rel a : b a b a = b

``gens`` must come first and appear once. ``n`` is optional; without it the
presentation is of the fundamental quandle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .words import Word, cyclic_reduce, format_word, invert, normalize_mod_n, parse_word


class PresentationError(ValueError):
    pass


class PresentationSyntaxError(PresentationError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class PrimaryRelation:
    """``base^exponent = target``."""

    base: int
    exponent: Word
    target: int


@dataclass(frozen=True)
class QuandlePresentation:
    generators: tuple[str, ...]
    relations: tuple[PrimaryRelation, ...] = ()
    n: int | None = None
    name: str = field(default="", compare=False)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def with_n(self, n: int | None) -> QuandlePresentation:
        return QuandlePresentation(self.generators, self.relations, n, self.name)

    def with_relations(self, relations: Sequence[PrimaryRelation]) -> QuandlePresentation:
        return QuandlePresentation(self.generators, tuple(relations), self.n, self.name)


def relation(base: int, exponent: Sequence[int] | Word, target: int) -> PrimaryRelation:
    """Shorthand: ``exponent`` may be a list of generator indices (``-k-1`` for k barred)."""
    if not isinstance(exponent, Word):
        exponent = Word.of(*exponent)
    return PrimaryRelation(base, exponent, target)


def secondary_relation(r: PrimaryRelation, n: int | None = None, simplify: bool = True) -> Word:
    """Universal consequence ``y^{w̄ x_j w x̄_k} = y`` of ``x_j^w = x_k``.

    With ``simplify`` the word is cyclically reduced and, for ``n == 2``,
    sign-normalized. An empty result means the relation is a tautology.
    """
    w = r.exponent
    word = invert(w) + Word(((r.base, 1),)) + w + Word(((r.target, -1),))
    if not simplify:
        return word
    return normalize_mod_n(cyclic_reduce(word), n)


def n_relations(p: QuandlePresentation) -> list[Word]:
    if p.n is None:
        raise PresentationError("the fundamental quandle has no n-quandle relations")
    return [Word(((j, 1),) * p.n) for j in range(p.ngens)]


def _cyclic_key(w: Word) -> tuple:
    variants = []
    for v in (w.letters, invert(w).letters):
        for i in range(max(len(v), 1)):
            variants.append(v[i:] + v[:i])
    return min(variants)


def universal_relations(p: QuandlePresentation, simplify: bool = True) -> list[Word]:
    """n-quandle relations followed by secondary relations, in presentation order.

    Empty words are dropped. With ``simplify``, secondary relations are
    shortened and duplicates up to rotation and inversion removed; otherwise
    only exact repeats are.
    """
    words = n_relations(p) if p.n is not None else []
    words += [secondary_relation(r, p.n, simplify) for r in p.relations]
    seen = set()
    out = []
    for w in words:
        if not w:
            continue
        key = _cyclic_key(w) if simplify else w.letters
        if key not in seen:
            seen.add(key)
            out.append(w)
    return out


def validate(p: QuandlePresentation) -> list[str]:
    diagnostics = []
    g = p.ngens
    if g == 0:
        diagnostics.append("presentation has no generators")
    if len(set(p.generators)) != g:
        diagnostics.append("duplicate generator names")
    for name in p.generators:
        if not name.isidentifier() or not name.isascii():
            diagnostics.append(f"generator name {name!r} is not an ASCII identifier")
    if p.n is not None and p.n < 2:
        diagnostics.append(f"exponent n = {p.n} must be at least 2")
    for i, r in enumerate(p.relations):
        used = [r.base, r.target] + [gen for gen, _ in r.exponent]
        if any(not 0 <= x < g for x in used):
            diagnostics.append(f"relation {i + 1} references an undeclared generator")
    return diagnostics


def parse_presentation(text: str) -> QuandlePresentation:
    gens: list[str] | None = None
    n = None
    relations = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        col = len(line) - len(line.lstrip()) + 1
        key, _, rest = stripped.partition(" ")
        if key == "gens":
            if gens is not None:
                raise PresentationSyntaxError("duplicate 'gens' line", lineno, col)
            gens = rest.split()
            if not gens:
                raise PresentationSyntaxError("'gens' needs at least one name", lineno, col)
            bad = [x for x in gens if not (x.isidentifier() and x.isascii())]
            if bad or len(set(gens)) != len(gens):
                raise PresentationSyntaxError("generator names must be distinct ASCII identifiers",
                                              lineno, col + 5)
        elif key == "n":
            try:
                n = int(rest)
            except ValueError:
                raise PresentationSyntaxError(f"bad exponent {rest.strip()!r}", lineno, col + 2) from None
            if n < 2:
                raise PresentationSyntaxError(f"exponent n = {n} must be at least 2", lineno, col + 2)
        elif key == "rel":
            if gens is None:
                raise PresentationSyntaxError("undeclared generator: 'rel' before 'gens'", lineno, col)
            lhs, colon, tail = rest.partition(":")
            body, eq, target = tail.partition("=")
            if not colon or not eq:
                raise PresentationSyntaxError("expected 'rel <gen> : <word> = <gen>'", lineno, col)
            base, target = lhs.strip(), target.strip()
            try:
                word = parse_word(body, gens)
                b, t = gens.index(base), gens.index(target)
            except (KeyError, ValueError) as exc:
                bad = exc.args[0] if isinstance(exc, KeyError) else (base if base not in gens else target)
                raise PresentationSyntaxError(f"undeclared generator {bad!r}", lineno,
                                              line.find(str(bad), col - 1) + 1) from None
            relations.append(PrimaryRelation(b, word, t))
        else:
            raise PresentationSyntaxError(f"unknown directive {key!r}", lineno, col)
    if gens is None:
        raise PresentationSyntaxError("missing 'gens' line", 1, 1)
    return QuandlePresentation(tuple(gens), tuple(relations), n)


def format_presentation(p: QuandlePresentation) -> str:
    lines = ["gens " + " ".join(p.generators)]
    if p.n is not None:
        lines.append(f"n {p.n}")
    for r in p.relations:
        lines.append(f"rel {p.generators[r.base]} : {format_word(r.exponent, p.generators)} "
                     f"= {p.generators[r.target]}")
    return "\n".join(lines) + "\n"


def describe(p: QuandlePresentation) -> str:
    """Compact ``<a, b | a^{b a} = b>_2`` rendering for reports."""
    rels = ", ".join(f"{p.generators[r.base]}^{{{format_word(r.exponent, p.generators)}}}"
                     f" = {p.generators[r.target]}" for r in p.relations)
    suffix = f"_{p.n}" if p.n is not None else ""
    return f"<{', '.join(p.generators)} | {rels}>{suffix}"
