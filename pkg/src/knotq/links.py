"""Presentations for two-bridge links, closed braids and torus links with an axis."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from pathlib import Path
from typing import Sequence

from .presentation import (
    PresentationError,
    PrimaryRelation,
    QuandlePresentation,
    parse_presentation,
    relation,
)
from .words import Word, reassociate

A, B, C = 0, 1, 2


class LinkSpecError(PresentationError):
    pass


def _names(k: int) -> tuple[str, ...]:
    return tuple(chr(ord("a") + i) for i in range(k))


# ---------------------------------------------------------------------------
# two-bridge links


def schubert_signs(p: int, q: int) -> list[int]:
    """Signs ``(-1)^floor(i p / q)`` for ``i = 1..q-1`` along a bridge."""
    return [(-1) ** ((i * p) // q) for i in range(1, q)]


def two_bridge(p: int, q: int, n: int | None = 2) -> QuandlePresentation:
    """``Q_n(L_{p/q})`` from the Schubert normal form.

    For ``n == 2`` the words are unsigned and depend only on ``q``: a knot
    (``q = 2t+1``) gets ``a^{(ba)^t} = b`` and a link (``q = 2t``) gets
    ``a^{(ba)^{t-1} b} = a, b^{(ab)^{t-1} a} = b``. Other ``n`` keep the
    Schubert signs and both bridge relations.
    """
    if not (0 < p < q) or gcd(p, q) != 1:
        raise LinkSpecError(f"two-bridge link needs gcd(p, q) = 1 and 0 < p < q, got {p}/{q}")
    signs = schubert_signs(p, q)
    if n == 2:
        signs = [1] * len(signs)

    def bridge_word(first: int, second: int) -> Word:
        return Word(tuple(((first if i % 2 == 0 else second), s) for i, s in enumerate(signs)))

    if q % 2:
        rels = [PrimaryRelation(A, bridge_word(B, A), B)]
        if n != 2:
            rels.append(PrimaryRelation(B, bridge_word(A, B), A))
    else:
        rels = [PrimaryRelation(A, bridge_word(B, A), A), PrimaryRelation(B, bridge_word(A, B), B)]
    return QuandlePresentation(("a", "b"), tuple(rels), n, f"L{p}/{q}")


# ---------------------------------------------------------------------------
# closed braids


@dataclass(frozen=True)
class BraidWord:
    """Braid on ``strands`` strands; letters are ``(i, ±1)`` for ``σ_i^{±1}``, ``1 <= i < strands``."""

    strands: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.strands < 1:
            raise LinkSpecError("a braid needs at least one strand")
        for i, s in self.letters:
            if not 1 <= i < self.strands or s not in (1, -1):
                raise LinkSpecError(f"braid letter {s * i} out of range for {self.strands} strands")

    @classmethod
    def from_ints(cls, strands: int, letters: Sequence[int]) -> BraidWord:
        if any(x == 0 for x in letters):
            raise LinkSpecError("braid letters are nonzero integers")
        return cls(strands, tuple((abs(x), 1 if x > 0 else -1) for x in letters))

    def permutation(self) -> list[int]:
        """``perm[s]`` is the bottom position reached by the strand starting at top position ``s``."""
        at = list(range(self.strands))  # at[pos] = strand
        for i, _ in self.letters:
            at[i - 1], at[i] = at[i], at[i - 1]
        perm = [0] * self.strands
        for pos, s in enumerate(at):
            perm[s] = pos
        return perm

    def components(self) -> list[int]:
        """Component index of each top strand, numbered by first appearance."""
        perm = self.permutation()
        comp = [-1] * self.strands
        k = 0
        for s in range(self.strands):
            if comp[s] < 0:
                u = s
                while comp[u] < 0:
                    comp[u] = k
                    u = perm[u]
                k += 1
        return comp

    def mirror_reverse(self) -> BraidWord:
        """Reflect the diagram (flip every crossing) and read it backwards."""
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))


def _orientation(orient, comp: list[int]) -> list[int]:
    """Per-component direction flags.

    ``orient`` lists one flag per component, or one per strand as long as
    strands of the same component agree (so ``+++`` works for a 3-strand knot).
    """
    ncomp = max(comp, default=-1) + 1
    if orient is None:
        return [1] * ncomp
    if isinstance(orient, str):
        flags = [1 if ch == "+" else -1 if ch == "-" else 0 for ch in orient]
        if 0 in flags:
            raise LinkSpecError(f"orientation {orient!r} must use only '+' and '-'")
    else:
        flags = [int(x) for x in orient]
    if any(f not in (1, -1) for f in flags):
        raise LinkSpecError("orientation flags must be +1 or -1")
    if len(flags) == len(comp) != ncomp:
        per = {}
        for c, f in zip(comp, flags):
            if per.setdefault(c, f) != f:
                raise LinkSpecError(f"orientation {orient!r} disagrees along a component")
        flags = [per[c] for c in range(ncomp)]
    if len(flags) != ncomp:
        raise LinkSpecError(f"orientation has {len(flags)} flags but the closure has {ncomp} components")
    return flags


def _braid_labels(braid: BraidWord, flags: list[int]):
    """Propagate arc labels from the top of the braid to the bottom.

    At a crossing the under strand's label becomes ``under ▷ over`` or
    ``under ▷⁻¹ over``; the exponent is the crossing sign times the over
    strand's orientation. ``σ_i`` puts the strand at position ``i`` over.
    """
    comp = braid.components()
    labels = [(j, Word()) for j in range(braid.strands)]
    strand_at = list(range(braid.strands))
    for i, sign in braid.letters:
        left, right = i - 1, i
        over_pos, under_pos = (left, right) if sign > 0 else (right, left)
        e = sign * flags[comp[strand_at[over_pos]]]
        (x, u), (y, v) = labels[under_pos], labels[over_pos]
        labels[under_pos] = (x, reassociate(u, y, v, e))
        labels[left], labels[right] = labels[right], labels[left]
        strand_at[left], strand_at[right] = strand_at[right], strand_at[left]
    return labels, comp


def braid_closure(braid: BraidWord, orient=None, n: int | None = 2, name: str = "") -> QuandlePresentation:
    """Quandle presentation of the closed braid, one generator per top strand."""
    flags = _orientation(orient, braid.components())
    labels, _ = _braid_labels(braid, flags)
    rels = [PrimaryRelation(x, w, j) for j, (x, w) in enumerate(labels) if (x, w) != (j, Word())]
    return QuandlePresentation(_names(braid.strands), tuple(rels), n, name or f"braid{braid.strands}")


def braid_closure_with_axis(braid: BraidWord, n: int | None = 2, orient=None,
                            name: str = "") -> QuandlePresentation:
    """Closed braid together with an unknotted axis encircling every strand.

    The axis generator ``z`` is last. Below the braid each strand passes under
    the axis (``z`` appended to its closure exponent); above it the axis passes
    under every strand, right to left, giving ``z^{x_p ... x_1} = z``.
    """
    comp = braid.components()
    flags = _orientation(orient, comp)
    labels, _ = _braid_labels(braid, flags)
    z = braid.strands
    rels = [PrimaryRelation(x, w + Word(((z, 1),)), j) for j, (x, w) in enumerate(labels)]
    axis = Word(tuple((j, flags[comp[j]]) for j in reversed(range(braid.strands))))
    rels.insert(0, PrimaryRelation(z, axis, z))
    return QuandlePresentation(_names(braid.strands) + ("z",), tuple(rels), n,
                               name or f"braid{braid.strands}+axis")


def torus_braid(p: int, q: int) -> BraidWord:
    """``(σ_1 ... σ_{p-1})^q``; a negative ``q`` gives the mirror."""
    s = 1 if q >= 0 else -1
    return BraidWord(p, tuple((i, s) for _ in range(abs(q)) for i in range(1, p)))


def torus(p: int, q: int, orient=None, n: int | None = 2) -> QuandlePresentation:
    if p < 2 or abs(q) < 1:
        raise LinkSpecError(f"torus link needs p >= 2 and q != 0, got ({p}, {q})")
    tag = "" if orient is None else (orient if isinstance(orient, str) else "")
    return braid_closure(torus_braid(p, q), orient, n, f"T{p},{q}{tag}")


def torus_with_axis(q: int) -> QuandlePresentation:
    """``Q_2(T_{2,q} ∪ A)`` with generators a, b (the torus link) and c (the axis)."""
    if q < 2:
        raise LinkSpecError(f"torus link with axis needs q >= 2, got {q}")
    t = q // 2
    if q % 2:
        rels = [
            relation(C, [A, B], C),
            relation(A, [B, A] * t + [B, C], B),
            relation(B, [A, B] * t + [C], A),
        ]
    else:
        rels = [
            relation(C, [A, B], C),
            relation(A, [B, A] * (t - 1) + [B, C], A),
            relation(B, [A, B] * t + [C], B),
        ]
    return QuandlePresentation(("a", "b", "c"), tuple(rels), 2, f"T2,{q}+A")


# ---------------------------------------------------------------------------
# named links and CLI link specs


def named(tag: str, n: int | None = None) -> QuandlePresentation:
    """Canonical presentations by name; ``n=None`` gives the fundamental quandle."""
    if tag == "unknot":
        return QuandlePresentation(("a",), (), n, "unknot")
    if tag == "hopf":
        p = two_bridge(1, 2, n)
        return QuandlePresentation(p.generators, p.relations, n, "hopf")
    if tag == "trefoil":
        return torus(2, 3, None, n)
    if tag == "figure-eight":
        return two_bridge(3, 5, n)
    if tag == "trefoil-axis-b":
        return braid_closure_with_axis(torus_braid(3, 2), 2 if n is None else n, name="T2,3+B")
    raise LinkSpecError(f"unknown link name {tag!r}")


def _ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise LinkSpecError(f"bad braid letters {text!r}") from None


def parse_link_spec(spec: str, n: int | None = 2) -> QuandlePresentation:
    """Build a presentation from a CLI link spec.

    ``two-bridge:p/q``, ``torus:p,q[:++|+-|...]``, ``torus-axis:q``,
    ``braid:p:<letters>``, ``braid-axis:p:<letters>``, ``unknot``, ``hopf``,
    any other :func:`named` tag, or ``file:<path>`` (``n`` overrides the file's
    exponent when not None).
    """
    kind, _, rest = spec.strip().partition(":")
    try:
        if kind == "two-bridge":
            p, q = rest.split("/")
            return two_bridge(int(p), int(q), n)
        if kind == "torus":
            parts = rest.split(":")
            p, q = (int(x) for x in parts[0].split(","))
            orient = parts[1] if len(parts) > 1 else None
            return torus(p, q, orient, n)
        if kind == "torus-axis":
            if n not in (None, 2):
                raise LinkSpecError("torus links with axis are only finite for n = 2")
            return torus_with_axis(int(rest))
        if kind in ("braid", "braid-axis"):
            strands, _, letters = rest.partition(":")
            braid = BraidWord.from_ints(int(strands), _ints(letters))
            if kind == "braid":
                return braid_closure(braid, None, n)
            return braid_closure_with_axis(braid, n)
        if kind == "file":
            text = Path(rest).read_text(encoding="utf-8")
            pres = parse_presentation(text)
            return pres if n is None else pres.with_n(n)
        if not rest:
            return named(kind, n)
    except (ValueError, TypeError) as exc:
        if isinstance(exc, PresentationError):
            raise
        raise LinkSpecError(f"cannot parse link spec {spec!r}: {exc}") from None
    raise LinkSpecError(f"unknown link spec {spec!r}")
