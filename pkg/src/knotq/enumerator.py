"""Winker's diagramming method: build the Cayley graph of a finite n-quandle.

Vertices are stored in a table with two columns per generator: column ``2k``
is the action of generator ``k`` and ``2k + 1`` the action of its inverse, so
``col ^ 1`` is always the inverse column. Coincidences are resolved with a
union-find whose surviving representative is the smaller vertex id, following
the usual coset-enumeration collapse routine.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

import numpy as np

from ._jit import njit
from .presentation import (
    PresentationError,
    QuandlePresentation,
    format_presentation,
    universal_relations,
    validate,
)
from .words import Word, format_word

DEFAULT_CAP = 100_000

# status codes returned by the kernel
_OK = 0
_CAP = 1


class CapExceeded(RuntimeError):
    """Enumeration allocated ``vertices`` ids without closing; the quandle is likely infinite."""

    def __init__(self, vertices: int, cap: int):
        super().__init__(f"enumeration exceeded the cap of {cap} vertices")
        self.vertices = vertices
        self.cap = cap


class InvalidPresentation(PresentationError):
    pass


def default_cap() -> int:
    value = os.environ.get("KNOTQ_CAP")
    return int(value) if value else DEFAULT_CAP


# ---------------------------------------------------------------------------
# kernels

# st layout: [vertices allocated, queue head, queue tail, merges]


@njit
def _find(uf, v):
    root = v
    while uf[root] != root:
        root = uf[root]
    while uf[v] != root:
        nxt = uf[v]
        uf[v] = root
        v = nxt
    return root


@njit
def _merge(uf, queue, st, a, b):
    a = _find(uf, a)
    b = _find(uf, b)
    if a == b:
        return
    if a > b:
        a, b = b, a
    uf[b] = a
    queue[st[2]] = b
    st[2] += 1
    st[3] += 1


@njit
def _collapse(tab, uf, queue, st):
    ncols = tab.shape[1]
    while st[1] < st[2]:
        dead = queue[st[1]]
        st[1] += 1
        for x in range(ncols):
            d = tab[dead, x]
            if d < 0:
                continue
            xi = x ^ 1
            tab[d, xi] = -1
            mu = _find(uf, dead)
            nu = _find(uf, d)
            if tab[mu, x] >= 0:
                _merge(uf, queue, st, nu, tab[mu, x])
            elif tab[nu, xi] >= 0:
                _merge(uf, queue, st, mu, tab[nu, xi])
            else:
                tab[mu, x] = nu
                tab[nu, xi] = mu
    st[1] = 0
    st[2] = 0


@njit
def _new_vertex(tab, st, pvert, plet, v, x):
    nv = st[0]
    if nv >= tab.shape[0]:
        return -1
    st[0] = nv + 1
    tab[v, x] = nv
    tab[nv, x ^ 1] = v
    pvert[nv] = v
    plet[nv] = x
    return nv


@njit
def _trace(tab, uf, queue, st, pvert, plet, start, letters, lo, hi, end):
    """Walk ``letters[lo:hi]`` from ``start``; ``end >= 0`` forces where it must stop.

    Returns False when a new vertex would exceed the table.
    """
    v = _find(uf, start)
    if end >= 0:
        end = _find(uf, end)
    for i in range(lo, hi):
        x = letters[i]
        w = tab[v, x]
        if w >= 0:
            v = w
            continue
        if i == hi - 1 and end >= 0:
            back = tab[end, x ^ 1]
            if back >= 0:
                _merge(uf, queue, st, v, back)
            else:
                tab[v, x] = end
                tab[end, x ^ 1] = v
            return True
        v = _new_vertex(tab, st, pvert, plet, v, x)
        if v < 0:
            return False
    if end >= 0 and v != end:
        _merge(uf, queue, st, v, end)
    return True


@njit
def _winker(ngens, prim_base, prim_target, prim_ptr, prim_letters, uni_ptr, uni_letters,
            tab, uf, queue, pvert, plet, st):
    for i in range(ngens):
        tab[i, 2 * i] = i
        tab[i, 2 * i + 1] = i
        pvert[i] = -1
        plet[i] = -1
    st[0] = ngens
    for r in range(prim_base.shape[0]):
        if not _trace(tab, uf, queue, st, pvert, plet, prim_base[r], prim_letters,
                      prim_ptr[r], prim_ptr[r + 1], prim_target[r]):
            return _CAP
        _collapse(tab, uf, queue, st)
    nuni = uni_ptr.shape[0] - 1
    ncols = tab.shape[1]
    cursor = 0
    while cursor < st[0]:
        if uf[cursor] == cursor:
            for r in range(nuni):
                if uf[cursor] != cursor:
                    break
                if not _trace(tab, uf, queue, st, pvert, plet, cursor, uni_letters,
                              uni_ptr[r], uni_ptr[r + 1], cursor):
                    return _CAP
                _collapse(tab, uf, queue, st)
            if uf[cursor] == cursor:
                for x in range(ncols):
                    if tab[cursor, x] < 0:
                        if _new_vertex(tab, st, pvert, plet, cursor, x) < 0:
                            return _CAP
        cursor += 1
    return _OK


# ---------------------------------------------------------------------------


def _encode(words: list[Word]) -> tuple[np.ndarray, np.ndarray]:
    ptr = np.zeros(len(words) + 1, dtype=np.int64)
    flat: list[int] = []
    for i, w in enumerate(words):
        flat.extend(2 * g + (0 if s > 0 else 1) for g, s in w)
        ptr[i + 1] = len(flat)
    return ptr, np.asarray(flat, dtype=np.int64)


@dataclass
class CayleyTable:
    """Cayley graph of a finite quandle.

    ``actions[k, i]`` is the element reached from element ``i`` along the
    edge of generator ``k`` (that is, ``i ▷ x_k``). Elements are numbered
    ``0..m-1`` by ascending surviving vertex id, so the generators come first
    unless the presentation identifies some of them.
    """

    presentation: QuandlePresentation
    actions: np.ndarray
    words: list[tuple[int, Word]]
    vertices_created: int = 0
    merges: int = 0
    generator_elements: list[int] = field(default_factory=list)

    @property
    def size(self) -> int:
        return self.actions.shape[1]

    @property
    def n(self) -> int | None:
        return self.presentation.n

    def inverse_actions(self) -> np.ndarray:
        inv = np.empty_like(self.actions)
        m = self.size
        for k, perm in enumerate(self.actions):
            inv[k, perm] = np.arange(m)
        return inv

    def act(self, elements, word: Word) -> np.ndarray:
        """Push ``elements`` along the edges spelled by ``word``."""
        cur = np.asarray(elements, dtype=np.int64)
        inv = None
        for g, s in word:
            if s > 0:
                cur = self.actions[g][cur]
            else:
                if inv is None:
                    inv = self.inverse_actions()
                cur = inv[g][cur]
        return cur

    def components(self) -> list[list[int]]:
        return _orbits(self.actions, self.size)

    def canonical_form(self) -> tuple:
        """Actions relabeled by breadth-first discovery from the generators.

        Two tables of one presentation agree here iff their Cayley graphs are
        isomorphic by a map fixing every generator.
        """
        inv = self.inverse_actions()
        label = {}
        order = []
        for e in self.generator_elements:
            if e not in label:
                label[e] = len(order)
                order.append(e)
        head = 0
        while head < len(order):
            v = order[head]
            head += 1
            for k in range(len(self.actions)):
                for w in (int(self.actions[k][v]), int(inv[k][v])):
                    if w not in label:
                        label[w] = len(order)
                        order.append(w)
        gens = tuple(label[e] for e in self.generator_elements)
        acts = tuple(tuple(label[int(self.actions[k][v])] for v in order) for k in range(len(self.actions)))
        return gens, acts

    def word_text(self, i: int) -> str:
        base, w = self.words[i]
        name = self.presentation.generators[base]
        return name if not w else f"{name}^{{{format_word(w, self.presentation.generators)}}}"

    def to_json(self) -> str:
        names = self.presentation.generators
        doc = {
            "elements": self.size,
            "generators": list(names),
            "actions": {names[k]: [int(v) + 1 for v in self.actions[k]] for k in range(len(names))},
            "words": [{"base": names[b], "exponent": format_word(w, names)} for b, w in self.words],
            "presentation": format_presentation(self.presentation),
        }
        return json.dumps(doc, indent=2)


def _orbits(perms: np.ndarray, m: int) -> list[list[int]]:
    seen = np.full(m, -1, dtype=np.int64)
    out = []
    for s in range(m):
        if seen[s] >= 0:
            continue
        seen[s] = len(out)
        orbit = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for p in perms:
                w = int(p[v])
                if seen[w] < 0:
                    seen[w] = len(out)
                    orbit.append(w)
                    stack.append(w)
        out.append(sorted(orbit))
    return out


def enumerate_quandle(p: QuandlePresentation, cap: int | None = None,
                      simplify: bool = True) -> CayleyTable:
    """Run Winker's method on ``p``.

    Raises :class:`CapExceeded` if more than ``cap`` vertices are ever
    allocated (defaults to ``KNOTQ_CAP`` or 100000). ``simplify=False`` traces
    the secondary relations exactly as derived, without cyclic reduction.
    """
    problems = validate(p)
    if problems:
        raise InvalidPresentation("; ".join(problems))
    cap = default_cap() if cap is None else cap
    if cap < p.ngens:
        raise CapExceeded(p.ngens, cap)
    g = p.ngens
    prim_ptr, prim_letters = _encode([r.exponent for r in p.relations])
    prim_base = np.array([r.base for r in p.relations], dtype=np.int64)
    prim_target = np.array([r.target for r in p.relations], dtype=np.int64)
    uni_ptr, uni_letters = _encode(universal_relations(p, simplify))

    tab = np.full((cap, 2 * g), -1, dtype=np.int64)
    uf = np.arange(cap, dtype=np.int64)
    queue = np.zeros(cap, dtype=np.int64)
    pvert = np.full(cap, -1, dtype=np.int64)
    plet = np.full(cap, -1, dtype=np.int64)
    st = np.zeros(4, dtype=np.int64)
    status = _winker(g, prim_base, prim_target, prim_ptr, prim_letters, uni_ptr, uni_letters,
                     tab, uf, queue, pvert, plet, st)
    created = int(st[0])
    if status == _CAP:
        raise CapExceeded(created, cap)

    live = np.flatnonzero(uf[:created] == np.arange(created))
    index = np.full(created, -1, dtype=np.int64)
    index[live] = np.arange(len(live))
    rows = tab[live][:, 0::2]
    if (rows < 0).any():
        raise RuntimeError("enumeration finished with undefined edges")
    roots = np.array([_root(uf, v) for v in rows.ravel()], dtype=np.int64).reshape(rows.shape)
    actions = np.ascontiguousarray(index[roots].T)

    words = []
    for v in live:
        letters = []
        u = int(v)
        while u >= g:
            x = int(plet[u])
            letters.append((x >> 1, -1 if x & 1 else 1))
            u = int(pvert[u])
        words.append((u, Word(tuple(reversed(letters)))))
    gen_elements = [int(index[_root(uf, i)]) for i in range(g)]
    return CayleyTable(p, actions, words, created, int(st[3]), gen_elements)


def _root(uf: np.ndarray, v: int) -> int:
    while uf[v] != v:
        v = uf[v]
    return int(v)


_STYLES = ["solid", "dashed", "dotted"]
_COLORS = ["red", "blue", "darkgreen", "orange", "purple", "brown"]


def to_dot(t: CayleyTable, loops: bool = False, name: str = "Q") -> str:
    """Graphviz source for the Cayley graph.

    Generators cycle through solid, dashed and dotted edges, then colors.
    Involutory quandles are drawn undirected since each edge is its own reverse.
    """
    undirected = t.n == 2
    names = t.presentation.generators
    lines = [f"{'graph' if undirected else 'digraph'} {name} {{"]
    for i in range(t.size):
        lines.append(f'  {i + 1} [label="{t.word_text(i)}"];')
    arrow = "--" if undirected else "->"
    for k, perm in enumerate(t.actions):
        if k < len(_STYLES):
            attrs = f'style={_STYLES[k]}'
        else:
            attrs = f'style=solid, color={_COLORS[(k - len(_STYLES)) % len(_COLORS)]}'
        for i, j in enumerate(perm):
            j = int(j)
            if i == j and not loops:
                continue
            if undirected and j < i:
                continue
            lines.append(f'  {i + 1} {arrow} {j + 1} [{attrs}, label="{names[k]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
