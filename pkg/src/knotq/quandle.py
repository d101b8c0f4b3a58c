"""Finite quandles as operation tables.

``op[x, y]`` is ``x ▷ y`` and ``inv_op[x, y]`` is ``x ▷⁻¹ y``; column ``y`` of
``op`` is the point symmetry ``S_y``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from ._jit import njit
from .enumerator import CayleyTable, _orbits
from .words import invert


class AxiomViolation(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteQuandle:
    op: np.ndarray
    inv_op: np.ndarray
    cayley: CayleyTable | None = None

    @property
    def size(self) -> int:
        return self.op.shape[0]

    @property
    def n(self) -> int | None:
        return None if self.cayley is None else self.cayley.n

    def symmetry(self, x: int) -> np.ndarray:
        return self.op[:, x]

    def symmetries(self) -> np.ndarray:
        """Row ``x`` is ``S_x``."""
        return np.ascontiguousarray(self.op.T)

    def is_involutory(self) -> bool:
        return bool(np.array_equal(self.op, self.inv_op))

    def is_trivial(self) -> bool:
        return bool((self.op == np.arange(self.size)[:, None]).all())

    def axiom_failures(self) -> list[str]:
        m = self.size
        r = np.arange(m)
        out = []
        if not np.array_equal(self.op[r, r], r):
            out.append("A1: x ▷ x != x")
        cols = np.broadcast_to(r, (m, m))
        if not (np.array_equal(self.inv_op[self.op, cols], np.broadcast_to(r[:, None], (m, m)))
                and np.array_equal(self.op[self.inv_op, cols], np.broadcast_to(r[:, None], (m, m)))):
            out.append("A2: ▷⁻¹ does not invert ▷")
        op = self.op
        lhs = op[op[:, :, None], r[None, None, :]]  # (x ▷ y) ▷ z
        rhs = op[op[:, None, :], op[None, :, :]]  # (x ▷ z) ▷ (y ▷ z)
        if not np.array_equal(lhs, rhs):
            out.append("A3: ▷ is not self-distributive")
        return out

    def check_axioms(self) -> None:
        failures = self.axiom_failures()
        if failures:
            raise AxiomViolation("; ".join(failures))

    def to_json(self) -> str:
        doc = {
            "size": self.size,
            "op": self.op.tolist(),
            "inv_op": self.inv_op.tolist(),
            "provenance": None,
        }
        if self.cayley is not None:
            t = self.cayley
            doc["provenance"] = {
                "presentation": t.presentation.name,
                "n": t.n,
                "words": [t.word_text(i) for i in range(t.size)],
            }
        return json.dumps(doc)


def _invert_columns(op: np.ndarray) -> np.ndarray:
    m = op.shape[0]
    inv = np.empty_like(op)
    cols = np.broadcast_to(np.arange(m), (m, m))
    inv[op, cols] = np.arange(m)[:, None]
    return inv


def from_table(op) -> FiniteQuandle:
    op = np.asarray(op, dtype=np.int64)
    q = FiniteQuandle(op, _invert_columns(op))
    q.check_axioms()
    return q


def from_cayley(t: CayleyTable) -> FiniteQuandle:
    """Full operation table from a Cayley graph.

    The element ``x^w`` acts as ``A(w)⁻¹ S_x A(w)`` where ``A(w)`` walks the
    edges spelled by ``w``.
    """
    m = t.size
    everyone = np.arange(m)
    op = np.empty((m, m), dtype=np.int64)
    for e, (base, w) in enumerate(t.words):
        y = t.act(everyone, invert(w))
        y = t.actions[base][y]
        op[:, e] = t.act(y, w)
    q = FiniteQuandle(op, _invert_columns(op), t)
    q.check_axioms()
    return q


def dihedral(q: int) -> FiniteQuandle:
    """``R_q``: ``i ▷ j = 2j - i mod q``."""
    if q < 1:
        raise ValueError("dihedral quandle needs q >= 1")
    i = np.arange(q)
    op = (2 * i[None, :] - i[:, None]) % q
    return FiniteQuandle(op, op.copy())


def trivial(m: int) -> FiniteQuandle:
    op = np.repeat(np.arange(m)[:, None], m, axis=1)
    return FiniteQuandle(op, op.copy())


def components(Q: FiniteQuandle) -> list[list[int]]:
    """Orbits of the inner automorphism group."""
    return _orbits(Q.symmetries(), Q.size)


def is_medial(Q: FiniteQuandle) -> bool:
    """Brute-force check of ``(x ▷ y) ▷ (z ▷ w) = (x ▷ z) ▷ (y ▷ w)``."""
    op = Q.op
    lhs = op[op[:, :, None, None], op[None, None, :, :]]
    rhs = op[op[:, None, :, None], op[None, :, None, :]]
    return bool(np.array_equal(lhs, rhs))


def subquandle_closure(Q: FiniteQuandle, seeds: Sequence[int]) -> list[int]:
    members = np.zeros(Q.size, dtype=bool)
    members[list(seeds)] = True
    while True:
        idx = np.flatnonzero(members)
        grid = np.ix_(idx, idx)
        new = members.copy()
        new[Q.op[grid].ravel()] = True
        new[Q.inv_op[grid].ravel()] = True
        if (new == members).all():
            return idx.tolist()
        members = new


def minimal_generating_set(Q: FiniteQuandle) -> list[int]:
    """Greedy generating set, then pruned until no element can be dropped."""
    m = Q.size
    if m == 0:
        return []
    chosen: list[int] = []
    covered: set[int] = set()
    for x in range(m):
        if x not in covered:
            chosen.append(x)
            covered = set(subquandle_closure(Q, chosen))
            if len(covered) == m:
                break
    for x in list(chosen):
        rest = [y for y in chosen if y != x]
        if rest and len(subquandle_closure(Q, rest)) == m:
            chosen = rest
    return chosen


def profiles(Q: FiniteQuandle) -> list[tuple]:
    """Isomorphism-invariant label of each element: component size and cycle type of ``S_x``."""
    comp_size = np.empty(Q.size, dtype=np.int64)
    for orbit in components(Q):
        comp_size[orbit] = len(orbit)
    out = []
    for x in range(Q.size):
        out.append((int(comp_size[x]), _cycle_type(Q.op[:, x])))
    return out


def _cycle_type(perm: np.ndarray) -> tuple[int, ...]:
    seen = np.zeros(len(perm), dtype=bool)
    lengths = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        k = 0
        u = s
        while not seen[u]:
            seen[u] = True
            u = perm[u]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths))


@njit
def _extend_map(op1, inv1, op2, inv2, gens, imgs, k, phi, used, queue):
    """Extend ``gens[:k] -> imgs[:k]`` over the subquandle the gens generate.

    Returns the size of that subquandle, or -1 if the extension is not a
    well-defined injective homomorphism.
    """
    phi[:] = -1
    used[:] = -1
    tail = 0
    for s in range(k):
        g = gens[s]
        h = imgs[s]
        if phi[g] >= 0:
            if phi[g] != h:
                return -1
            continue
        if used[h] >= 0:
            return -1
        phi[g] = h
        used[h] = g
        queue[tail] = g
        tail += 1
    head = 0
    while head < tail:
        x = queue[head]
        head += 1
        fx = phi[x]
        for s in range(k):
            g = gens[s]
            h = imgs[s]
            for side in range(2):
                if side == 0:
                    y = op1[x, g]
                    fy = op2[fx, h]
                else:
                    y = inv1[x, g]
                    fy = inv2[fx, h]
                if phi[y] < 0:
                    if used[fy] >= 0:
                        return -1
                    phi[y] = fy
                    used[fy] = y
                    queue[tail] = y
                    tail += 1
                elif phi[y] != fy:
                    return -1
    return tail


def _isomorphisms(Q1: FiniteQuandle, Q2: FiniteQuandle) -> Iterator[np.ndarray]:
    m = Q1.size
    if m != Q2.size:
        return
    if m == 0:
        yield np.zeros(0, dtype=np.int64)
        return
    p1, p2 = profiles(Q1), profiles(Q2)
    if Counter(p1) != Counter(p2):
        return
    gens = np.array(minimal_generating_set(Q1), dtype=np.int64)
    cands = [[y for y in range(m) if p2[y] == p1[g]] for g in gens]
    imgs = np.zeros(len(gens), dtype=np.int64)
    phi = np.empty(m, dtype=np.int64)
    used = np.empty(m, dtype=np.int64)
    queue = np.empty(m, dtype=np.int64)
    args = (Q1.op, Q1.inv_op, Q2.op, Q2.inv_op)

    def search(level: int):
        for y in cands[level]:
            imgs[level] = y
            reached = _extend_map(*args, gens, imgs, level + 1, phi, used, queue)
            if reached < 0:
                continue
            if level + 1 == len(gens):
                if reached == m:
                    yield phi.copy()
            else:
                yield from search(level + 1)

    yield from search(0)


def is_homomorphism(Q1: FiniteQuandle, Q2: FiniteQuandle, phi) -> bool:
    phi = np.asarray(phi)
    return bool(np.array_equal(phi[Q1.op], Q2.op[phi[:, None], phi[None, :]]))


def is_isomorphic(Q1: FiniteQuandle, Q2: FiniteQuandle) -> np.ndarray | None:
    """A witness bijection ``phi`` with ``phi[x ▷ y] = phi[x] ▷ phi[y]``, or None."""
    for phi in _isomorphisms(Q1, Q2):
        if len(set(phi.tolist())) == Q1.size and is_homomorphism(Q1, Q2, phi):
            return phi
    return None


def automorphisms(Q: FiniteQuandle) -> list[np.ndarray]:
    """Every automorphism of ``Q``, identity first."""
    found = list(_isomorphisms(Q, Q))
    found.sort(key=lambda p: (not np.array_equal(p, np.arange(Q.size)), p.tolist()))
    return found
