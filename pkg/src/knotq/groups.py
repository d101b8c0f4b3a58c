"""Small permutation groups by full enumeration.

Permutations are integer arrays ``p`` with ``p[i]`` the image of ``i``. A
product ``g*h`` means "apply g, then h", i.e. the array ``h[g]``. Groups here
have at most a few hundred elements, so every group is enumerated outright.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import combinations
from math import gcd
from typing import Iterator, Sequence

import numpy as np

from ._jit import njit
from .enumerator import CapExceeded
from .quandle import FiniteQuandle, automorphisms

DEFAULT_GROUP_CAP = 10080


class GroupCapExceeded(CapExceeded):
    def __init__(self, size: int, cap: int):
        RuntimeError.__init__(self, f"group closure exceeded {cap} elements")
        self.vertices = size
        self.cap = cap


class UnknownGroup(ValueError):
    pass


class AmbiguousIdentification(RuntimeError):
    pass


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    abelian: bool
    center_order: int
    derived_order: int
    order_histogram: tuple[tuple[int, int], ...]


class PermGroup:
    """Permutation group with every element listed; ``elements[0]`` is the identity."""

    def __init__(self, degree: int, generators, elements: np.ndarray):
        self.degree = degree
        self.generators = np.asarray(generators, dtype=np.int64).reshape(-1, degree)
        self.elements = elements
        self._index = {row.tobytes(): i for i, row in enumerate(elements)}
        self._fingerprint = None
        self._mul = None
        self.name = ""

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<PermGroup{label} order={self.order} degree={self.degree}>"

    def index(self, perm) -> int:
        return self._index.get(np.asarray(perm, dtype=np.int64).tobytes(), -1)

    def __contains__(self, perm) -> bool:
        return self.index(perm) >= 0

    def element_set(self) -> set[bytes]:
        return set(self._index)

    def is_abelian(self) -> bool:
        g = self.generators
        return all(np.array_equal(a[b], b[a]) for a in g for b in g)

    def multiplication_table(self) -> np.ndarray:
        """``mul[i, j]`` is the index of ``elements[i] * elements[j]``."""
        if self._mul is None:
            E = self.elements
            keys = _hash_rows(E)
            order = np.argsort(keys)
            sorted_keys = keys[order]
            if len(np.unique(keys)) != len(keys):
                self._mul = np.array([[self.index(E[j][E[i]]) for j in range(len(E))]
                                      for i in range(len(E))], dtype=np.int64)
            else:
                mul = np.empty((len(E), len(E)), dtype=np.int64)
                for i in range(len(E)):
                    prods = E[:, E[i]]  # row j: elements[i] then elements[j]
                    pos = np.searchsorted(sorted_keys, _hash_rows(prods))
                    mul[i] = order[pos]
                self._mul = mul
        return self._mul

    def element_orders(self) -> np.ndarray:
        E = self.elements
        ident = np.arange(self.degree)
        orders = np.zeros(len(E), dtype=np.int64)
        cur = E.copy()
        k = 1
        while (orders == 0).any():
            done = (cur == ident).all(axis=1) & (orders == 0)
            orders[done] = k
            cur = np.take_along_axis(E, cur, axis=1)
            k += 1
        return orders

    def center(self) -> np.ndarray:
        E = self.elements
        mask = np.ones(len(E), dtype=bool)
        for g in self.generators:
            mask &= (E[:, g] == g[E]).all(axis=1)
        return E[mask]

    def derived_subgroup(self) -> PermGroup:
        comms = [commutator(a, b) for a, b in combinations(self.generators, 2)]
        return normal_closure(comms, self)

    def fingerprint(self) -> GroupFingerprint:
        if self._fingerprint is None:
            hist = np.unique(self.element_orders(), return_counts=True)
            self._fingerprint = GroupFingerprint(
                order=self.order,
                abelian=self.is_abelian(),
                center_order=len(self.center()),
                derived_order=self.derived_subgroup().order,
                order_histogram=tuple(zip(hist[0].tolist(), hist[1].tolist())),
            )
        return self._fingerprint


_HASH_WEIGHTS = np.random.default_rng(20240611).integers(1, 2**63, size=4096, dtype=np.uint64)


def _hash_rows(rows: np.ndarray) -> np.ndarray:
    w = _HASH_WEIGHTS[: rows.shape[1]]
    return (rows.astype(np.uint64) * w).sum(axis=1, dtype=np.uint64)


def identity(degree: int) -> np.ndarray:
    return np.arange(degree, dtype=np.int64)


def inverse(p: np.ndarray) -> np.ndarray:
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p))
    return inv


def compose(*perms: np.ndarray) -> np.ndarray:
    """Product applying ``perms`` left to right."""
    return reduce(lambda acc, p: p[acc], perms)


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return compose(inverse(a), inverse(b), a, b)


def closure(gens: Sequence, degree: int | None = None, cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
    """Breadth-first product closure. Element order is deterministic."""
    gens = [np.asarray(g, dtype=np.int64) for g in gens]
    if degree is None:
        if not gens:
            raise ValueError("degree is required when there are no generators")
        degree = len(gens[0])
    if any(len(g) != degree for g in gens):
        raise ValueError("generators must share one degree")
    ident = identity(degree)
    gens = _dedupe([g for g in gens if not np.array_equal(g, ident)])
    elements = [ident]
    seen = {ident.tobytes()}
    frontier = np.array([ident])
    while len(frontier):
        fresh = []
        for g in gens:
            for row in g[frontier]:
                key = row.tobytes()
                if key not in seen:
                    seen.add(key)
                    fresh.append(row)
                    elements.append(row)
                    if len(elements) > cap:
                        raise GroupCapExceeded(len(elements), cap)
        frontier = np.array(fresh).reshape(-1, degree)
    return PermGroup(degree, gens, np.array(elements).reshape(-1, degree))


def _dedupe(perms: list[np.ndarray]) -> list[np.ndarray]:
    seen = set()
    out = []
    for p in perms:
        key = p.tobytes()
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


def normal_closure(seeds: Sequence[np.ndarray], G: PermGroup) -> PermGroup:
    N = closure(seeds, G.degree)
    while True:
        extra = []
        for n in N.generators:
            for g in G.generators:
                c = compose(inverse(g), n, g)
                if c not in N:
                    extra.append(c)
        if not extra:
            return N
        N = closure(list(N.generators) + extra, G.degree)


# ---------------------------------------------------------------------------
# groups attached to a quandle


def inner_group(Q: FiniteQuandle) -> PermGroup:
    """Generated by the point symmetries ``S_x``."""
    return closure(list(Q.symmetries()), Q.size)


def transvection_group(Q: FiniteQuandle) -> PermGroup:
    """Generated by all ``S_x S_y⁻¹``.

    ``S_x S_y⁻¹ = (S_x S_0⁻¹)(S_y S_0⁻¹)⁻¹``, so ``{S_x S_0⁻¹}`` already generates.
    """
    S = Q.symmetries()
    if Q.size == 0:
        return closure([], 0)
    base = inverse(S[0])
    return closure([compose(base, s) for s in S], Q.size)


def _small_generating_set(elements: list[np.ndarray], degree: int) -> list[np.ndarray]:
    gens: list[np.ndarray] = []
    have: set[bytes] = {identity(degree).tobytes()}
    for p in elements:
        if p.tobytes() not in have:
            gens.append(p)
            have = closure(gens, degree).element_set()
            if len(have) == len(elements):
                break
    return gens


def automorphism_group(Q: FiniteQuandle) -> PermGroup:
    """All operation-preserving bijections, with a small generating subset attached."""
    autos = automorphisms(Q)
    gens = _small_generating_set(autos, Q.size)
    return PermGroup(Q.size, gens, np.array(autos).reshape(-1, Q.size))


# ---------------------------------------------------------------------------
# isomorphism


@njit
def _extend_hom(mulG, mulH, gens, imgs, k, phi, used, queue):
    """Extend ``gens[:k] -> imgs[:k]`` from the identity (index 0) over the generated subgroup.

    Returns the subgroup order, or -1 if the map is not an injective homomorphism.
    """
    phi[:] = -1
    used[:] = -1
    phi[0] = 0
    used[0] = 0
    queue[0] = 0
    tail = 1
    head = 0
    while head < tail:
        x = queue[head]
        head += 1
        fx = phi[x]
        for s in range(k):
            y = mulG[x, gens[s]]
            fy = mulH[fx, imgs[s]]
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


def _element_invariants(G: PermGroup) -> list[tuple[int, int]]:
    mul = G.multiplication_table()
    centralizer = (mul == mul.T).sum(axis=1)
    return list(zip(G.element_orders().tolist(), centralizer.tolist()))


def _abstract_generators(G: PermGroup) -> list[int]:
    """Element indices generating ``G``, preferring high-order elements."""
    mul = G.multiplication_table()
    orders = G.element_orders()
    gens: list[int] = []
    inside = np.zeros(G.order, dtype=bool)
    inside[0] = True
    for i in sorted(range(G.order), key=lambda i: (-orders[i], i)):
        if inside[i]:
            continue
        gens.append(i)
        inside[:] = False
        inside[0] = True
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mul[x, g]
                    if not inside[y]:
                        inside[y] = True
                        nxt.append(y)
            frontier = nxt
        if inside.all():
            break
    return gens


def group_isomorphism(G: PermGroup, H: PermGroup) -> np.ndarray | None:
    """Index map ``G.elements -> H.elements`` that is an isomorphism, or None."""
    if G.fingerprint() != H.fingerprint():
        return None
    N = G.order
    if N == 1:
        return np.zeros(1, dtype=np.int64)
    mulG, mulH = G.multiplication_table(), H.multiplication_table()
    gens = np.array(_abstract_generators(G), dtype=np.int64)
    invG, invH = _element_invariants(G), _element_invariants(H)
    cands = [[j for j in range(N) if invH[j] == invG[g]] for g in gens]
    imgs = np.zeros(len(gens), dtype=np.int64)
    phi = np.empty(N, dtype=np.int64)
    used = np.empty(N, dtype=np.int64)
    queue = np.empty(N, dtype=np.int64)

    def search(level: int) -> bool:
        for j in cands[level]:
            imgs[level] = j
            reached = _extend_hom(mulG, mulH, gens, imgs, level + 1, phi, used, queue)
            if reached < 0:
                continue
            if level + 1 == len(gens):
                if reached == N:
                    return True
            elif search(level + 1):
                return True
        return False

    return phi.copy() if search(0) else None


def group_isomorphic(G: PermGroup, H: PermGroup) -> bool:
    return group_isomorphism(G, H) is not None


# ---------------------------------------------------------------------------
# reference groups


def _named(G: PermGroup, name: str) -> PermGroup:
    G.name = name
    return G


def cyclic(n: int) -> PermGroup:
    return _named(closure([np.roll(identity(n), -1)], n), f"Z{n}")


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order ``2n``: the symmetries of an n-gon for ``n >= 3``."""
    if n < 1:
        raise UnknownGroup("dihedral group needs n >= 1")
    if n < 3:
        G = direct_product(*([cyclic(2)] * n))
    else:
        r = identity(n)
        G = closure([np.roll(r, -1), (-r) % n], n)
    return _named(G, f"D{n}")


def symmetric(n: int) -> PermGroup:
    if not 1 <= n <= 5:
        raise UnknownGroup("symmetric groups are provided for n <= 5")
    gens = [np.roll(identity(n), -1)]
    if n > 1:
        t = identity(n)
        t[[0, 1]] = [1, 0]
        gens.append(t)
    return _named(closure(gens, n), f"S{n}")


def alternating(n: int) -> PermGroup:
    if not 1 <= n <= 5:
        raise UnknownGroup("alternating groups are provided for n <= 5")
    gens = []
    for k in range(2, n):
        c = identity(n)
        c[[0, 1, k]] = [1, k, 0]
        gens.append(c)
    return _named(closure(gens, n), f"A{n}")


def holomorph(n: int) -> PermGroup:
    """Affine maps ``x -> a x + b`` on ``Z_n`` with ``a`` a unit: ``Z_n ⋊ Z_n*``."""
    x = identity(n)
    gens = [(x + 1) % n] + [(a * x) % n for a in range(2, n) if gcd(a, n) == 1]
    return _named(closure(gens, n), f"Hol(Z{n})")


def direct_product(*groups: PermGroup) -> PermGroup:
    """Product acting on the disjoint union of the factors' points."""
    degree = sum(G.degree for G in groups)
    gens = []
    offset = 0
    for G in groups:
        for g in G.generators:
            p = identity(degree)
            p[offset:offset + G.degree] = g + offset
            gens.append(p)
        offset += G.degree
    return _named(closure(gens, degree), " x ".join(G.name for G in groups))


_FACTOR = re.compile(r"^(Z|D|S|A)(\d+)$|^Hol\(Z(\d+)\)$")


def reference_group(name: str) -> PermGroup:
    """Build a group from a name such as ``"Z2 x S4"``, ``"D5"`` or ``"Hol(Z10)"``."""
    factors = []
    for part in name.split(" x "):
        m = _FACTOR.match(part.strip())
        if not m:
            raise UnknownGroup(f"unknown group {part.strip()!r}")
        if m.group(3):
            factors.append(holomorph(int(m.group(3))))
            continue
        kind, k = m.group(1), int(m.group(2))
        factors.append({"Z": cyclic, "D": dihedral, "S": symmetric, "A": alternating}[kind](k))
    G = factors[0] if len(factors) == 1 else direct_product(*factors)
    return _named(G, name.strip())


# ---------------------------------------------------------------------------
# identification

FIXED_STRUCTURES = ("Z2 x Z2", "A4", "S4", "A5", "S5", "Z2 x A4", "Z2 x S4", "Z2 x S5", "Z2 x Z2 x S4")


def _totient(n: int) -> int:
    return sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)


def _family_names(order: int) -> Iterator[str]:
    yield f"Z{order}"
    if order % 2 == 0 and order >= 6:
        yield f"D{order // 2}"
    for k in range(3, order + 1):
        size = k * _totient(k)
        if size == order:
            yield f"Hol(Z{k})"
        if 2 * size == order:
            yield f"Z2 x Hol(Z{k})"


_FIXED_ORDERS = {"Z2 x Z2": 4, "A4": 12, "S4": 24, "A5": 60, "S5": 120,
                 "Z2 x A4": 24, "Z2 x S4": 48, "Z2 x S5": 240, "Z2 x Z2 x S4": 96}


@lru_cache(maxsize=None)
def catalog_for_order(order: int) -> tuple[tuple[str, PermGroup], ...]:
    """Catalog entries of a given order, isomorphic entries merged under ``" = "``-joined names."""
    names = [n for n in FIXED_STRUCTURES if _FIXED_ORDERS[n] == order] + list(_family_names(order))
    merged: list[tuple[list[str], PermGroup]] = []
    for name in names:
        G = reference_group(name)
        for aliases, H in merged:
            if group_isomorphic(G, H):
                aliases.append(name)
                break
        else:
            merged.append(([name], G))
    return tuple((" = ".join(aliases), G) for aliases, G in merged)


def identify(G: PermGroup, catalog: Sequence[tuple[str, PermGroup]] | None = None) -> str:
    """Name of the unique catalog group isomorphic to ``G``, or ``"unrecognized"``."""
    if catalog is None:
        catalog = catalog_for_order(G.order)
    hits = [name for name, H in catalog if H.order == G.order and group_isomorphic(G, H)]
    if len(hits) > 1:
        raise AmbiguousIdentification(f"{G!r} matches several catalog entries: {hits}")
    return hits[0] if hits else "unrecognized"
