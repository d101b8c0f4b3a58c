"""Free-group words used as exponents of quandle elements.

An element of a presented quandle is written ``x^w``: a generator ``x`` acted
on by the letters of ``w`` from left to right. Letters are ``(gen, sign)``
pairs where ``sign == -1`` is the barred letter (the inverse operation).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Letter = tuple[int, int]


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for gen, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign}")
        if out and out[-1] == (gen, -sign):
            out.pop()
        else:
            out.append((gen, sign))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word. Construction always reduces."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _free_reduce(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __add__(self, other: Word) -> Word:
        return Word(self.letters + tuple(other))

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    @classmethod
    def of(cls, *gens: int) -> Word:
        """Positive word from generator indices; a negative index -k-1 is k barred."""
        return cls(tuple((g, 1) if g >= 0 else (-g - 1, -1) for g in gens))

    def inverse(self) -> Word:
        return invert(self)


def reduce(letters: Iterable[Letter]) -> Word:
    return Word(tuple(letters))


def invert(w: Word) -> Word:
    return Word(tuple((g, -s) for g, s in reversed(w.letters)))


def reassociate(u: Word, b: int, v: Word, sign: int = 1) -> Word:
    """Exponent of ``(a^u) ▷ (b^v)`` (or ``▷⁻¹`` when ``sign`` is -1) as ``a^{u v̄ b v}``."""
    return Word(u.letters + invert(v).letters + ((b, sign),) + v.letters)


def cyclic_reduce(w: Word) -> Word:
    """Strip conjugating letter pairs from both ends.

    Only valid for relations quantified over every element: ``y^{c̄uc} = y`` for
    all ``y`` holds iff ``z^u = z`` for all ``z``.
    """
    letters = Word(w.letters).letters
    lo, hi = 0, len(letters)
    while hi - lo >= 2:
        g0, s0 = letters[lo]
        g1, s1 = letters[hi - 1]
        if g0 == g1 and s0 == -s1:
            lo += 1
            hi -= 1
        else:
            break
    return Word(letters[lo:hi])


def _involutory_reduce(gens: Sequence[int]) -> list[int]:
    out: list[int] = []
    for g in gens:
        if out and out[-1] == g:
            out.pop()
        else:
            out.append(g)
    lo, hi = 0, len(out)
    while hi - lo >= 2 and out[lo] == out[hi - 1]:
        lo += 1
        hi -= 1
    return out[lo:hi]


def normalize_mod_n(w: Word, n: int | None) -> Word:
    """Simplify a universally quantified relation word in an ``n``-quandle.

    For ``n == 2`` every generator acts as an involution, so signs are dropped
    and ``x x`` cancels (cyclically as well). Other ``n`` leave ``w`` alone.
    """
    if n is not None and n < 2:
        raise ValueError("n must be at least 2")
    if n != 2:
        return w
    return Word(tuple((g, 1) for g in _involutory_reduce([g for g, _ in w.letters])))


def _default_names(w: Word) -> list[str]:
    top = max((g for g, _ in w.letters), default=-1)
    return [chr(ord("a") + i) if i < 26 else f"x{i}" for i in range(top + 1)]


def format_word(w: Word, names: Sequence[str] | None = None) -> str:
    """Render as whitespace-separated tokens, ``~x`` for a barred letter."""
    names = _default_names(w) if names is None else names
    return " ".join(("" if s > 0 else "~") + names[g] for g, s in w.letters)


def parse_word(text: str, names: Sequence[str]) -> Word:
    index = {name: i for i, name in enumerate(names)}
    letters = []
    for token in text.split():
        sign = 1
        if token.startswith("~"):
            sign, token = -1, token[1:]
        if token not in index:
            raise KeyError(token)
        letters.append((index[token], sign))
    return Word(tuple(letters))
