"""Cofinite-above integer sets stored as Python int bitsets.

A :class:`CofiniteSet` ``X`` is a non-empty subset of Z with a least element
``lo`` and a threshold ``cond`` such that every integer ``>= cond`` lies in X.
The finite part ``X & [lo, cond)`` is stored as bits of an int, bit ``i``
standing for ``lo + i``.  Numerical semigroups and monomial fractional ideals
of k[[H]] are both of this shape.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def _ones(n: int) -> int:
    return (1 << n) - 1 if n > 0 else 0


class CofiniteSet:
    __slots__ = ("lo", "cond", "mask")

    def __init__(self, lo: int, cond: int, mask: int):
        # callers go through _normalized(); this trusts its input
        self.lo = lo
        self.cond = cond
        self.mask = mask

    # -- construction -------------------------------------------------------

    @staticmethod
    def _normalized(base: int, top: int, bits: int) -> "CofiniteSet":
        """Build from bits over the window [base, top) plus all of [top, inf)."""
        width = top - base
        bits &= _ones(width)
        if bits == 0:
            return CofiniteSet(top, top, 0)
        low = (bits & -bits).bit_length() - 1
        lo = base + low
        bits >>= low
        width -= low
        missing = ~bits & _ones(width)
        cond = lo if missing == 0 else lo + missing.bit_length()
        return CofiniteSet(lo, cond, bits & _ones(cond - lo))

    @classmethod
    def from_elements(cls, elements: Iterable[int], cond: int) -> "CofiniteSet":
        """The set ``elements | [cond, inf)``; elements >= cond are ignored."""
        elems = [e for e in elements if e < cond]
        base = min(elems, default=cond)
        bits = 0
        for e in elems:
            bits |= 1 << (e - base)
        return cls._normalized(base, cond, bits)

    @classmethod
    def interval(cls, start: int) -> "CofiniteSet":
        return CofiniteSet(start, start, 0)

    # -- queries ------------------------------------------------------------

    def __contains__(self, z: int) -> bool:
        if z >= self.cond:
            return True
        if z < self.lo:
            return False
        return bool((self.mask >> (z - self.lo)) & 1)

    def window(self, base: int, top: int) -> int:
        """Bits of ``self & [base, top)``, bit i standing for base + i."""
        if top <= base:
            return 0
        width = top - base
        ones_from_cond = _ones(top - max(self.cond, base)) << max(self.cond - base, 0)
        if self.lo >= base:
            finite = self.mask << (self.lo - base)
        else:
            finite = self.mask >> (base - self.lo)
        return (finite | ones_from_cond) & _ones(width)

    def elements_below(self, bound: int) -> list[int]:
        return [z for z in range(self.lo, bound) if z in self]

    def finite_part(self) -> list[int]:
        return self.elements_below(self.cond)

    def __iter__(self) -> Iterator[int]:
        raise TypeError("CofiniteSet is infinite; use elements_below()")

    def key(self) -> tuple[int, int, int]:
        return (self.lo, self.cond, self.mask)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CofiniteSet) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"CofiniteSet({self.finite_part()} + [{self.cond}, inf))"

    # -- algebra ------------------------------------------------------------

    def shift(self, s: int) -> "CofiniteSet":
        return CofiniteSet(self.lo + s, self.cond + s, self.mask)

    def union(self, other: "CofiniteSet") -> "CofiniteSet":
        base = min(self.lo, other.lo)
        top = max(self.cond, other.cond)
        return self._normalized(base, top, self.window(base, top) | other.window(base, top))

    def intersection(self, other: "CofiniteSet") -> "CofiniteSet":
        base = min(self.lo, other.lo)
        top = max(self.cond, other.cond)
        return self._normalized(base, top, self.window(base, top) & other.window(base, top))

    def issubset(self, other: "CofiniteSet") -> bool:
        if self.lo < other.lo:
            return False
        base = self.lo
        top = max(self.cond, other.cond)
        mine = self.window(base, top)
        return mine & ~other.window(base, top) == 0

    def count_difference(self, other: "CofiniteSet") -> int:
        """|self minus other|, finite because ``other`` is cofinite."""
        base = min(self.lo, other.lo)
        top = max(self.cond, other.cond)
        return bin(self.window(base, top) & ~other.window(base, top)).count("1")


def union_all(sets: Iterable[CofiniteSet]) -> CofiniteSet:
    sets = list(sets)
    if not sets:
        raise ValueError("union of no sets")
    base = min(s.lo for s in sets)
    top = max(s.cond for s in sets)
    bits = 0
    for s in sets:
        bits |= s.window(base, top)
    return CofiniteSet._normalized(base, top, bits)


def intersect_all(sets: Iterable[CofiniteSet]) -> CofiniteSet:
    sets = list(sets)
    if not sets:
        raise ValueError("intersection of no sets")
    base = min(s.lo for s in sets)
    top = max(s.cond for s in sets)
    bits = _ones(top - base)
    for s in sets:
        bits &= s.window(base, top)
    return CofiniteSet._normalized(base, top, bits)
