"""Monomial fractional ideals of k[[H]] (relative ideals of a numerical semigroup).

A relative ideal E of H is a set of integers with E + H contained in E and
a + E contained in H for some a in H.  Every such set is cofinite above and
has finitely many minimal generators, so a :class:`CofiniteSet` stores it
exactly.  Lengths of monomial modules are counts of integers:
l(E/F) = |E minus F| whenever F is contained in E.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import BaseMismatch, NotContained, NotIntegral
from .intsets import CofiniteSet, intersect_all, union_all
from .semigroup import NumericalSemigroup, make_semigroup


class RelativeIdeal:
    __slots__ = ("base", "members", "_gens")

    def __init__(self, base: NumericalSemigroup, members: CofiniteSet):
        self.base = base
        self.members = members
        self._gens: tuple[int, ...] | None = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def generated_by(cls, base: NumericalSemigroup, gens: Iterable[int]) -> "RelativeIdeal":
        gens = list(gens)
        if not gens:
            raise ValueError("a relative ideal needs at least one generator")
        H = base.members
        return cls(base, union_all(H.shift(g) for g in gens))

    @classmethod
    def from_semigroup(cls, base: NumericalSemigroup, T: NumericalSemigroup) -> "RelativeIdeal":
        """An oversemigroup T of H viewed as a fractional ideal of k[[H]]."""
        if not base.issubset(T):
            raise NotContained(f"{base!r} is not contained in {T!r}")
        return cls(base, T.members)

    @classmethod
    def unit(cls, base: NumericalSemigroup) -> "RelativeIdeal":
        return cls(base, base.members)

    @classmethod
    def maximal(cls, base: NumericalSemigroup) -> "RelativeIdeal":
        return cls.generated_by(base, base.generators)

    # -- data ---------------------------------------------------------------

    @property
    def gens(self) -> tuple[int, ...]:
        """Minimal generators: elements of E outside (H+) + E."""
        if self._gens is None:
            E = self.members
            hi = E.cond + self.base.multiplicity
            cand = E.elements_below(hi)
            self._gens = tuple(
                z for z in cand if not any((z - a) in E for a in self.base.generators)
            )
        return self._gens

    @property
    def mu(self) -> int:
        return len(self.gens)

    @property
    def min(self) -> int:
        return self.members.lo

    @property
    def conductor(self) -> int:
        return self.members.cond

    def __contains__(self, z: int) -> bool:
        return z in self.members

    def elements_below(self, bound: int) -> list[int]:
        return self.members.elements_below(bound)

    def is_integral(self) -> bool:
        return self.members.issubset(self.base.members)

    def issubset(self, other: "RelativeIdeal") -> bool:
        _same_base(self, other)
        return self.members.issubset(other.members)

    def shift(self, s: int) -> "RelativeIdeal":
        return RelativeIdeal(self.base, self.members.shift(s))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RelativeIdeal)
            and self.base == other.base
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((self.base, self.members))

    def __repr__(self) -> str:
        return f"RelativeIdeal({self.base!r}; gens={list(self.gens)})"

    def __mul__(self, other: "RelativeIdeal") -> "RelativeIdeal":
        return product(self, other)

    def __add__(self, other: "RelativeIdeal") -> "RelativeIdeal":
        _same_base(self, other)
        return RelativeIdeal(self.base, self.members.union(other.members))

    def power(self, n: int) -> "RelativeIdeal":
        if n < 0:
            raise ValueError("negative power")
        out = RelativeIdeal.unit(self.base)
        for _ in range(n):
            out = product(out, self)
        return out

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "gens": list(self.gens)}

    @classmethod
    def from_json(cls, data: dict) -> "RelativeIdeal":
        return cls.generated_by(make_semigroup(data["base"]["generators"]), data["gens"])


def _same_base(E: RelativeIdeal, F: RelativeIdeal) -> None:
    if E.base != F.base:
        raise BaseMismatch(f"{E.base!r} != {F.base!r}")


def ideal(H: NumericalSemigroup, gens: Iterable[int]) -> RelativeIdeal:
    return RelativeIdeal.generated_by(H, gens)


def product(E: RelativeIdeal, F: RelativeIdeal) -> RelativeIdeal:
    _same_base(E, F)
    return RelativeIdeal(E.base, union_all(F.members.shift(e) for e in E.gens))


def colon(E: RelativeIdeal, F: RelativeIdeal) -> RelativeIdeal:
    """E : F = {z : z + F contained in E}."""
    _same_base(E, F)
    return RelativeIdeal(E.base, intersect_all(E.members.shift(-g) for g in F.gens))


def length_between(E: RelativeIdeal, F: RelativeIdeal) -> int:
    """l(E/F) for F contained in E."""
    _same_base(E, F)
    if not F.members.issubset(E.members):
        raise NotContained(f"{F!r} is not contained in {E!r}")
    return E.members.count_difference(F.members)


def minimal_generators_over(H: NumericalSemigroup, E: RelativeIdeal) -> int:
    if E.base != H:
        raise BaseMismatch(f"{E.base!r} != {H!r}")
    return E.mu


def canonical_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    """K = sum of R t^(f-c) over c in PF(H); K = R when H is symmetric or N."""
    if H.is_whole():
        return RelativeIdeal.unit(H)
    f = H.frobenius
    K = RelativeIdeal.generated_by(H, [f - c for c in H.pseudo_frobenius])
    # independent route: K = {z : f - z not in H}
    alt = CofiniteSet.from_elements(
        [z for z in range(0, f + 1) if (f - z) not in H], f + 1
    )
    if K.members != alt:
        raise AssertionError(f"canonical ideal routes disagree for {H!r}")
    return K


def integral_shift(H: NumericalSemigroup, E: RelativeIdeal | None = None) -> int:
    """Least a in H, a > 0, with a + E inside H (E defaults to K)."""
    if E is None:
        E = canonical_ideal(H)
    for a in H.elements_below(H.conductor + E.conductor + H.multiplicity + 1):
        if a > 0 and E.members.shift(a).issubset(H.members):
            return a
    raise AssertionError("unreachable: every fractional ideal has an integral shift")


def integral_shifts(H: NumericalSemigroup, count: int, E: RelativeIdeal | None = None) -> list[int]:
    """The first ``count`` admissible shifts a (a in H, a > 0, a + E inside H)."""
    if E is None:
        E = canonical_ideal(H)
    out = []
    z = 1
    while len(out) < count:
        if z in H and E.members.shift(z).issubset(H.members):
            out.append(z)
        z += 1
    return out


@dataclass(frozen=True)
class BlowupResult:
    ring: NumericalSemigroup
    stabilization_exponent: int
    conductor_ideal: RelativeIdeal

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "stabilization_exponent": self.stabilization_exponent,
            "conductor_ideal": list(self.conductor_ideal.gens),
        }


def blowup(H: NumericalSemigroup) -> BlowupResult:
    """S = R[K] = K^n for the first n with K^(n+1) = K^n, and c = R : S."""
    K = canonical_ideal(H)
    P, n = K, 1
    while True:
        nxt = product(P, K)
        if nxt == P:
            break
        P, n = nxt, n + 1
    S = NumericalSemigroup(P.members)
    c = colon(RelativeIdeal.unit(H), P)
    return BlowupResult(S, n, c)


def maximal_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    return RelativeIdeal.maximal(H)


def require_integral(I: RelativeIdeal) -> None:
    if not I.is_integral():
        raise NotIntegral(f"{I!r} is not contained in R")
