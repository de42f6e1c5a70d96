"""Numerical semigroups: membership, gaps, Apery sets, pseudo-Frobenius data,
oversemigroups and gluing."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from functools import cached_property, reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import (
    AlphaEven,
    AlphaIsGenerator,
    AlphaNotInH1,
    EmptyInput,
    GcdNotOne,
    NotAMember,
    TooManyGaps,
)
from .intsets import CofiniteSet

DEFAULT_GAP_LIMIT = 24


def _apery(gens: Sequence[int], m: int) -> list[int]:
    """Smallest element of <gens> in each residue class mod m (Dijkstra on Z/m)."""
    inf = float("inf")
    ap = [inf] * m
    ap[0] = 0
    done = [False] * m
    for _ in range(m):
        r, best = -1, inf
        for i in range(m):
            if not done[i] and ap[i] < best:
                r, best = i, ap[i]
        if r < 0:
            break
        done[r] = True
        for g in gens:
            j = (r + g) % m
            if best + g < ap[j]:
                ap[j] = best + g
    return ap  # type: ignore[return-value]


class NumericalSemigroup:
    """A co-finite submonoid of N, stored by its membership bitset below the conductor.

    Construct with :func:`make_semigroup` or :meth:`from_gaps`.  Instances are
    immutable; equality and hashing go through the set of gaps.
    """

    __slots__ = ("_set", "generators", "__dict__")

    def __init__(self, members: CofiniteSet):
        if members.lo != 0:
            raise ValueError("a numerical semigroup must contain 0 as its least element")
        self._set = members
        self.generators = self._minimal_generators()

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> "NumericalSemigroup":
        gaps = sorted(set(gaps))
        if any(g <= 0 for g in gaps):
            raise ValueError("gaps must be positive integers")
        cond = gaps[-1] + 1 if gaps else 0
        gapset = set(gaps)
        members = [z for z in range(cond) if z not in gapset]
        for x in members:
            for y in members:
                if x + y < cond and (x + y) in gapset:
                    raise ValueError(f"complement of {gaps} is not closed under addition")
        return cls(CofiniteSet.from_elements(members, cond))

    # -- basic data ---------------------------------------------------------

    @property
    def members(self) -> CofiniteSet:
        return self._set

    @property
    def conductor(self) -> int:
        return self._set.cond

    @property
    def frobenius(self) -> int:
        return self._set.cond - 1

    @cached_property
    def gaps(self) -> frozenset[int]:
        return frozenset(z for z in range(self.conductor) if z not in self._set)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dim(self) -> int:
        return len(self.generators)

    def is_whole(self) -> bool:
        return self.conductor == 0

    def __contains__(self, z: int) -> bool:
        return z in self._set

    def elements_below(self, bound: int) -> list[int]:
        return self._set.elements_below(bound)

    def _minimal_generators(self) -> tuple[int, ...]:
        return tuple(_mingens(self._set))

    @cached_property
    def pseudo_frobenius(self) -> tuple[int, ...]:
        return tuple(
            g for g in sorted(self.gaps) if all((g + a) in self._set for a in self.generators)
        )

    @property
    def type(self) -> int:
        # H = N is regular; its type is fixed to 1 by convention
        return max(1, len(self.pseudo_frobenius))

    @property
    def symmetric(self) -> bool:
        return self.type == 1

    def apery(self, m: int | None = None) -> list[int]:
        return apery_set(self, self.multiplicity if m is None else m)

    def issubset(self, other: "NumericalSemigroup") -> bool:
        return self._set.issubset(other._set)

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NumericalSemigroup) and self._set == other._set

    def __hash__(self) -> int:
        return hash(self._set)

    def __repr__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"

    def to_json(self) -> dict:
        return {"generators": list(self.generators)}

    @classmethod
    def from_json(cls, data: dict) -> "NumericalSemigroup":
        return make_semigroup(data["generators"])


@dataclass(frozen=True)
class SemigroupInvariants:
    frobenius: int
    conductor: int
    genus: int
    multiplicity: int
    embedding_dim: int
    pseudo_frobenius: tuple[int, ...]
    type: int
    symmetric: bool

    def to_json(self) -> dict:
        d = asdict(self)
        d["pseudo_frobenius"] = list(self.pseudo_frobenius)
        return d

    @classmethod
    def from_json(cls, data: dict) -> "SemigroupInvariants":
        data = dict(data)
        data["pseudo_frobenius"] = tuple(data["pseudo_frobenius"])
        return cls(**data)


def parse_generators(text: str) -> list[int]:
    """Parse ``"5,7,9,13"`` (or a JSON object with a generators key)."""
    text = text.strip()
    if text.startswith("{"):
        return [int(x) for x in json.loads(text)["generators"]]
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def make_semigroup(gens: Iterable[int]) -> NumericalSemigroup:
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise EmptyInput("at least one generator is required")
    if gens[0] <= 0:
        raise ValueError("generators must be positive integers")
    if reduce(gcd, gens) != 1:
        raise GcdNotOne(f"gcd{tuple(gens)} != 1")
    m = gens[0]
    ap = _apery(gens, m)
    cond = max(ap) - m + 1
    members = [z for z in range(cond) if z >= ap[z % m]]
    return NumericalSemigroup(CofiniteSet.from_elements(members, max(cond, 0)))


def contains(H: NumericalSemigroup, z: int) -> bool:
    return z in H


def invariants(H: NumericalSemigroup) -> SemigroupInvariants:
    return SemigroupInvariants(
        frobenius=H.frobenius,
        conductor=H.conductor,
        genus=H.genus,
        multiplicity=H.multiplicity,
        embedding_dim=H.embedding_dim,
        pseudo_frobenius=H.pseudo_frobenius,
        type=H.type,
        symmetric=H.symmetric,
    )


def apery_set(H: NumericalSemigroup, m: int) -> list[int]:
    """Least element of H in each residue class mod ``m``, indexed by residue."""
    if m <= 0 or m not in H:
        raise NotAMember(f"{m} is not a positive element of {H!r}")
    out = [0] * m
    for r in range(1, m):
        z = r
        while z not in H:
            z += m
        out[r] = z
    return out


def _special_gaps(members: CofiniteSet, gens: Sequence[int]) -> list[int]:
    """Gaps x such that members | {x} is again a semigroup."""
    return [
        x
        for x in range(1, members.cond)
        if x not in members
        and (2 * x) in members
        and all((x + a) in members for a in gens)
    ]


def _mingens(members: CofiniteSet) -> list[int]:
    if members.cond == 0:
        return [1]
    m = next(z for z in range(1, members.cond + 1) if z in members)
    gens = [m]
    for h in range(m + 1, members.cond + m):
        if h in members and not any((h - a) in members for a in gens):
            gens.append(h)
    return gens


def oversemigroups(H: NumericalSemigroup, limit: int = DEFAULT_GAP_LIMIT) -> list[NumericalSemigroup]:
    """Every numerical semigroup containing H (H and N included).

    Walks a spanning tree of the oversemigroup lattice: the parent of S != H is
    S minus its largest minimal generator lying outside H.  Each oversemigroup
    is therefore produced exactly once.
    """
    if H.genus > limit:
        raise TooManyGaps(f"genus {H.genus} exceeds enumeration limit {limit}")
    base = H.members
    out = [H]
    stack = [(base, list(H.generators))]
    while stack:
        S, gens = stack.pop()
        for x in _special_gaps(S, gens):
            child = _with_element(S, x)
            cgens = _mingens(child)
            outside = [g for g in cgens if g not in base]
            if max(outside) != x:
                continue
            out.append(NumericalSemigroup(child))
            stack.append((child, cgens))
    return out


def _with_element(S: CofiniteSet, x: int) -> CofiniteSet:
    elems = S.finite_part() + [x]
    return CofiniteSet.from_elements(elems, S.cond)


def glue(H1: NumericalSemigroup, alpha: int) -> NumericalSemigroup:
    """The gluing <2a_1, ..., 2a_l, alpha> of H1 with N."""
    if alpha % 2 == 0:
        raise AlphaEven(f"alpha = {alpha} must be odd")
    if alpha not in H1 or alpha <= 0:
        raise AlphaNotInH1(f"alpha = {alpha} is not a positive element of {H1!r}")
    if alpha in H1.generators:
        raise AlphaIsGenerator(f"alpha = {alpha} is a minimal generator of {H1!r}")
    return make_semigroup([2 * a for a in H1.generators] + [alpha])
