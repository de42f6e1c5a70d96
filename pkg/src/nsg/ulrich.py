"""Ulrich ideals of numerical semigroup rings.

A monomial ideal I with least valuation a is Ulrich when I != (t^a),
I^2 = t^a I and I/I^2 is free over R/I.  Freeness is the length identity
l(I/I^2) = mu(I) l(R/I), because (R/I)^mu maps onto I/I^2.

Search bound: for a monomial Ulrich ideal, a = mu l(R/I) and every element of
H below a lies outside I, so a <= 2 g(H).  Minimal generators other than a
are below a + c(H).  Hence every monomial Ulrich ideal has generators at most
2 g(H) + c(H) - 1.
"""

from __future__ import annotations

import warnings
from dataclasses import asdict, dataclass
from typing import Optional, Union

from .errors import BoundTooSmallWarning, HypothesisFailed, NotGorenstein, PreconditionFailed
from .ideals import RelativeIdeal, colon, length_between, product
from .semigroup import NumericalSemigroup, apery_set, glue, oversemigroups


@dataclass(frozen=True)
class UlrichVerdict:
    is_ulrich: bool
    reduction_valuation: int
    mu: int
    len_R_mod_I: int
    len_I_mod_I2: int
    free_check: bool
    witness_c: Optional[Union[int, str]] = None
    generators: tuple = ()

    def to_json(self) -> dict:
        d = asdict(self)
        d["generators"] = list(self.generators)
        return d

    @classmethod
    def from_json(cls, data: dict) -> "UlrichVerdict":
        data = dict(data)
        data["generators"] = tuple(data.get("generators", ()))
        return cls(**data)


def is_ulrich_monomial(H: NumericalSemigroup, vals) -> UlrichVerdict:
    vals = sorted(set(vals))
    if not vals or any(v <= 0 or v not in H for v in vals):
        raise ValueError(f"valuations {vals} must be positive elements of {H!r}")
    I = RelativeIdeal.generated_by(H, vals)
    R = RelativeIdeal.unit(H)
    a = I.min
    I2 = product(I, I)
    n = I.mu
    lRI = length_between(R, I)
    lII2 = length_between(I, I2)
    free = lII2 == n * lRI
    eq = I2 == I.shift(a)
    witness = None
    if n == 2:
        b = I.gens[1]
        c = 2 * b - a
        witness = c if c in I else None
    return UlrichVerdict(
        is_ulrich=n >= 2 and eq and free,
        reduction_valuation=a,
        mu=n,
        len_R_mod_I=lRI,
        len_I_mod_I2=lII2,
        free_check=free,
        witness_c=witness,
        generators=I.gens,
    )


def completeness_bound(H: NumericalSemigroup) -> int:
    """Generator valuation bound past which no monomial Ulrich ideal exists."""
    return max(2 * H.genus + H.conductor - 1, 0)


def default_bound(H: NumericalSemigroup) -> int:
    return 2 * H.conductor + 2 * H.multiplicity


def enumerate_monomial_ulrich(
    H: NumericalSemigroup, bound: int | None = None, max_mu: int | None = None
) -> list[UlrichVerdict]:
    """All monomial Ulrich ideals whose minimal generators are <= bound.

    Sorted by generator tuple.  The result is complete (every monomial Ulrich
    ideal) when bound >= completeness_bound(H).
    """
    if bound is None:
        bound = default_bound(H)
    if bound < 2 * H.conductor and not enumeration_is_complete(H, bound):
        warnings.warn(f"bound {bound} < 2 c(H) = {2 * H.conductor}", BoundTooSmallWarning, stacklevel=2)
    out = []
    for a in H.elements_below(min(bound, 2 * H.genus) + 1):
        if a == 0:
            continue
        for gens in _ulrich_gensets(H, a, bound, max_mu):
            v = is_ulrich_monomial(H, gens)
            assert v.is_ulrich, gens
            out.append(v)
    out.sort(key=lambda v: v.generators)
    return out


def enumeration_is_complete(H: NumericalSemigroup, bound: int) -> bool:
    return bound >= completeness_bound(H)


def _ulrich_gensets(H: NumericalSemigroup, a: int, bound: int, max_mu: int | None):
    """Generator tuples (a, x_1 < ... < x_k) of Ulrich ideals with least valuation a."""
    # minimal generators besides a lie in Ap(H, a) and above a
    cands = sorted(w for w in apery_set(H, a) if a < w <= bound)
    Hm = H.members
    c = H.conductor
    # members of H in [0, a + c) for the length count
    window = [h for h in H.elements_below(a + c)]
    results = []

    def members_of(gens):
        return RelativeIdeal.generated_by(H, gens).members

    def dfs(start: int, gens: list[int], Imem):
        k = len(gens)
        nxt = cands[start] if start < len(cands) else a + c
        # elements of H below nxt that are outside I stay outside
        fixed = sum(1 for h in window if h < nxt and h not in Imem)
        if fixed * k > a:
            return
        # pairwise condition x + y - a in I, decided below nxt
        for i in range(k):
            for j in range(i, k):
                z = gens[i] + gens[j] - a
                if z not in Hm:
                    return
                if z < nxt and z not in Imem:
                    return
        if k >= 2:
            colen = sum(1 for h in window if h not in Imem)
            if colen * k == a and all(gens[i] + gens[j] - a in Imem for i in range(k) for j in range(i, k)):
                results.append(tuple(gens))
        if max_mu is not None and k >= max_mu:
            return
        for idx in range(start, len(cands)):
            x = cands[idx]
            if x in Imem:
                continue
            newgens = gens + [x]
            dfs(idx + 1, newgens, members_of(newgens))

    dfs(0, [a], Hm.shift(a))
    return results


# -- Gorenstein rings ----------------------------------------------------------


def gorenstein_overring_ulrich(H: NumericalSemigroup) -> list[tuple[NumericalSemigroup, tuple[int, ...]]]:
    """Pairs (A, R:A) for Gorenstein overrings A with mu_R(A) = 2.

    Checks that the images are exactly the two-generated monomial Ulrich ideals
    and that I:I gives back A.
    """
    if not H.symmetric:
        raise NotGorenstein(f"{H!r} is not symmetric")
    R = RelativeIdeal.unit(H)
    out = []
    for T in oversemigroups(H):
        if T == H or not T.symmetric:
            continue
        A = RelativeIdeal.from_semigroup(H, T)
        if A.mu != 2:
            continue
        I = colon(R, A)
        if colon(I, I).members != T.members:
            raise AssertionError(f"I:I != A for A = {T!r}")
        out.append((T, I.gens))
    out.sort(key=lambda p: p[1])
    found = {
        v.generators
        for v in enumerate_monomial_ulrich(H, completeness_bound(H) + 1, max_mu=2)
        if v.mu == 2
    }
    if {g for _, g in out} != found:
        raise AssertionError(f"overring correspondence failed for {H!r}")
    return out


# -- gluing --------------------------------------------------------------------


def gluing_ulrich_set(H1: NumericalSemigroup, alpha: int) -> list[tuple[int, int]]:
    """{(2m, alpha) : 0 < m in H1, alpha - m in H1, 2(alpha - 2m) in H} for H = glue(H1, alpha)."""
    from .classify import sally_rank

    H = glue(H1, alpha)
    if H1.symmetric or sally_rank(H1) != 1:
        raise HypothesisFailed(f"{H1!r} must be AGL and not Gorenstein")
    out = [
        (2 * m, alpha)
        for m in H1.elements_below(alpha + 1)
        if m > 0 and (alpha - m) in H1 and 2 * (alpha - 2 * m) in H
    ]
    enum = {
        v.generators
        for v in enumerate_monomial_ulrich(H, completeness_bound(H), max_mu=2)
        if v.mu == 2
    }
    if set(out) != enum:
        raise AssertionError(f"gluing formula disagrees with enumeration: {out} vs {sorted(enum)}")
    return out


# -- 2-AGL consequences --------------------------------------------------------


def socle_count(H: NumericalSemigroup, I: RelativeIdeal) -> int:
    """r(R/I) = |{h in H minus I : h + a_j in I for all j}|."""
    return sum(
        1
        for h in H.elements_below(I.conductor)
        if h not in I and all((h + a) in I for a in H.generators)
    )


@dataclass(frozen=True)
class UlrichConsequences:
    mu: int
    socle_type: int
    type_identity: bool
    kr_free: Optional[bool]
    sum_with_c_is_m: Optional[bool]
    mu_c_is_embdim_minus_one: Optional[bool]
    c_inside_I: Optional[bool]

    def to_json(self) -> dict:
        return asdict(self)

    @property
    def all_hold(self) -> bool:
        return all(v is not False for v in asdict(self).values())


def two_agl_ulrich_consequences(H: NumericalSemigroup, verdict: UlrichVerdict) -> UlrichConsequences:
    from .classify import classify

    rep = classify(H)
    if not rep.two_agl or not verdict.is_ulrich:
        raise PreconditionFailed("needs a 2-AGL ring and an Ulrich ideal")
    I = RelativeIdeal.generated_by(H, verdict.generators)
    c = RelativeIdeal.generated_by(H, rep.conductor_generators)
    m = RelativeIdeal.maximal(H)
    n = I.mu
    r = socle_count(H, I)
    sum_cm = mu_c = inside = None
    if n == 2:
        sum_cm = (I + c) == m
        mu_c = c.mu == H.embedding_dim - 1
    if n >= 3 and rep.kr_free:
        inside = c.issubset(I)
    kr_free = rep.kr_free if n == 2 else None
    return UlrichConsequences(
        mu=n,
        socle_type=r,
        type_identity=(n - 1) * r == H.type,
        kr_free=kr_free,
        sum_with_c_is_m=sum_cm,
        mu_c_is_embdim_minus_one=mu_c,
        c_inside_I=inside,
    )


def min_multiplicity_xr(H: NumericalSemigroup) -> list[tuple[int, ...]]:
    """Monomial Ulrich ideals of a 2-AGL ring of minimal multiplicity: {c, m} or {m}."""
    from .classify import classify

    rep = classify(H)
    if not rep.two_agl or not rep.multiplicity_minimal:
        raise PreconditionFailed(f"{H!r} must be 2-AGL of minimal multiplicity")
    pred = [H.generators]
    if rep.kr_free:
        pred.append(rep.conductor_generators)
    pred.sort()
    found = [v.generators for v in enumerate_monomial_ulrich(H, completeness_bound(H))]
    if found != pred:
        raise AssertionError(f"predicted {pred}, enumerated {found}")
    return pred
