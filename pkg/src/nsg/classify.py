"""Hilbert coefficients of canonical ideals, Sally rank and 2-AGL classification.

For an integral monomial ideal I with least valuation a, Q = (t^a) is a minimal
reduction and l(R/I^(n+1)) = |H minus I^(n+1)|.  The Sally rank of a canonical
ideal is e1 - e0 + l(R/I); rank 0 means Gorenstein, rank 1 AGL (non-Gorenstein)
and rank 2 means 2-AGL.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

from .errors import InconsistentClassification, NotIntegral, NotPrimary, NotTwoAGL
from .ideals import (
    RelativeIdeal,
    blowup,
    canonical_ideal,
    colon,
    integral_shift,
    length_between,
    maximal_ideal,
    product,
)
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class HilbertData:
    e0: int
    e1: int
    values: tuple[int, ...]
    reduction_number: int
    reduction_element: int

    def to_json(self) -> dict:
        d = asdict(self)
        d["values"] = list(self.values)
        return d

    @classmethod
    def from_json(cls, data: dict) -> "HilbertData":
        data = dict(data)
        data["values"] = tuple(data["values"])
        return cls(**data)


def hilbert_samuel(H: NumericalSemigroup, I: RelativeIdeal, n_max: int | None = None) -> HilbertData:
    """l(R/I^(n+1)) for n = 0..n_max, plus e0, e1 and the reduction number."""
    if not I.is_integral():
        raise NotIntegral(f"{I!r} is not contained in R")
    if 0 in I:
        raise NotPrimary("the unit ideal is not m-primary")
    R = RelativeIdeal.unit(H)
    a = I.min
    # reduction number: least r with I^(r+1) = a + I^r
    powers = [R, I]
    r = 0
    while powers[r + 1] != powers[r].shift(a):
        r += 1
        powers.append(product(powers[-1], I))
    if n_max is None:
        n_max = r + 8
    n_max = max(n_max, r)
    while len(powers) < n_max + 2:
        powers.append(product(powers[-1], I))
    values = tuple(length_between(R, powers[n + 1]) for n in range(n_max + 1))
    e0 = a
    e1 = e0 * (r + 1) - values[r]
    for n in range(r, n_max + 1):
        if values[n] != e0 * (n + 1) - e1:
            raise AssertionError(f"Hilbert function of {I!r} is not linear past n = {r}")
    return HilbertData(e0=e0, e1=e1, values=values, reduction_number=r, reduction_element=a)


def sally_rank(H: NumericalSemigroup, shift: int | None = None) -> int:
    """e1 - (e0 - l(R/I)) for I = t^a K."""
    if H.is_whole():
        return 0
    K = canonical_ideal(H)
    a = integral_shift(H, K) if shift is None else shift
    I = K.shift(a)
    hd = hilbert_samuel(H, I)
    return hd.e1 - hd.e0 + length_between(RelativeIdeal.unit(H), I)


@dataclass(frozen=True)
class KRStructure:
    """Per-generator data for K/R: tags[i] = (c_i, l((R + R t^(f-c_i))/R))."""

    tags: tuple[tuple[int, int], ...]
    ell: int
    m: int
    direct_sum: bool

    def to_json(self) -> dict:
        return {
            "tags": [list(t) for t in self.tags],
            "ell": self.ell,
            "m": self.m,
            "direct_sum": self.direct_sum,
        }


def _kr_tags(H: NumericalSemigroup) -> tuple[tuple[int, int], ...]:
    f = H.frobenius
    R = RelativeIdeal.unit(H)
    out = []
    for c in H.pseudo_frobenius:
        if c == f:
            continue
        E = RelativeIdeal(H, R.members.union(H.members.shift(f - c)))
        out.append((c, length_between(E, R)))
    return tuple(out)


def structure_of_kr(H: NumericalSemigroup, strict: bool = True) -> KRStructure:
    """Decompose K/R along PF(H) minus f.

    Tags of length 2 are R/c summands, tags of length 1 are R/m summands.  The
    direct-sum reading is only claimed for 2-AGL rings; with ``strict=False``
    other rings get the raw tags and ``direct_sum=False``.
    """
    tags = _kr_tags(H)
    two = sally_rank(H) == 2
    if strict and not two:
        raise NotTwoAGL(f"{H!r} is not 2-AGL")
    ell = sum(1 for _, n in tags if n == 2)
    m = sum(1 for _, n in tags if n == 1)
    return KRStructure(tags=tags, ell=ell, m=m, direct_sum=two)


@dataclass(frozen=True)
class ClassificationReport:
    generators: tuple[int, ...]
    sally_rank: int
    gorenstein: bool
    agl: bool
    two_agl: bool
    cond_c3: bool
    cond_c4: bool
    cond_c5: bool
    cond_c6: bool
    cond_c7: bool
    kr_decomp: Optional[tuple[int, int]]
    kr_free: Optional[bool]
    type: int
    multiplicity_minimal: bool
    s_gorenstein: bool
    len_S_K: int
    len_R_c: int
    len_K_R: int
    mu_S: int
    blowup_generators: tuple[int, ...]
    conductor_generators: tuple[int, ...]
    hilbert: Optional[HilbertData] = field(default=None)

    def to_json(self) -> dict:
        d = {k: getattr(self, k) for k in self.__dataclass_fields__}
        d["generators"] = list(self.generators)
        d["kr_decomp"] = list(self.kr_decomp) if self.kr_decomp is not None else None
        d["blowup_generators"] = list(self.blowup_generators)
        d["conductor_generators"] = list(self.conductor_generators)
        d["hilbert"] = self.hilbert.to_json() if self.hilbert is not None else None
        return d

    @classmethod
    def from_json(cls, data: dict) -> "ClassificationReport":
        data = dict(data)
        for k in ("generators", "blowup_generators", "conductor_generators"):
            data[k] = tuple(data[k])
        if data.get("kr_decomp") is not None:
            data["kr_decomp"] = tuple(data["kr_decomp"])
        if data.get("hilbert") is not None:
            data["hilbert"] = HilbertData.from_json(data["hilbert"])
        return cls(**data)


def classify(H: NumericalSemigroup, hilbert_n: int | None = None) -> ClassificationReport:
    """Evaluate the rank and every equivalent 2-AGL condition independently."""
    R = RelativeIdeal.unit(H)
    K = canonical_ideal(H)
    bl = blowup(H)
    S = RelativeIdeal.from_semigroup(H, bl.ring)
    c = bl.conductor_ideal
    rank = sally_rank(H)
    gor = H.type == 1

    K2 = product(K, K)
    K3 = product(K2, K)
    c3 = K2 == K3 and length_between(K2, K) == 2

    if H.is_whole():
        c4 = False
        hd = None
    else:
        a = integral_shift(H, K)
        I = K.shift(a)
        I2 = product(I, I)
        I3 = product(I2, I)
        QI = I.shift(a)
        c4 = I3 == I2.shift(a) and length_between(I2, QI) == 2
        hd = hilbert_samuel(H, I, hilbert_n) if hilbert_n is not None else None

    if gor:
        c5 = False
    else:
        Km = colon(K, maximal_ideal(H))
        c5 = Km.issubset(S) and length_between(S, Km) == 1

    len_SK = length_between(S, K)
    c6 = len_SK == 2
    len_Rc = length_between(R, c)
    c7 = len_Rc == 2

    two = rank == 2
    flags = {"c3": c3, "c4": c4, "c5": c5, "c6": c6, "c7": c7}
    bad = [k for k, v in flags.items() if v != two]
    if bad:
        raise InconsistentClassification(f"{H!r}: rank {rank} but flags {bad} disagree")
    if (rank <= 2 or len_SK <= 2) and len_SK != rank:
        raise InconsistentClassification(f"{H!r}: rank {rank} but l(S/K) = {len_SK}")
    if gor != (rank == 0):
        raise InconsistentClassification(f"{H!r}: type {H.type} but rank {rank}")

    if two:
        kr = structure_of_kr(H, strict=False)
        kr_decomp = (kr.ell, kr.m)
        kr_free = kr.m == 0
    else:
        kr_decomp, kr_free = None, None

    return ClassificationReport(
        generators=H.generators,
        sally_rank=rank,
        gorenstein=gor,
        agl=rank <= 1,
        two_agl=two,
        cond_c3=c3,
        cond_c4=c4,
        cond_c5=c5,
        cond_c6=c6,
        cond_c7=c7,
        kr_decomp=kr_decomp,
        kr_free=kr_free,
        type=H.type,
        multiplicity_minimal=H.embedding_dim == H.multiplicity,
        s_gorenstein=bl.ring.symmetric,
        len_S_K=len_SK,
        len_R_c=len_Rc,
        len_K_R=length_between(K, R),
        mu_S=S.mu,
        blowup_generators=bl.ring.generators,
        conductor_generators=c.gens,
        hilbert=hd,
    )


@dataclass(frozen=True)
class SymmetryReport:
    frobenius: int
    b: int
    free_part: tuple[int, ...]
    nonfree_part: tuple[int, ...]
    free_symmetry: bool
    nonfree_symmetry: bool
    generator_witness: Optional[int]
    free_criterion_holds: bool

    def to_json(self) -> dict:
        d = asdict(self)
        d["free_part"] = list(self.free_part)
        d["nonfree_part"] = list(self.nonfree_part)
        return d


def pf_symmetry(H: NumericalSemigroup) -> SymmetryReport:
    """Check the pairing of pseudo-Frobenius numbers in a 2-AGL semigroup.

    With b the unique nonzero element of H outside c: free-type PF numbers
    c_1 < ... < c_p satisfy f + b = c_i + c_(p+1-i), and non-free ones
    d_1 < ... < d_q satisfy f = d_j + d_(q+1-j).  K/R is free exactly when some
    minimal generator a_j satisfies f + a_j = c_i + c_(r-i) for all i.
    """
    if sally_rank(H) != 2:
        raise NotTwoAGL(f"{H!r} is not 2-AGL")
    f = H.frobenius
    c = blowup(H).conductor_ideal
    outside = [h for h in H.elements_below(c.conductor + 1) if h not in c and h != 0]
    assert len(outside) == 1
    b = outside[0]
    tags = _kr_tags(H)
    I = tuple(ci for ci, n in tags if n == 2)
    J = tuple(ci for ci, n in tags if n == 1)
    p, q = len(I), len(J)
    free_sym = all(f + b == I[i] + I[p - 1 - i] for i in range(p))
    nonfree_sym = all(f == J[j] + J[q - 1 - j] for j in range(q))
    pf = [x for x in H.pseudo_frobenius if x != f]
    r1 = len(pf)
    witness = next(
        (aj for aj in H.generators if all(f + aj == pf[i] + pf[r1 - 1 - i] for i in range(r1))),
        None,
    )
    return SymmetryReport(
        frobenius=f,
        b=b,
        free_part=I,
        nonfree_part=J,
        free_symmetry=free_sym,
        nonfree_symmetry=nonfree_sym,
        generator_witness=witness,
        free_criterion_holds=(q == 0) == (witness is not None),
    )
