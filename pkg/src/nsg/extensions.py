"""Quasi-trivial extensions A = R x^alpha I with I = R:T for an overring T
containing K, and the checks that connect A to T and K.

Combinatorial side: l(R/I), l(T/K), mu_R(T) + r(R).  Linear-algebra side:
truncations of A and of B = T x^alpha T (see :mod:`nsg.trunc`).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import NotAdmissible, NotLocal, StabilizationFailed
from .ideals import RelativeIdeal, blowup, canonical_ideal, colon, length_between
from .linalg import Subspace, express
from .semigroup import NumericalSemigroup, make_semigroup, oversemigroups
from .trunc import (
    IdealSubspace,
    QuasiTrivialAlgebra,
    SemigroupAlgebra,
    Vec,
    ideal_closure,
    socle_type,
    span_ideal,
)


def admissible_overrings(H: NumericalSemigroup) -> list[NumericalSemigroup]:
    """Oversemigroups T != H whose members contain K."""
    K = canonical_ideal(H)
    return [T for T in oversemigroups(H) if T != H and K.members.issubset(T.members)]


@dataclass(frozen=True)
class ExtensionReport:
    base: tuple[int, ...]
    T: tuple[int, ...]
    I: tuple[int, ...]
    len_RI: int
    len_TK: int
    is_2agl: bool
    mu_T: int
    r_A: int
    t_equals_S: bool
    i_equals_c: bool

    def to_json(self) -> dict:
        d = {k: getattr(self, k) for k in self.__dataclass_fields__}
        for k in ("base", "T", "I"):
            d[k] = list(d[k])
        return d

    @classmethod
    def from_json(cls, data: dict) -> "ExtensionReport":
        data = dict(data)
        for k in ("base", "T", "I"):
            data[k] = tuple(data[k])
        return cls(**data)


def duplication_report(H: NumericalSemigroup, T: NumericalSemigroup) -> ExtensionReport:
    K = canonical_ideal(H)
    if T == H or not H.issubset(T) or not K.members.issubset(T.members):
        raise NotAdmissible(f"{T!r} is not an overring of {H!r} containing K")
    R = RelativeIdeal.unit(H)
    Tid = RelativeIdeal.from_semigroup(H, T)
    I = colon(R, Tid)
    len_RI = length_between(R, I)
    len_TK = length_between(Tid, K)
    if len_RI != len_TK:
        raise AssertionError(f"l(R/I) = {len_RI} but l(T/K) = {len_TK}")
    bl = blowup(H)
    return ExtensionReport(
        base=H.generators,
        T=T.generators,
        I=I.gens,
        len_RI=len_RI,
        len_TK=len_TK,
        is_2agl=len_RI == 2,
        mu_T=Tid.mu,
        r_A=Tid.mu + H.type,
        t_equals_S=T == bl.ring,
        i_equals_c=I == bl.conductor_ideal,
    )


# -- finite-dimensional models -------------------------------------------------


def quasi_trivial_algebra(
    R_N: SemigroupAlgebra, I: RelativeIdeal, alpha: Vec, samples: int = 200, seed: int = 0
) -> QuasiTrivialAlgebra:
    """A(alpha) = R_N (+) I_N, with unit, commutativity and associativity spot checks."""
    if I.base != R_N.H or not I.is_integral():
        raise ValueError("I must be an integral ideal of the base ring")
    if 0 in I and alpha.get(0):
        raise NotLocal("I = R with alpha a unit gives a non-local ring")
    A = QuasiTrivialAlgebra(R_N, I.members, I.gens, alpha)
    _check_algebra(A, samples, seed)
    return A


def _check_algebra(A, samples: int, seed: int) -> None:
    cols = A.columns
    for c in cols:
        e = A.basis_vector(c)
        if A.mul(A.one, e) != e:
            raise AssertionError(f"(1,0) is not an identity on {A.label(c)}")
    rng = random.Random(seed)
    small = len(cols) <= 14
    triples = (
        [(x, y, z) for x in cols for y in cols for z in cols]
        if small
        else [(rng.choice(cols), rng.choice(cols), rng.choice(cols)) for _ in range(samples)]
    )
    for x, y, z in triples:
        ex, ey, ez = A.basis_vector(x), A.basis_vector(y), A.basis_vector(z)
        if A.mul(ex, ey) != A.mul(ey, ex):
            raise AssertionError("multiplication is not commutative")
        if A.mul(A.mul(ex, ey), ez) != A.mul(ex, A.mul(ey, ez)):
            raise AssertionError("multiplication is not associative")
    # elements (1 + m, x) are units: solve u v = 1 for a few samples
    for _ in range(3):
        u = dict(A.one)
        for c in rng.sample(cols[1:], min(3, len(cols) - 1)):
            u[c] = A.F(rng.randint(1, 5))
        images = [A.mul(u, A.basis_vector(c)) for c in cols]
        if express(A.F, A.one, images, 2 * A.N + 1) is None:
            raise AssertionError(f"{A.to_str(u)} is not invertible")


def extension_N(H: NumericalSemigroup, T: NumericalSemigroup) -> int:
    return 3 * H.conductor + 2 * max(H.generators) + 4


@dataclass(frozen=True)
class BlowupCertificate:
    ok: bool
    N: int
    dim_B: int
    dim_L: int
    dim_AL: int
    steps: int
    length_AL_mod_L: int
    len_TK: int
    L_is_A_module: bool

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def verify_extension_blowup(
    H: NumericalSemigroup, T: NumericalSemigroup, alpha: dict | None = None, N: int | None = None, field=None
) -> BlowupCertificate:
    """Build B = T x^alpha T, L = T x K and A = R x^alpha I in a truncation;
    check L is an A-module, that the powers of L fill B and that
    l_A(A[L]/L) = l_R(T/K)."""
    from .fields import QQ

    F = field or QQ
    K = canonical_ideal(H)
    if not K.members.issubset(T.members) or T == H:
        raise NotAdmissible(f"{T!r} is not admissible for {H!r}")
    if N is None:
        N = extension_N(H, T)
    R = RelativeIdeal.unit(H)
    I = colon(R, RelativeIdeal.from_semigroup(H, T))
    Talg = SemigroupAlgebra(T, F, N)
    alpha_vec = Talg.element(alpha or {})
    B = QuasiTrivialAlgebra(Talg, T.members, (0,), alpha_vec)
    Nb = B.N
    # L = T x K as a subspace of B
    L_cols = Talg.columns + [Nb + k for k in Talg.columns if k in K]
    L = Subspace(F, [B.basis_vector(c) for c in L_cols])
    # A = R x I inside B; its algebra generators act on L
    A_gens = [B.basis_vector(a) for a in H.generators] + [B.basis_vector(Nb + g) for g in I.gens]
    is_module = all(B.mul(x, v) in L for v in L.basis() for x in A_gens)
    # A-module generators of L: (T-generators over R, 0) and (0, K-generators)
    Tid = RelativeIdeal.from_semigroup(H, T)
    L_gens = [B.basis_vector(g) for g in Tid.gens] + [B.basis_vector(Nb + g) for g in K.gens]
    P = L
    steps = 1
    while True:
        nxt = Subspace(F, [B.mul(v, g) for v in P.basis() for g in L_gens])
        if nxt == P:
            break
        P, steps = nxt, steps + 1
    dim_B = B.dim
    # truncation certificate: the top window of B is reached in L
    top_ok = all(B.basis_vector(j) in L for j in B.cert_cols) and B.cert_ok
    if not top_ok:
        raise StabilizationFailed("L does not contain the top window of B")
    len_TK = length_between(Tid, K)
    return BlowupCertificate(
        ok=is_module and P.dim == dim_B and P.dim - L.dim == len_TK,
        N=N,
        dim_B=dim_B,
        dim_L=L.dim,
        dim_AL=P.dim,
        steps=steps,
        length_AL_mod_L=P.dim - L.dim,
        len_TK=len_TK,
        L_is_A_module=is_module,
    )


def extension_type_by_socle(
    H: NumericalSemigroup, T: NumericalSemigroup, alpha: dict | None = None, N: int | None = None, field=None
) -> int:
    """r(A) as the socle dimension of A/xA with x = (t^m, 0)."""
    from .fields import QQ

    F = field or QQ
    R = RelativeIdeal.unit(H)
    I = colon(R, RelativeIdeal.from_semigroup(H, T))
    if N is None:
        N = extension_N(H, T) + H.multiplicity
    Ralg = SemigroupAlgebra(H, F, N)
    A = quasi_trivial_algebra(Ralg, I, Ralg.element(alpha or {}))
    x = A.basis_vector(H.multiplicity)
    xA = span_ideal(A, [A.mul(x, A.basis_vector(c)) for c in A.columns], [x])
    return socle_type(A, xA)


def principal_ideal_check(H: NumericalSemigroup, q: int, alpha: dict, N: int | None = None, field=None):
    """In A = R x^alpha R with alpha in (t^q): the ideal (t^q) x R has
    I^2 = (t^q, 0) I and l(A/I) = l(I/(t^q,0)A); returns the Ulrich verdict."""
    from .fields import QQ
    from .trunc import colength, equal, is_ulrich_general, length_quotient, principal_times, product

    F = field or QQ
    if N is None:
        N = 3 * H.conductor + 2 * q + 4
    Ralg = SemigroupAlgebra(H, F, N)
    R = RelativeIdeal.unit(H)
    a = Ralg.element(alpha)
    if any((e - q) not in H for e in a):
        raise ValueError("alpha must lie in (t^q)")
    A = quasi_trivial_algebra(Ralg, R, a)
    x = A.basis_vector(q)
    gens = [x, A.basis_vector(A.N)]
    I = ideal_closure(A, gens)
    I2 = product(I, I)
    xI = principal_times(x, I)
    xA = ideal_closure(A, [x])
    lengths_match = colength(I) == length_quotient(I, xA)
    verdict = is_ulrich_general(A, gens, reduction=x)
    return equal(I2, xI), lengths_match, verdict
