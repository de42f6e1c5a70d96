"""Finite-dimensional truncations of k[[H]] and of quasi-trivial extensions.

``SemigroupAlgebra(H, F, N)`` is k[[H]] / (t^j : j >= N) with basis t^h,
h in H, h < N; vectors are dicts keyed by the exponent h.  Ideals are
subspaces closed under multiplication by the algebra generators.

Lengths read off a truncation are only trusted after a stabilization
certificate: the ideal contains every basis vector of degree in [N - m, N)
with N - m at or past the relevant conductor.  Nakayama then shows the ideal
contains everything of degree >= N, so nothing was lost by truncating.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .errors import (
    NoReductionFound,
    NotLocal,
    StabilizationFailed,
    TruncationTooSmall,
)
from .fields import FieldSpec
from .linalg import Subspace, Vec, express, nullity, rank, vadd
from .semigroup import NumericalSemigroup
from .ulrich import UlrichVerdict

T_SYMBOL = sympy.Symbol("t")


def default_N(H: NumericalSemigroup, max_valuation: int = 0) -> int:
    return 3 * H.conductor + 2 * max_valuation + 4


class TruncAlgebra:
    """Common interface: columns, identity, generators, product, certificate."""

    F: FieldSpec
    N: int
    columns: list[int]
    one: Vec
    alg_gens: list[Vec]
    max_gens: list[Vec]
    cert_cols: list[int]
    cert_ok: bool

    @property
    def dim(self) -> int:
        return len(self.columns)

    def mul(self, u: Vec, v: Vec) -> Vec:
        raise NotImplementedError

    def label(self, col: int) -> str:
        raise NotImplementedError

    def basis_vector(self, col: int) -> Vec:
        return {col: self.F.one()}

    def to_str(self, v: Vec) -> str:
        if not v:
            return "0"
        parts = []
        for col in sorted(v):
            c = v[col]
            lab = self.label(col)
            parts.append(lab if c == 1 else f"{c}*{lab}")
        return " + ".join(parts)


class SemigroupAlgebra(TruncAlgebra):
    def __init__(self, H: NumericalSemigroup, F: FieldSpec, N: int):
        if N < H.conductor + 1:
            raise TruncationTooSmall(f"N = {N} must be at least c(H) + 1 = {H.conductor + 1}")
        self.H = H
        self.F = F
        self.N = N
        self.columns = H.elements_below(N)
        self._colset = set(self.columns)
        self.one = {0: F.one()}
        self.alg_gens = [{a: F.one()} for a in H.generators if a < N]
        self.max_gens = self.alg_gens
        m = H.multiplicity
        self.cert_cols = list(range(N - m, N))
        self.cert_ok = N - m >= H.conductor

    def mul(self, u: Vec, v: Vec) -> Vec:
        F, N = self.F, self.N
        out: dict = {}
        for i, x in u.items():
            for j, y in v.items():
                k = i + j
                if k < N:
                    z = F.add(out.get(k, F.zero()), F.mul(x, y))
                    if z:
                        out[k] = z
                    else:
                        out.pop(k, None)
        return out

    def label(self, col: int) -> str:
        return "1" if col == 0 else f"t^{col}"

    def element(self, series: dict) -> Vec:
        """Vector of a series {exponent: coefficient}; exponents >= N are dropped."""
        out = {}
        for e, c in series.items():
            if e >= self.N:
                continue
            if e not in self._colset:
                raise ValueError(f"t^{e} is not in k[[{self.H!r}]]")
            c = self.F(c)
            if c:
                out[e] = c
        return out

    def monomial(self, e: int) -> Vec:
        return self.element({e: 1})

    def order(self, v: Vec) -> int:
        return min(v) if v else self.N

    def parse(self, text: str, subs: Optional[dict] = None) -> Vec:
        return self.element(parse_series(text, subs))


class QuasiTrivialAlgebra(TruncAlgebra):
    """R_N (+) I_N with (a, x)(b, y) = (ab, ay + bx + alpha x y).

    Column e < N is (t^e, 0) and column N + e is (0, t^e).  ``ideal_members``
    is the member set of I (an ideal of the base ring).
    """

    def __init__(self, base: SemigroupAlgebra, ideal_members, ideal_gens: Sequence[int], alpha: Vec):
        self.base = base
        self.F = base.F
        self.N = N = base.N
        self.ideal_members = ideal_members
        self.ideal_gens = tuple(ideal_gens)
        self.alpha = dict(alpha)
        self.second = [e for e in base.columns if e in ideal_members]
        self.columns = base.columns + [N + e for e in self.second]
        one = self.F.one()
        self.one = {0: one}
        self.alg_gens = [dict(g) for g in base.alg_gens] + [
            {N + g: one} for g in self.ideal_gens if g < N
        ]
        self.max_gens = self.alg_gens
        m = base.H.multiplicity
        self.cert_cols = list(range(N - m, N)) + [N + j for j in range(N - m, N)]
        self.cert_ok = N - m >= max(base.H.conductor, ideal_members.cond)

    def split(self, v: Vec) -> tuple[Vec, Vec]:
        N = self.N
        a = {k: x for k, x in v.items() if k < N}
        b = {k - N: x for k, x in v.items() if k >= N}
        return a, b

    def join(self, a: Vec, x: Vec) -> Vec:
        out = dict(a)
        for k, c in x.items():
            out[self.N + k] = c
        return out

    def mul(self, u: Vec, v: Vec) -> Vec:
        R, F = self.base, self.F
        a, x = self.split(u)
        b, y = self.split(v)
        first = R.mul(a, b)
        second = vadd(F, R.mul(a, y), R.mul(b, x))
        if self.alpha and x and y:
            second = vadd(F, second, R.mul(self.alpha, R.mul(x, y)))
        return self.join(first, second)

    def label(self, col: int) -> str:
        if col < self.N:
            return f"({self.base.label(col)},0)"
        return f"(0,{self.base.label(col - self.N)})"


# -- ideals -------------------------------------------------------------------


@dataclass
class IdealSubspace:
    ambient: TruncAlgebra
    space: Subspace
    gens: list[Vec] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def stabilized(self) -> bool:
        A = self.ambient
        return A.cert_ok and all(A.basis_vector(j) in self.space for j in A.cert_cols)

    def require_stabilized(self, what: str = "ideal") -> None:
        if not self.stabilized:
            raise StabilizationFailed(
                f"{what}: truncation N = {self.ambient.N} too small for a stabilization certificate"
            )

    def __contains__(self, v: Vec) -> bool:
        return v in self.space

    def basis(self) -> list[Vec]:
        return self.space.basis()


def ideal_closure(A: TruncAlgebra, gens: Iterable[Vec]) -> IdealSubspace:
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("ideal_closure needs a nonzero generator")
    S = Subspace(A.F)
    todo = []
    for g in gens:
        if S.add(g):
            todo.append(g)
    while todo:
        v = todo.pop()
        for x in A.alg_gens:
            w = A.mul(x, v)
            if w and S.add(w):
                todo.append(w)
    return IdealSubspace(A, S, list(gens))


def span_ideal(A: TruncAlgebra, vectors: Iterable[Vec], gens: list[Vec]) -> IdealSubspace:
    return IdealSubspace(A, Subspace(A.F, vectors), gens)


def product(I: IdealSubspace, J: IdealSubspace) -> IdealSubspace:
    """I J = span of u g for u a basis vector of I and g a generator of J."""
    A = I.ambient
    vecs = [A.mul(u, g) for u in I.basis() for g in J.gens]
    gens = [A.mul(g, h) for g in I.gens for h in J.gens]
    return span_ideal(A, vecs, gens)


def principal_times(a: Vec, I: IdealSubspace) -> IdealSubspace:
    A = I.ambient
    return span_ideal(A, [A.mul(a, u) for u in I.basis()], [A.mul(a, g) for g in I.gens])


def maximal_times(I: IdealSubspace) -> IdealSubspace:
    A = I.ambient
    return span_ideal(
        A,
        [A.mul(x, u) for u in I.basis() for x in A.max_gens],
        [A.mul(x, g) for g in I.gens for x in A.max_gens],
    )


def colength(I: IdealSubspace) -> int:
    I.require_stabilized()
    return I.ambient.dim - I.dim


def length_quotient(I: IdealSubspace, J: IdealSubspace) -> int:
    """l(I/J) for J contained in I, both certified."""
    I.require_stabilized()
    J.require_stabilized()
    return I.dim - J.dim


def equal(I: IdealSubspace, J: IdealSubspace) -> bool:
    I.require_stabilized()
    J.require_stabilized()
    return I.space == J.space


def mu(I: IdealSubspace) -> int:
    """Minimal number of generators, dim I / mI."""
    mI = maximal_times(I)
    return length_quotient(I, mI)


def socle_type(A: TruncAlgebra, I: IdealSubspace) -> int:
    """dim of {v in A/I : m v in I}."""
    I.require_stabilized()
    piv = I.space.pivots
    quotient = [c for c in A.columns if c not in piv]
    width = max(A.columns) + 1
    images = []
    for q in quotient:
        e = A.basis_vector(q)
        img: dict = {}
        for i, x in enumerate(A.max_gens):
            for k, c in I.space.reduce(A.mul(x, e)).items():
                img[i * width + k] = c
        images.append(img)
    return nullity(A.F, images)


def truncated_ring(H: NumericalSemigroup, field: FieldSpec, N: int) -> SemigroupAlgebra:
    return SemigroupAlgebra(H, field, N)


def monomial_ideal(A: SemigroupAlgebra, vals: Iterable[int]) -> IdealSubspace:
    return ideal_closure(A, [A.monomial(v) for v in vals])


# -- parsing ------------------------------------------------------------------


def parse_series(text: str, subs: Optional[dict] = None) -> dict:
    """Parse ``"t^8 + 2*t^10 - t^12"`` into {exponent: Fraction}."""
    expr = _parse(text)
    if subs:
        expr = expr.subs({sympy.Symbol(k): sympy.Rational(Fraction(v).numerator, Fraction(v).denominator) for k, v in subs.items()})
    expr = sympy.expand(expr)
    if expr == 0:
        return {}
    poly = sympy.Poly(expr, T_SYMBOL)
    out = {}
    for (e,), c in poly.terms():
        if not c.is_Rational:
            raise ValueError(f"non-numeric coefficient {c} in {text!r}")
        out[int(e)] = Fraction(int(c.p), int(c.q))
    return out


def _parse(text: str):
    return parse_expr(
        text,
        local_dict={"t": T_SYMBOL},
        transformations=standard_transformations + (convert_xor,),
    )


def template_symbols(text: str) -> set[str]:
    expr = _parse(text)
    return {s.name for s in expr.free_symbols if s != T_SYMBOL}


# -- Ulrich test for arbitrary ideals -----------------------------------------


def _is_reduction(A: TruncAlgebra, a: Vec, I: IdealSubspace, max_power: int = 6) -> bool:
    if isinstance(A, SemigroupAlgebra):
        # in k[[H]], a is a reduction of I iff ord(a) = min ord(I)
        return A.order(a) == min(I.space.pivots)
    P = I
    for _ in range(max_power):
        nxt = product(P, I)
        if equal(nxt, principal_times(a, P)):
            return True
        P = nxt
    return False


def is_ulrich_general(
    A: TruncAlgebra,
    gens: Sequence[Vec],
    reduction: Optional[Vec] = None,
    seed: int = 0,
    random_tries: int = 32,
) -> UlrichVerdict:
    """Ulrich test for the ideal generated by ``gens``.

    Candidates for the reduction element: ``reduction`` if given, else each
    generator, then random combinations.  Raises NoReductionFound when no
    candidate is a reduction; that is not a negative verdict.
    """
    F = A.F
    I = ideal_closure(A, gens)
    I.require_stabilized("I")
    if A.one in I:
        raise ValueError("the unit ideal is not m-primary")
    if reduction is not None:
        cands = [reduction]
    else:
        cands = list(gens)
        rng = random.Random(seed)
        for _ in range(random_tries):
            coeffs = [_random_scalar(F, rng) for _ in gens]
            v: dict = {}
            for c, g in zip(coeffs, gens):
                v = vadd(F, v, g, c)
            if v:
                cands.append(v)
    I2 = product(I, I)
    I2.require_stabilized("I^2")
    for a in cands:
        if a not in I:
            continue
        aI = principal_times(a, I)
        if not aI.stabilized or not _is_reduction(A, a, I):
            continue
        Q = ideal_closure(A, [a])
        n = mu(I)
        lRI = colength(I)
        lII2 = length_quotient(I, I2)
        eq = equal(I2, aI)
        free = lII2 == n * lRI
        witness = None
        if n == 2 and eq:
            witness = _mu2_witness(A, I, a, gens)
        return UlrichVerdict(
            is_ulrich=(Q.dim != I.dim) and eq and free,
            reduction_valuation=min(a),
            mu=n,
            len_R_mod_I=lRI,
            len_I_mod_I2=lII2,
            free_check=free,
            witness_c=witness,
            generators=tuple(A.to_str(g) for g in gens),
        )
    raise NoReductionFound("no sampled element of I is a reduction")


def _random_scalar(F: FieldSpec, rng: random.Random):
    if F.p:
        return rng.randrange(F.p)
    return F(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))


def _mu2_witness(A: TruncAlgebra, I: IdealSubspace, a: Vec, gens: Sequence[Vec]) -> str:
    """Find b with I = (a, b) and c in I with b^2 = a c; check the 2x2 matrix squares to zero."""
    for b in gens:
        if ideal_closure(A, [a, b]).space != I.space:
            continue
        basis = I.basis()
        coeffs = express(A.F, A.mul(b, b), [A.mul(a, u) for u in basis], _width(A))
        if coeffs is None:
            continue
        c: dict = {}
        for x, u in zip(coeffs, basis):
            c = vadd(A.F, c, u, x)
        neg = lambda v: {k: A.F.neg(x) for k, x in v.items()}
        M = [[neg(b), neg(c)], [a, b]]
        for i in range(2):
            for j in range(2):
                s = vadd(A.F, A.mul(M[i][0], M[0][j]), A.mul(M[i][1], M[1][j]))
                if s:
                    raise AssertionError("resolution matrix does not square to zero")
        return A.to_str(c)
    return None


def _width(A: TruncAlgebra) -> int:
    return max(A.columns) + 1


# -- families -----------------------------------------------------------------


@dataclass
class FamilyScan:
    field: str
    templates: tuple[str, ...]
    params: tuple[str, ...]
    results: list[tuple[tuple[str, ...], bool]]
    distinct: Optional[bool]

    @property
    def all_ulrich(self) -> bool:
        return all(v for _, v in self.results)

    @property
    def none_ulrich(self) -> bool:
        return not any(v for _, v in self.results)

    def to_json(self) -> dict:
        return {
            "field": self.field,
            "templates": list(self.templates),
            "params": list(self.params),
            "results": [{"values": list(p), "is_ulrich": v} for p, v in self.results],
            "all_ulrich": self.all_ulrich,
            "distinct": self.distinct,
        }


def parameter_samples(F: FieldSpec, k: int, samples: int, nonzero: Iterable[int] = (), seed: int = 0) -> list[tuple]:
    """Every tuple over a prime field, or structured plus random tuples over Q."""
    nonzero = set(nonzero)
    ok = lambda t: all(t[i] != 0 for i in nonzero)
    if F.p:
        return [t for t in itertools.product(range(F.p), repeat=k) if ok(t)]
    structured = [t for t in itertools.product([0, 1, -1], repeat=k) if ok(t)]
    rng = random.Random(seed)
    out = list(structured)
    while len(out) < len(structured) + samples:
        t = tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(k))
        if ok(t):
            out.append(t)
    return out


def family_scan(
    H: NumericalSemigroup,
    field: FieldSpec,
    templates: Sequence[str],
    params: Sequence[str],
    samples: int = 20,
    nonzero: Iterable[str] = (),
    N: Optional[int] = None,
    check_distinct: bool = False,
    seed: int = 0,
) -> FamilyScan:
    """Run is_ulrich_general over parameter values of a generator template."""
    if len(params) > 3:
        raise ValueError("at most three parameters")
    nz = [params.index(p) for p in nonzero]
    if N is None:
        top = max(max(parse_series(t, {p: 1 for p in params}) or {0: 0}) for t in templates)
        N = default_N(H, top)
    A = SemigroupAlgebra(H, field, N)
    results = []
    spaces = []
    for vals in parameter_samples(field, len(params), samples, nz, seed):
        subs = dict(zip(params, vals))
        gens = [A.parse(t, subs) for t in templates]
        v = is_ulrich_general(A, gens, seed=seed)
        results.append((tuple(str(x) for x in vals), v.is_ulrich))
        if check_distinct:
            spaces.append(ideal_closure(A, gens).space)
    distinct = None
    if check_distinct:
        distinct = all(spaces[i] != spaces[j] for i in range(len(spaces)) for j in range(i))
    return FamilyScan(str(field), tuple(templates), tuple(params), results, distinct)
