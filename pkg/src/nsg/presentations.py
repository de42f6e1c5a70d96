"""Polynomial presentations of semigroup rings T/a with T = k[[X_1..X_n]].

Checks offered here: images under X_i -> t^(w_i), 2x2 minors, the block
shape of a presentation matrix of K with entries tested for membership in
J = (X_1^2, X_2, ..., X_n), and a degree-truncated comparison of T/(G) with
k[[H]] (Macaulay matrices over Q).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .errors import DegreeTooLarge, ShapeMismatch
from .fields import QQ
from .linalg import Subspace
from .semigroup import NumericalSemigroup, make_semigroup

Exp = tuple


class SparsePoly:
    """Polynomial in n variables: {exponent tuple: nonzero Fraction}."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[dict] = None):
        self.n = n
        self.terms = {e: Fraction(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, n: int, i: int, power: int = 1) -> "SparsePoly":
        e = [0] * n
        e[i] = power
        return cls(n, {tuple(e): 1})

    @classmethod
    def const(cls, n: int, c) -> "SparsePoly":
        return cls(n, {(0,) * n: c})

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(self.n, out)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly(self.n, out)

    def scale(self, c) -> "SparsePoly":
        return SparsePoly(self.n, {e: c * x for e, x in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def order(self) -> int:
        """Least total degree of a term (inf for zero)."""
        return min((sum(e) for e in self.terms), default=float("inf"))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SparsePoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def to_str(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[e]
            mono = "*".join(
                f"{names[i]}^{k}" if k > 1 else names[i] for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"SparsePoly({self.to_str([f'X{i + 1}' for i in range(self.n)])})"


def default_names(n: int) -> list[str]:
    return ["X", "Y", "Z", "W"] if n == 4 else [f"X{i + 1}" for i in range(n)]


def parse_poly(text: str, names: Sequence[str]) -> SparsePoly:
    syms = [sympy.Symbol(s) for s in names]
    expr = parse_expr(
        str(text),
        local_dict={s.name: s for s in syms},
        transformations=standard_transformations + (convert_xor,),
    )
    expr = sympy.expand(expr)
    n = len(names)
    if expr == 0:
        return SparsePoly(n)
    extra = expr.free_symbols - set(syms)
    if extra:
        raise ValueError(f"unknown variables {sorted(map(str, extra))} in {text!r}")
    poly = sympy.Poly(expr, *syms)
    return SparsePoly(n, {tuple(int(x) for x in e): Fraction(int(c.p), int(c.q)) for e, c in poly.terms()})


# -- evaluation ----------------------------------------------------------------


@dataclass(frozen=True)
class PhiImage:
    series: dict
    vanishes: bool


def phi_eval(p: SparsePoly, weights: Sequence[int]) -> PhiImage:
    """Image under X_i -> t^(w_i) as {exponent: coefficient}."""
    if len(weights) != p.n or any(w <= 0 for w in weights):
        raise ValueError("need one positive weight per variable")
    out: dict = {}
    for e, c in p.terms.items():
        d = sum(a * w for a, w in zip(e, weights))
        out[d] = out.get(d, 0) + c
    out = {d: c for d, c in out.items() if c}
    return PhiImage(out, not out)


def minors2(M: Sequence[Sequence[SparsePoly]]) -> list[SparsePoly]:
    if len(M) != 2 or len(M[0]) != len(M[1]) or len(M[0]) < 2:
        raise ShapeMismatch("minors2 needs a 2 x n matrix with n >= 2")
    n = len(M[0])
    return [M[0][i] * M[1][j] - M[0][j] * M[1][i] for i in range(n) for j in range(i + 1, n)]


def matmul(A: Sequence[Sequence[SparsePoly]], B: Sequence[Sequence[SparsePoly]]) -> list[list[SparsePoly]]:
    if len(A[0]) != len(B):
        raise ShapeMismatch("inner dimensions differ")
    nv = A[0][0].n
    out = []
    for row in A:
        new = []
        for j in range(len(B[0])):
            acc = SparsePoly(nv)
            for k, a in enumerate(row):
                if a.terms and B[k][j].terms:
                    acc = acc + a * B[k][j]
            new.append(acc)
        out.append(new)
    return out


def transpose(M):
    return [list(col) for col in zip(*M)]


# -- the shape hypothesis ---------------------------------------------------------


def in_J(p: SparsePoly) -> bool:
    """Membership in J = (X_1^2, X_2, ..., X_n), a monomial ideal: test each term."""
    return all(e[0] >= 2 or any(e[1:]) for e in p.terms)


@dataclass(frozen=True)
class PresentationShape:
    n: int
    ell: int
    m: int
    q: int


def infer_shape(M: Sequence[Sequence[SparsePoly]], n: int) -> PresentationShape:
    """Blocks of (X_1^2, X_2..X_n) rows, then (X_1, X_2..X_n) rows, then q extra columns."""
    rows = len(M)
    if rows < 2:
        raise ShapeMismatch("need at least two rows")
    cols = len(M[0])
    if any(len(r) != cols for r in M):
        raise ShapeMismatch("ragged matrix")
    nv = M[0][0].n
    if nv != n:
        raise ShapeMismatch(f"entries have {nv} variables, expected {n}")
    sq = [SparsePoly.var(n, 0, 2)] + [SparsePoly.var(n, i) for i in range(1, n)]
    lin = [SparsePoly.var(n, i) for i in range(n)]
    zero = SparsePoly(n)
    kinds = []
    for r in range(1, rows):
        b = r - 1
        block = M[r][b * n : (b + 1) * n]
        if len(block) < n:
            raise ShapeMismatch(f"row {r} has no room for its block")
        if block == sq:
            kinds.append("sq")
        elif block == lin:
            kinds.append("lin")
        else:
            raise ShapeMismatch(f"row {r}: block is neither (X1^2, X2..Xn) nor (X1..Xn)")
        rest = M[r][: b * n] + M[r][(b + 1) * n :]
        if any(x != zero for x in rest):
            raise ShapeMismatch(f"row {r} has entries outside its block")
    ell = sum(1 for k in kinds if k == "sq")
    if kinds != ["sq"] * ell + ["lin"] * (len(kinds) - ell):
        raise ShapeMismatch("(X1^2, ...) blocks must precede (X1, ...) blocks")
    q = cols - n * (rows - 1)
    if q < 0:
        raise ShapeMismatch("too few columns")
    return PresentationShape(n=n, ell=ell, m=rows - 1 - ell, q=q)


def presentation_hypothesis(M: Sequence[Sequence[SparsePoly]], n: int) -> bool:
    """Shape check, then every a_ij (all j) and b_pk (k >= 2) lies in J."""
    sh = infer_shape(M, n)
    top = M[0]
    for i in range(sh.ell):
        if not all(in_J(top[i * n + j]) for j in range(n)):
            return False
    for p in range(sh.m):
        base = (sh.ell + p) * n
        if not all(in_J(top[base + k]) for k in range(1, n)):
            return False
    return True


# -- kernel evidence -----------------------------------------------------------------


def monomials_below(n: int, d: int) -> list[Exp]:
    """Exponent vectors of total degree < d."""
    out = []
    for deg in range(d):
        for c in itertools.combinations_with_replacement(range(n), deg):
            e = [0] * n
            for i in c:
                e[i] += 1
            out.append(tuple(e))
    return out


def order_counts(H: NumericalSemigroup, d: int) -> int:
    """dim R/m^d = #{h in H : ord(h) < d}, ord(h) the longest factorization length."""
    gens = H.generators
    top = d * max(gens) + 1
    # longest factorization length of each member, -1 for non-members
    best = [-1] * top
    best[0] = 0
    for h in range(1, top):
        b = -1
        for a in gens:
            if a <= h and best[h - a] >= 0:
                b = max(b, best[h - a] + 1)
        best[h] = b
    # members >= top have order >= d since ord(h) >= h // max(gens)
    return sum(1 for h in range(top) if 0 <= best[h] < d)


@dataclass
class KernelEvidence:
    degrees: list[int]
    quotient_dims: list[int]
    ring_dims: list[int]
    all_vanish: bool

    @property
    def holds(self) -> bool:
        return self.all_vanish and self.quotient_dims == self.ring_dims

    def to_json(self) -> dict:
        return {
            "degrees": self.degrees,
            "quotient_dims": self.quotient_dims,
            "ring_dims": self.ring_dims,
            "all_vanish": self.all_vanish,
            "holds": self.holds,
        }


MAX_MACAULAY_ENTRIES = 5_000_000


def kernel_evidence(
    G: Sequence[SparsePoly], H: NumericalSemigroup, degree_bound: int, weights: Sequence[int] | None = None, n: int | None = None
) -> KernelEvidence:
    """Compare dim T/((G) + n^d) with dim R/m^d for d = 1..degree_bound.

    Equality for every d certifies (G) + n^d = ker + n^d up to that degree
    only; it is evidence, not a proof, that G generates the kernel.
    """
    if weights is None:
        weights = list(H.generators)
    if n is None:
        n = G[0].n if G else len(weights)
    vanish = all(phi_eval(g, weights).vanishes for g in G)
    degrees, qd, rd = [], [], []
    for d in range(1, degree_bound + 1):
        monos = monomials_below(n, d)
        index = {e: i for i, e in enumerate(monos)}
        rows_est = sum(len(monomials_below(n, max(d - g.order(), 0))) for g in G if g.terms)
        if rows_est * len(monos) > MAX_MACAULAY_ENTRIES:
            raise DegreeTooLarge(f"Macaulay matrix at degree {d} is too large")
        S = Subspace(QQ)
        for g in G:
            if not g.terms:
                continue
            for beta in monomials_below(n, max(d - g.order(), 0)):
                row = {}
                for e, c in g.terms.items():
                    e2 = tuple(a + b for a, b in zip(e, beta))
                    if sum(e2) < d:
                        row[index[e2]] = c
                if row:
                    S.add(row)
        degrees.append(d)
        qd.append(len(monos) - S.dim)
        rd.append(order_counts(H, d))
    return KernelEvidence(degrees, qd, rd, vanish)


# -- the minors family ------------------------------------------------------------------


@dataclass
class MinorsFamily:
    ells: tuple[int, ...]
    weights: Optional[tuple[int, ...]]
    realizable: bool
    reason: str
    hypothesis_after_column_ops: bool
    classification: Optional[dict] = None
    evidence: Optional[dict] = None

    def to_json(self) -> dict:
        return {
            "ells": list(self.ells),
            "weights": list(self.weights) if self.weights else None,
            "realizable": self.realizable,
            "reason": self.reason,
            "hypothesis_after_column_ops": self.hypothesis_after_column_ops,
            "classification": self.classification,
            "evidence": self.evidence,
        }


def minors_family_matrix(ells: Sequence[int]) -> list[list[SparsePoly]]:
    """[[X1^2, X2, ..., Xn], [X2^l2, ..., Xn^ln, X1^l1]]."""
    n = len(ells)
    top = [SparsePoly.var(n, 0, 2)] + [SparsePoly.var(n, i) for i in range(1, n)]
    bottom = [SparsePoly.var(n, (i + 1) % n, ells[(i + 1) % n]) for i in range(n)]
    return [top, bottom]


def minors_family_presentation(ells: Sequence[int]) -> list[list[SparsePoly]]:
    """Presentation matrix of K for the minors family, brought to block shape.

    Starts from the staircase matrix whose block j has the row
    (X2^l2, ..., X1^l1) at row j and (X1^2, X2, ..., Xn) at row j + 1 (signs
    absorbed by column scaling), then clears rows 2..j of each block by
    column operations against earlier blocks.
    """
    n = len(ells)
    if n < 3:
        raise ValueError("the family needs n >= 3")
    g_row, f_row = minors_family_matrix(ells)[0], minors_family_matrix(ells)[1]
    nb = n - 2
    rows = n - 1
    zero = SparsePoly(n)
    cols = []
    for j in range(nb):
        for k in range(n):
            col = [zero] * rows
            col[j] = f_row[k]
            col[j + 1] = g_row[k]
            cols.append(col)
    for j in range(1, nb):
        for k in range(n):
            col = cols[j * n + k]
            for r in range(j, 0, -1):
                e = col[r]
                if e.is_zero():
                    continue
                # write e = sum c_i * g_row[i] using the block r-1 columns (row r holds g_row)
                coeffs = _divide_into_J(e, n)
                for i, ci in coeffs.items():
                    src = cols[(r - 1) * n + i]
                    col = [x - ci * y for x, y in zip(col, src)]
                assert col[r].is_zero()
            cols[j * n + k] = col
    return transpose(cols)


def _divide_into_J(e: SparsePoly, n: int) -> dict[int, SparsePoly]:
    """Coefficients c_i with e = c_0 X1^2 + sum_{i>=1} c_i X_i (term by term)."""
    out: dict[int, dict] = {}
    for ex, c in e.terms.items():
        if ex[0] >= 2:
            i, q = 0, (ex[0] - 2,) + ex[1:]
        else:
            i = next((k for k in range(1, n) if ex[k] > 0), None)
            if i is None:
                raise ValueError("term outside J")
            q = tuple(x - (1 if k == i else 0) for k, x in enumerate(ex))
        out.setdefault(i, {})[q] = c
    return {i: SparsePoly(n, t) for i, t in out.items()}


def solve_family_weights(ells: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Positive integer weights making every minor homogeneous, or None.

    Homogeneity means deg(top_i) - deg(bottom_i) is the same for all columns.
    """
    n = len(ells)
    M = sympy.zeros(n - 1, n)
    def diff_row(i):
        r = [0] * n
        # top_i weight minus bottom_i weight
        if i == 0:
            r[0] += 2
        else:
            r[i] += 1
        r[(i + 1) % n] -= ells[(i + 1) % n]
        return r
    d0 = diff_row(0)
    for i in range(1, n):
        di = diff_row(i)
        for k in range(n):
            M[i - 1, k] = di[k] - d0[k]
    ns = M.nullspace()
    if len(ns) != 1:
        return None
    v = ns[0]
    den = sympy.ilcm(*[x.q for x in v])
    v = [int(x * den) for x in v]
    if all(x < 0 for x in v):
        v = [-x for x in v]
    if any(x <= 0 for x in v):
        return None
    g = 0
    for x in v:
        g = sympy.igcd(g, x)
    return tuple(x // g for x in v)


def minors_family(ells: Sequence[int], degree_bound: int = 6) -> MinorsFamily:
    from .classify import classify

    ells = tuple(ells)
    n = len(ells)
    M = minors_family_presentation(ells)
    hyp = presentation_hypothesis(M, n)
    w = solve_family_weights(ells)
    if w is None:
        return MinorsFamily(ells, None, False, "no positive integer weights", hyp)
    if len(set(w)) != n:
        return MinorsFamily(ells, w, False, "weights are not distinct", hyp)
    H = make_semigroup(w)
    if sorted(H.generators) != sorted(w):
        return MinorsFamily(ells, w, False, "weights are not minimal generators", hyp)
    G = minors2(minors_family_matrix(ells))
    ev = kernel_evidence(G, H, degree_bound, weights=w)
    if not ev.holds:
        return MinorsFamily(ells, w, False, "minors do not generate the kernel", hyp, evidence=ev.to_json())
    rep = classify(H)
    return MinorsFamily(
        ells,
        w,
        True,
        "semigroup ring",
        hyp,
        classification={
            "two_agl": rep.two_agl,
            "kr_decomp": list(rep.kr_decomp) if rep.kr_decomp else None,
            "kr_free": rep.kr_free,
        },
        evidence=ev.to_json(),
    )


# -- stored presentations ---------------------------------------------------------------


@dataclass
class PresentationData:
    generators: tuple[int, ...]
    variables: list[str]
    M_rows: list[list[SparsePoly]]
    N: list[list[SparsePoly]] = field(default_factory=list)
    L: list[SparsePoly] = field(default_factory=list)
    kernel: list[SparsePoly] = field(default_factory=list)
    kernel_matrices: list[list[list[SparsePoly]]] = field(default_factory=list)
    kernel_extra: list[SparsePoly] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.variables)

    @classmethod
    def load(cls, path) -> "PresentationData":
        data = json.loads(Path(path).read_text())
        return cls.from_json(data)

    @classmethod
    def from_json(cls, data: dict) -> "PresentationData":
        names = data["variables"]
        P = lambda s: parse_poly(s, names)
        mats = [[[P(x) for x in row] for row in m] for m in data.get("kernel_minors", [])]
        extra = [P(x) for x in data.get("kernel_extra", [])]
        kernel = [g for m in mats for g in minors2(m)] + extra
        return cls(
            generators=tuple(data["generators"]),
            variables=list(names),
            M_rows=[[P(x) for x in row] for row in data["M_transpose"]],
            N=[[P(x) for x in row] for row in data.get("N", [])],
            L=[P(x) for x in data.get("L", [])],
            kernel=kernel,
            kernel_matrices=mats,
            kernel_extra=extra,
        )


@dataclass
class PresentationReport:
    generators: tuple[int, ...]
    generators_vanish: bool
    L_vanishes: bool
    hypothesis: bool
    shape: Optional[dict]
    complex_LN: Optional[bool]
    complex_NM: Optional[bool]
    evidence: Optional[dict]

    def to_json(self) -> dict:
        d = {k: getattr(self, k) for k in self.__dataclass_fields__}
        d["generators"] = list(self.generators)
        return d


def verify_presentation(P: PresentationData, degree_bound: int = 10) -> PresentationReport:
    H = make_semigroup(P.generators)
    w = list(P.generators)
    gv = all(phi_eval(g, w).vanishes for g in P.kernel)
    lv = all(phi_eval(g, w).vanishes for g in P.L)
    sh = infer_shape(P.M_rows, P.n)
    hyp = presentation_hypothesis(P.M_rows, P.n)
    LN = NM = None
    if P.N and P.L:
        Mcol = transpose(P.M_rows)
        LN = all(x.is_zero() for row in matmul([P.L], P.N) for x in row)
        NM = all(x.is_zero() for row in matmul(P.N, Mcol) for x in row)
    ev = kernel_evidence(P.kernel, H, degree_bound, weights=w, n=P.n) if degree_bound > 0 else None
    return PresentationReport(
        generators=P.generators,
        generators_vanish=gv,
        L_vanishes=lv,
        hypothesis=hyp,
        shape={"n": sh.n, "ell": sh.ell, "m": sh.m, "q": sh.q},
        complex_LN=LN,
        complex_NM=NM,
        evidence=ev.to_json() if ev else None,
    )


def bundled_presentation(name: str) -> PresentationData:
    """Load a presentation shipped with the package, e.g. '5-7-9-13'."""
    from importlib.resources import files

    return PresentationData.from_json(json.loads((files("nsg") / "data" / "presentations" / f"{name}.json").read_text()))
