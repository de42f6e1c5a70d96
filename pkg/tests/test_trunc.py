import pytest
from hypothesis import given, settings, strategies as st

from conftest import generator_sets
from nsg.errors import NoReductionFound, StabilizationFailed, TruncationTooSmall
from nsg.fields import QQ, FieldSpec
from nsg.ideals import RelativeIdeal, length_between
from nsg.ideals import product as rel_product
from nsg.semigroup import make_semigroup
from nsg.trunc import (
    SemigroupAlgebra,
    colength,
    default_N,
    equal,
    family_scan,
    ideal_closure,
    is_ulrich_general,
    monomial_ideal,
    mu,
    parse_series,
    product,
    socle_type,
    template_symbols,
)
from nsg.ulrich import is_ulrich_monomial

F2, F3 = FieldSpec(2), FieldSpec(3)


@st.composite
def monomial_case(draw):
    gens = draw(generator_sets(max_gen=9, max_len=3))
    H = make_semigroup(gens)
    pool = [h for h in H.elements_below(H.conductor + 8) if h > 0]
    vals = sorted(set(draw(st.lists(st.sampled_from(pool), min_size=1, max_size=3))))
    return H, vals


@settings(max_examples=40)
@given(monomial_case(), st.sampled_from([QQ, F2, F3]))
def test_monomial_agreement(case, F):
    H, vals = case
    I_rel = RelativeIdeal.generated_by(H, vals)
    N = default_N(H, max(vals)) + H.conductor
    A = SemigroupAlgebra(H, F, N)
    I = monomial_ideal(A, vals)
    assert colength(I) == length_between(RelativeIdeal.unit(H), I_rel)
    assert mu(I) == I_rel.mu
    P = product(I, I)
    P_rel = rel_product(I_rel, I_rel)
    assert set(P.space.pivots) == {z for z in A.columns if z in P_rel}
    gens = [A.monomial(v) for v in I_rel.gens]
    v = is_ulrich_general(A, gens)
    w = is_ulrich_monomial(H, I_rel.gens)
    assert (v.is_ulrich, v.mu, v.len_R_mod_I, v.len_I_mod_I2) == (w.is_ulrich, w.mu, w.len_R_mod_I, w.len_I_mod_I2)


@settings(max_examples=20)
@given(monomial_case())
def test_verdict_stable_under_N(case):
    H, vals = case
    N = default_N(H, max(vals))
    r = []
    for n in (N, N + 7):
        A = SemigroupAlgebra(H, QQ, n)
        r.append(is_ulrich_general(A, [A.monomial(v) for v in vals]))
    assert r[0].is_ulrich == r[1].is_ulrich and r[0].len_R_mod_I == r[1].len_R_mod_I


def test_parse_series():
    assert parse_series("t^8 + 2*t^10 - t^12") == {8: 1, 10: 2, 12: -1}
    assert parse_series("t^8 + c*t^10", {"c": 0}) == {8: 1}
    assert template_symbols("t^8 + c1*t^10 + d*t^12") == {"c1", "d"}
    with pytest.raises(ValueError):
        parse_series("t^8 + c*t^10")


def test_ideal_closure_over_f2():
    H = make_semigroup([6, 8, 10, 11])
    A = SemigroupAlgebra(H, F2, 64)
    I = ideal_closure(A, [A.parse("t^8+t^10")])
    assert A.parse("t^8+t^10") in I
    assert A.parse("t^14+t^16") in I
    assert ideal_closure(A, [A.one]).dim == A.dim


def test_colength_and_socle_6_11():
    H = make_semigroup([6, 8, 10, 11])
    A = SemigroupAlgebra(H, QQ, default_N(H, 11))
    I = monomial_ideal(A, [6, 11])
    assert colength(I) == 3
    assert socle_type(A, I) == 2
    m = monomial_ideal(A, H.generators)
    assert socle_type(A, m) == 1


def test_generic_colength_four():
    H = make_semigroup([6, 8, 10, 11])
    A = SemigroupAlgebra(H, QQ, default_N(H, 12))
    I = ideal_closure(A, [A.parse("t^8 + 3*t^10 - 2*t^12"), A.parse("t^11")])
    assert colength(I) == 4


def test_conductor_chain_socle():
    H = make_semigroup([5, 7, 9, 13])
    A = SemigroupAlgebra(H, QQ, default_N(H, 13))
    c = monomial_ideal(A, [7, 9, 10, 13])
    assert colength(c) == 2 and socle_type(A, c) == 1


def test_mu2_witness_squares_to_zero():
    H = make_semigroup([6, 8, 10, 11])
    for F in (QQ, F2):
        A = SemigroupAlgebra(H, F, 64)
        v = is_ulrich_general(A, [A.parse("t^8+t^10"), A.parse("t^11")])
        assert v.is_ulrich and v.witness_c is not None


def test_errors():
    H = make_semigroup([6, 8, 10, 11])
    with pytest.raises(TruncationTooSmall):
        SemigroupAlgebra(H, QQ, 10)
    A = SemigroupAlgebra(H, QQ, 17)
    with pytest.raises(StabilizationFailed):
        colength(monomial_ideal(A, [16]))
    B = SemigroupAlgebra(H, QQ, 64)
    with pytest.raises(NoReductionFound):
        is_ulrich_general(B, [B.monomial(6), B.monomial(11)], reduction=B.monomial(11))
    with pytest.raises(ValueError):
        B.monomial(7)


def test_family_f2_all_ulrich():
    H = make_semigroup([6, 8, 10, 11])
    scan = family_scan(H, F2, ["t^8 + c1*t^10 + c2*t^12", "t^11 + d*t^12"], ["c1", "c2", "d"])
    assert len(scan.results) == 8 and scan.all_ulrich


def test_family_f3_ulrich_iff_d_zero():
    H = make_semigroup([6, 8, 10, 11])
    scan = family_scan(H, F3, ["t^8 + c1*t^10 + c2*t^12", "t^11 + d*t^12"], ["c1", "c2", "d"])
    assert len(scan.results) == 27
    assert all(v == (p[2] == "0") for p, v in scan.results)


def test_family_distinct_over_f3():
    H = make_semigroup([4, 5, 6])
    scan = family_scan(H, F3, ["t^4 - a*t^5", "t^6"], ["a"], check_distinct=True)
    assert scan.all_ulrich and scan.distinct


def test_family_d_nonzero_char_two_only():
    H = make_semigroup([6, 8, 10, 11])
    t = ["t^6 + c1*t^8 + c2*t^11", "t^10 + d*t^11"]
    assert family_scan(H, F2, t, ["c1", "c2", "d"], nonzero=["d"]).all_ulrich
    assert family_scan(H, F3, t, ["c1", "c2", "d"], nonzero=["d"]).none_ulrich
