import pytest
from hypothesis import given, settings

from conftest import generator_sets
from nsg.classify import classify
from nsg.errors import NotAdmissible, NotLocal
from nsg.extensions import (
    ExtensionReport,
    admissible_overrings,
    duplication_report,
    principal_ideal_check,
    extension_type_by_socle,
    quasi_trivial_algebra,
    verify_extension_blowup,
)
from nsg.fields import QQ, FieldSpec
from nsg.ideals import RelativeIdeal, blowup
from nsg.semigroup import NumericalSemigroup, make_semigroup, oversemigroups
from nsg.trunc import SemigroupAlgebra

H479 = make_semigroup([4, 7, 9])
T4567 = make_semigroup([4, 5, 6, 7])


def test_duplication_report_4_7_9():
    rep = duplication_report(H479, T4567)
    assert rep.I == (7, 8, 9)
    assert rep.len_RI == rep.len_TK == 2
    assert rep.is_2agl and rep.r_A == 5
    assert ExtensionReport.from_json(rep.to_json()) == rep


@pytest.mark.parametrize("alpha", [{}, {0: 1}, {4: 1}])
def test_blowup_certificate(alpha):
    cert = verify_extension_blowup(H479, T4567, alpha)
    assert cert.ok and cert.L_is_A_module
    assert cert.length_AL_mod_L == 2 == cert.len_TK


def test_blowup_certificate_over_f2():
    assert verify_extension_blowup(H479, T4567, {0: 1}, field=FieldSpec(2)).ok


def test_type_by_socle():
    assert extension_type_by_socle(H479, T4567) == 5


@settings(max_examples=15)
@given(generator_sets(max_gen=8, max_len=3))
def test_lengths_agree_on_admissible_overrings(gens):
    H = make_semigroup(gens)
    for T in admissible_overrings(H)[:6]:
        rep = duplication_report(H, T)
        assert rep.len_RI == rep.len_TK
        assert rep.r_A == rep.mu_T + H.type


def test_blowup_round_trip_small_genus():
    base = NumericalSemigroup.from_gaps(range(1, 14))
    for H in oversemigroups(base):
        if H.genus > 7 or H.symmetric:
            continue
        rep = duplication_report(H, blowup(H).ring)
        assert rep.is_2agl == classify(H).two_agl
        if rep.is_2agl:
            assert rep.i_equals_c and rep.t_equals_S


def test_not_admissible():
    with pytest.raises(NotAdmissible):
        duplication_report(H479, H479)
    with pytest.raises(NotAdmissible):
        duplication_report(H479, make_semigroup([4, 6, 7, 9]))


def test_not_local():
    A = SemigroupAlgebra(H479, QQ, 30)
    with pytest.raises(NotLocal):
        quasi_trivial_algebra(A, RelativeIdeal.unit(H479), A.element({0: 1}))


def test_quasi_trivial_algebra_builds():
    A = SemigroupAlgebra(H479, QQ, 20)
    I = RelativeIdeal.generated_by(H479, [7, 8, 9])
    B = quasi_trivial_algebra(A, I, A.element({4: 1}))
    assert B.dim == A.dim + len([e for e in A.columns if e in I])


def test_example_ideal_in_duplication():
    H = make_semigroup([3, 4, 5])
    eq, lengths, verdict = principal_ideal_check(H, 3, {3: 1})
    assert eq and lengths and verdict.is_ulrich
