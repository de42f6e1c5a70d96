import pytest
from hypothesis import given

import oracles
from conftest import generator_sets
from nsg.classify import ClassificationReport, classify, hilbert_samuel, pf_symmetry, sally_rank, structure_of_kr
from nsg.errors import NotIntegral, NotPrimary, NotTwoAGL
from nsg.ideals import RelativeIdeal, canonical_ideal, integral_shifts, product
from nsg.semigroup import make_semigroup

TWO_AGL = {(5, 7, 9, 13): (1, 0), (4, 9, 11, 14): (1, 1), (6, 8, 10, 11): (1, 0), (3, 7, 8): (1, 0)}


@pytest.mark.parametrize("gens", list(TWO_AGL))
def test_two_agl_golden(gens):
    rep = classify(make_semigroup(gens))
    assert rep.two_agl and rep.sally_rank == 2
    assert rep.len_R_c == 2 and rep.len_S_K == 2
    assert all([rep.cond_c3, rep.cond_c4, rep.cond_c5, rep.cond_c6, rep.cond_c7])
    assert rep.kr_decomp == TWO_AGL[gens]
    assert rep.kr_free == (TWO_AGL[gens][1] == 0)


def test_agl_and_gorenstein():
    rep = classify(make_semigroup([4, 7, 9]))
    assert rep.sally_rank == 1 and rep.agl and not rep.gorenstein and not rep.two_agl
    assert rep.kr_decomp is None
    for g in ([2, 5], [3, 4], [3, 5]):
        rep = classify(make_semigroup(g))
        assert rep.sally_rank == 0 and rep.gorenstein and rep.agl


def test_hilbert_5_7_9_13():
    H = make_semigroup([5, 7, 9, 13])
    K = canonical_ideal(H)
    I = K.shift(7)
    assert I.gens == (7, 10)
    hd = hilbert_samuel(H, I, 10)
    assert hd.e0 == 7 and hd.e1 == 4
    assert hd.values[0] == 5


def brute_lengths(H, gens, n_max):
    bound = (n_max + 2) * max(gens) + H.conductor + 5
    Hset = set(H.elements_below(bound))
    P = set(Hset)
    out = []
    for _ in range(n_max + 1):
        P = {x + y for x in P for y in oracles.ideal_members(Hset, gens, bound) if x + y < bound}
        out.append(len(Hset - P))
    return out


@given(generator_sets(max_gen=9, max_len=3))
def test_hilbert_matches_brute_force(gens):
    H = make_semigroup(gens)
    if H.symmetric:
        I = RelativeIdeal.maximal(H)
    else:
        I = canonical_ideal(H).shift(integral_shifts(H, 1)[0])
    hd = hilbert_samuel(H, I, 4)
    assert list(hd.values[:5]) == brute_lengths(H, I.gens, 4)


@given(generator_sets(max_gen=10))
def test_sally_rank_independent_of_shift(gens):
    H = make_semigroup(gens)
    ranks = {sally_rank(H, a) for a in integral_shifts(H, 3)}
    assert ranks == {sally_rank(H)}


@given(generator_sets(max_gen=11))
def test_classify_consistency(gens):
    H = make_semigroup(gens)
    rep = classify(H)
    assert rep.gorenstein == (rep.sally_rank == 0)
    if rep.sally_rank <= 2:
        assert rep.len_S_K == rep.sally_rank
    if rep.two_agl:
        ell, m = rep.kr_decomp
        assert ell + m == H.type - 1
        assert rep.len_K_R == 2 * ell + m
        assert rep.mu_S == H.type + 1
    if not rep.gorenstein:
        mK = product(RelativeIdeal.maximal(H), canonical_ideal(H))
        assert mK.issubset(RelativeIdeal.unit(H)) == (rep.sally_rank == 1)
    assert ClassificationReport.from_json(rep.to_json()) == rep


def test_structure_of_kr_strict():
    with pytest.raises(NotTwoAGL):
        structure_of_kr(make_semigroup([4, 7, 9]))
    kr = structure_of_kr(make_semigroup([4, 9, 11, 14]))
    assert (kr.ell, kr.m) == (1, 1)


@pytest.mark.parametrize("gens", list(TWO_AGL))
def test_pf_symmetry(gens):
    rep = pf_symmetry(make_semigroup(gens))
    assert rep.free_symmetry and rep.nonfree_symmetry
    assert rep.free_criterion_holds
    assert (rep.generator_witness is not None) == classify(make_semigroup(gens)).kr_free


def test_hilbert_errors():
    H = make_semigroup([3, 5])
    with pytest.raises(NotIntegral):
        hilbert_samuel(H, RelativeIdeal.generated_by(H, [1]))
    with pytest.raises(NotPrimary):
        hilbert_samuel(H, RelativeIdeal.unit(H))
