import warnings
from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import generator_sets
from nsg.classify import classify
from nsg.errors import BoundTooSmallWarning, HypothesisFailed, NotGorenstein, PreconditionFailed
from nsg.semigroup import glue, make_semigroup
from nsg.ulrich import (
    UlrichVerdict,
    completeness_bound,
    enumerate_monomial_ulrich,
    enumeration_is_complete,
    gluing_ulrich_set,
    gorenstein_overring_ulrich,
    is_ulrich_monomial,
    min_multiplicity_xr,
    two_agl_ulrich_consequences,
)

GOLDEN = {
    (6, 8, 10, 11): [(6, 8, 10), (6, 11), (8, 11)],
    (3, 7, 8): [(3, 7, 8), (6, 7, 8)],
    (4, 9, 11, 14): [(4, 9, 11, 14)],
    (3, 4): [(4, 6)],
    (3, 5): [],
}


def gens_of(H):
    return [v.generators for v in enumerate_monomial_ulrich(H, completeness_bound(H))]


@pytest.mark.parametrize("gens", list(GOLDEN))
def test_golden_sets(gens):
    assert gens_of(make_semigroup(gens)) == GOLDEN[gens]


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_two_generated_family(l):
    H = make_semigroup([2, 2 * l + 1])
    assert gens_of(H) == [(2 * q, 2 * l + 1) for q in range(1, l + 1)]


def brute_ulrich(gens, B):
    """Monomial ideals with generators <= B satisfying the definition, by set arithmetic."""
    H = make_semigroup(gens)
    top = 6 * B + 4 * H.conductor + 10
    Hs = set(H.elements_below(top))
    pos = [h for h in sorted(Hs) if 0 < h <= B]
    found = set()
    for k in range(1, 6):
        for g in combinations(pos, k):
            I = {x + h for x in g for h in Hs if x + h < top}
            mingens = tuple(sorted(x for x in g if not any(x - y in Hs and x != y for y in g)))
            if mingens != g:
                continue
            a = min(g)
            lim = top - 2 * B - 2
            I2 = {x + y for x in I for y in I if x + y < top}
            if {z for z in I2 if z < lim} != {a + z for z in I if a + z < lim}:
                continue
            colen = len(Hs - I)
            n = len(g)
            if n >= 2 and len({z for z in I if z < lim} - I2) == n * colen:
                found.add(g)
    return sorted(found)


@pytest.mark.parametrize("gens", [[3, 4], [3, 5], [2, 7], [4, 5, 6], [3, 7, 8], [4, 6, 7], [5, 6, 7, 8, 9]])
def test_enumeration_matches_brute_force(gens):
    H = make_semigroup(gens)
    B = completeness_bound(H)
    assert gens_of(H) == brute_ulrich(gens, B)


@settings(max_examples=25)
@given(generator_sets(max_gen=9, max_len=3))
def test_completeness_bound(gens):
    H = make_semigroup(gens)
    B = completeness_bound(H)
    assert enumeration_is_complete(H, B)
    a = enumerate_monomial_ulrich(H, B)
    b = enumerate_monomial_ulrich(H, B + 2 * H.conductor + 5)
    assert a == b
    for v in a:
        assert v.is_ulrich and v.len_I_mod_I2 == v.mu * v.len_R_mod_I
        assert v.reduction_valuation == v.mu * v.len_R_mod_I
        assert UlrichVerdict.from_json(v.to_json()) == v


def test_verdict_fields():
    H = make_semigroup([6, 8, 10, 11])
    v = is_ulrich_monomial(H, [6, 11])
    assert v.is_ulrich and v.mu == 2 and v.len_R_mod_I == 3 and v.witness_c == 16
    assert not is_ulrich_monomial(H, [6]).is_ulrich
    with pytest.raises(ValueError):
        is_ulrich_monomial(H, [7])


def test_small_bound_warns():
    H = make_semigroup([6, 8, 10, 11])
    with pytest.warns(BoundTooSmallWarning):
        enumerate_monomial_ulrich(H, 8)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        enumerate_monomial_ulrich(make_semigroup([3, 5]), 16)


@pytest.mark.parametrize("gens", [[3, 4], [3, 5], [2, 9], [4, 5, 6], [3, 7], [5, 7], [6, 7, 8, 9, 10]])
def test_gorenstein_overrings(gens):
    H = make_semigroup(gens)
    pairs = gorenstein_overring_ulrich(H)
    two_gen = [v.generators for v in enumerate_monomial_ulrich(H, completeness_bound(H)) if v.mu == 2]
    assert [g for _, g in pairs] == sorted(two_gen)


def test_gorenstein_overrings_requires_symmetric():
    with pytest.raises(NotGorenstein):
        gorenstein_overring_ulrich(make_semigroup([4, 7, 9]))


@pytest.mark.parametrize("alpha,expected", [(11, []), (13, []), (15, [(8, 15)]), (17, [(8, 17)]), (19, [(8, 19)]), (21, [(8, 21), (14, 21)])])
def test_gluing(alpha, expected):
    H1 = make_semigroup([4, 7, 9])
    assert gluing_ulrich_set(H1, alpha) == expected
    rep = classify(glue(H1, alpha))
    assert rep.two_agl and not rep.multiplicity_minimal
    assert rep.conductor_generators == tuple(2 * a for a in H1.generators)


def test_gluing_hypothesis():
    with pytest.raises(HypothesisFailed):
        gluing_ulrich_set(make_semigroup([3, 5]), 9)


@pytest.mark.parametrize("gens", [[5, 7, 9, 13], [4, 9, 11, 14], [6, 8, 10, 11], [3, 7, 8]])
def test_two_agl_consequences(gens):
    H = make_semigroup(gens)
    for v in enumerate_monomial_ulrich(H, completeness_bound(H)):
        assert two_agl_ulrich_consequences(H, v).all_hold


def test_c_is_ulrich_iff_s_gorenstein_and_free():
    for gens in ([5, 7, 9, 13], [4, 9, 11, 14], [6, 8, 10, 11], [3, 7, 8], [4, 7, 10, 13]):
        H = make_semigroup(gens)
        rep = classify(H)
        if not rep.two_agl:
            continue
        c_ulrich = is_ulrich_monomial(H, rep.conductor_generators).is_ulrich
        assert c_ulrich == (rep.s_gorenstein and rep.kr_free)


def test_min_multiplicity():
    assert min_multiplicity_xr(make_semigroup([3, 7, 8])) == [(3, 7, 8), (6, 7, 8)]
    with pytest.raises(PreconditionFailed):
        min_multiplicity_xr(make_semigroup([5, 7, 9, 13]))
