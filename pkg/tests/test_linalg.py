from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from sympy import GF, QQ as SQQ
from sympy.polys.matrices import DomainMatrix

from nsg.fields import QQ, FieldSpec
from nsg.linalg import Subspace, express, nullity, rank

matrices = st.lists(st.lists(st.integers(-3, 3), min_size=6, max_size=6), min_size=1, max_size=7)


def as_vecs(F, rows):
    return [{j: F(x) for j, x in enumerate(r) if F(x)} for r in rows]


def sympy_rank(rows, p):
    dom = GF(p) if p else SQQ
    return DomainMatrix([[dom(x) for x in r] for r in rows], (len(rows), len(rows[0])), dom).rank()


@pytest.mark.parametrize("p", [0, 2, 3, 7])
@given(rows=matrices)
def test_rank_matches_sympy(p, rows):
    F = FieldSpec(p)
    assert rank(F, as_vecs(F, rows)) == sympy_rank(rows, p)
    assert nullity(F, as_vecs(F, rows)) == len(rows) - sympy_rank(rows, p)


@given(rows=matrices, coeffs=st.lists(st.integers(-4, 4), min_size=7, max_size=7))
def test_express_finds_combination(rows, coeffs):
    F = QQ
    vecs = as_vecs(F, rows)
    target: dict = {}
    for c, v in zip(coeffs, vecs):
        for k, x in v.items():
            target[k] = target.get(k, 0) + c * x
    target = {k: x for k, x in target.items() if x}
    sol = express(F, target, vecs, 6)
    assert sol is not None
    back: dict = {}
    for c, v in zip(sol, vecs):
        for k, x in v.items():
            back[k] = back.get(k, 0) + c * x
    assert {k: x for k, x in back.items() if x} == target


def test_express_none_outside_span():
    assert express(QQ, {1: Fraction(1)}, [{0: Fraction(1)}], 3) is None


def test_subspace_membership_and_equality():
    S = Subspace(QQ, [{0: 1, 1: 1}, {1: 1, 2: 1}])
    assert {0: 1, 2: -1} in S
    assert {2: 1} not in S
    T = Subspace(QQ, [{0: 1, 2: -1}, {1: 1, 2: 1}])
    assert S == T


@pytest.mark.parametrize("p", [2, 3, 5, 11])
def test_field_axioms(p):
    F = FieldSpec(p)
    for a in F.elements():
        if a:
            assert F.mul(a, F.inv(a)) == F.one()
        assert F.add(a, F.neg(a)) == F.zero()


def test_field_parse():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("fp:5").p == 5
    assert str(FieldSpec.parse("fp:3")) == "fp:3"
    with pytest.raises(ValueError):
        FieldSpec.parse("fp:4")
    assert FieldSpec(2)(Fraction(3, 5)) == 1
