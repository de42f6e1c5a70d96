"""Monomial Ulrich ideals: enumeration, the search bound and gluings."""

from nsg.classify import classify
from nsg.semigroup import glue, make_semigroup
from nsg.ulrich import completeness_bound, enumerate_monomial_ulrich, gluing_ulrich_set

H = make_semigroup([6, 8, 10, 11])
B = completeness_bound(H)
print(f"{H!r}: every monomial Ulrich ideal has generators <= {B}")
for v in enumerate_monomial_ulrich(H, B):
    print("  ", v.generators, f"mu={v.mu} l(R/I)={v.len_R_mod_I}")

H1 = make_semigroup([4, 7, 9])
for alpha in (11, 13, 15, 17, 19, 21):
    H = glue(H1, alpha)
    print(f"glue alpha={alpha}: {H!r} 2-AGL={classify(H).two_agl}  two-generated Ulrich: {gluing_ulrich_set(H1, alpha)}")
