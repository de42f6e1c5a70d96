"""Sort a handful of semigroup rings by Sally rank and look at K/R."""

from nsg.classify import classify, pf_symmetry
from nsg.semigroup import make_semigroup

for gens in ([3, 5], [4, 7, 9], [5, 7, 9, 13], [4, 9, 11, 14], [3, 7, 8]):
    H = make_semigroup(gens)
    r = classify(H)
    label = "Gorenstein" if r.gorenstein else "AGL" if r.agl else "2-AGL" if r.two_agl else f"rank {r.sally_rank}"
    print(f"{H!r:16} type {r.type}  {label:10}  S = <{','.join(map(str, r.blowup_generators))}>", end="")
    if r.two_agl:
        ell, m = r.kr_decomp
        print(f"  K/R = (R/c)^{ell} + (R/m)^{m}", end="")
    print()

# the pseudo-Frobenius pairing behind the K/R splitting
s = pf_symmetry(make_semigroup([4, 9, 11, 14]))
print("PF pairing for <4,9,11,14>:", s.to_json())
