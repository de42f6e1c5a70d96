"""Non-monomial ideals whose Ulrich property depends on the characteristic."""

from nsg.fields import QQ, FieldSpec
from nsg.semigroup import make_semigroup
from nsg.trunc import family_scan

H = make_semigroup([6, 8, 10, 11])
templates = ["t^8 + c1*t^10 + c2*t^12", "t^11 + d*t^12"]
for F in (FieldSpec(2), FieldSpec(3), QQ):
    scan = family_scan(H, F, templates, ["c1", "c2", "d"], samples=10)
    ulrich = [p for p, v in scan.results if v]
    d_values = sorted({p[2] for p in ulrich})
    print(f"{F}: {len(ulrich)}/{len(scan.results)} samples Ulrich; d values among them: {d_values}")
