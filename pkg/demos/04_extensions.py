"""Quasi-trivial extensions of k[[4,7,9]] along the overring k[[4,5,6,7]]."""

from nsg.extensions import duplication_report, extension_type_by_socle, verify_extension_blowup
from nsg.semigroup import make_semigroup

H, T = make_semigroup([4, 7, 9]), make_semigroup([4, 5, 6, 7])
rep = duplication_report(H, T)
print("I = R:T generated by", rep.I, "| l(R/I) =", rep.len_RI, "| l(T/K) =", rep.len_TK, "| r(A) =", rep.r_A)
print("r(A) from the socle of A/xA:", extension_type_by_socle(H, T))
for alpha in ({}, {0: 1}, {4: 1}):
    c = verify_extension_blowup(H, T, alpha)
    print(f"alpha={alpha or 0}: dim B={c.dim_B} dim L={c.dim_L} l(A[L]/L)={c.length_AL_mod_L} ok={c.ok}")
