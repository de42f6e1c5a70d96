"""Check stored presentations and a family of 2x2-minor ideals."""

from nsg.presentations import bundled_presentation, minors_family, verify_presentation

for name in ("5-7-9-13", "4-9-11-14"):
    r = verify_presentation(bundled_presentation(name), 8)
    print(name, "shape", r.shape, "hypothesis", r.hypothesis, "complex", r.complex_LN and r.complex_NM,
          "Hilbert dims", r.evidence["quotient_dims"])

for ells in ((2, 1, 1), (2, 2, 2), (3, 2, 2), (3, 1, 1, 1)):
    f = minors_family(ells)
    print(ells, "weights", f.weights, "->", f.reason, f.classification or "")
