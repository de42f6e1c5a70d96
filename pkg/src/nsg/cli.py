"""Command-line front end.  Output is always JSON on stdout.

Exit codes: 0 success, 1 corpus mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import NsgError


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    S = argparse.SUPPRESS
    p.add_argument("--json", action="store_true", default=S, help="indented JSON output")
    p.add_argument("--field", default=S, help="q or fp:<p> (default q)")
    p.add_argument("--N", type=int, default=S, help="truncation degree")
    p.add_argument("--bound", type=int, default=S, help="generator bound for enumerations")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    p = argparse.ArgumentParser(prog="nsg", description="numerical semigroup ring computations", parents=[common])
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("info", parents=[common], help="basic invariants")
    s.add_argument("gens")

    s = sub.add_parser("classify", parents=[common], help="Gorenstein / AGL / 2-AGL report")
    s.add_argument("gens")
    s.add_argument("--hilbert", type=int, metavar="n", help="append the Hilbert table up to n")

    s = sub.add_parser("ulrich", parents=[common], help="monomial Ulrich ideals")
    s.add_argument("gens")
    s.add_argument("--max-mu", type=int)

    s = sub.add_parser("glue", parents=[common], help="gluing <2H1, alpha>")
    s.add_argument("gens")
    s.add_argument("--alpha", type=int, required=True)
    s.add_argument("--ulrich", action="store_true", help="two-generated Ulrich set")

    s = sub.add_parser("ext", parents=[common], help="quasi-trivial extension along T")
    s.add_argument("gens")
    s.add_argument("--T", required=True, help="generators of the overring")
    s.add_argument("--alpha", default=None, help='series such as "0", "1" or "t^4"')

    s = sub.add_parser("verify-ideal", parents=[common], help="Ulrich test for a non-monomial ideal")
    s.add_argument("gens")
    s.add_argument("--gens", dest="ideal", required=True, help='comma-separated series, e.g. "t^8+t^10,t^11"')

    s = sub.add_parser("presentation", parents=[common], help="presentation checks")
    s.add_argument("action", choices=["verify"])
    s.add_argument("file")
    s.add_argument("--degree", type=int, default=10)

    s = sub.add_parser("corpus", parents=[common], help="golden corpus")
    s.add_argument("action", choices=["run", "list"])
    s.add_argument("which", nargs="?", default="all")
    s.add_argument("--dir", default=None)
    return p


def _H(text):
    from .semigroup import make_semigroup, parse_generators

    return make_semigroup(parse_generators(text))


def _field(args):
    from .fields import FieldSpec

    return FieldSpec.parse(getattr(args, "field", "q"))


def cmd_info(args):
    from .semigroup import invariants

    H = _H(args.gens)
    d = {"generators": list(H.generators)}
    d.update(invariants(H).to_json())
    d["gaps"] = list(H.gaps)
    return d, 0


def cmd_classify(args):
    from .classify import classify

    return classify(_H(args.gens), args.hilbert).to_json(), 0


def cmd_ulrich(args):
    from .ulrich import completeness_bound, enumerate_monomial_ulrich

    H = _H(args.gens)
    bound = getattr(args, "bound", None)
    if bound is None:
        bound = completeness_bound(H)
    return [v.to_json() for v in enumerate_monomial_ulrich(H, bound, args.max_mu)], 0


def cmd_glue(args):
    from .classify import classify
    from .semigroup import glue
    from .ulrich import gluing_ulrich_set

    H1 = _H(args.gens)
    H = glue(H1, args.alpha)
    rep = classify(H)
    d = {
        "generators": list(H.generators),
        "sally_rank": rep.sally_rank,
        "two_agl": rep.two_agl,
        "conductor_generators": list(rep.conductor_generators),
        "multiplicity_minimal": rep.multiplicity_minimal,
    }
    if args.ulrich:
        d["ulrich_pairs"] = [list(p) for p in gluing_ulrich_set(H1, args.alpha)]
    return d, 0


def cmd_ext(args):
    from .extensions import duplication_report, verify_extension_blowup
    from .trunc import parse_series

    H, T = _H(args.gens), _H(args.T)
    d = duplication_report(H, T).to_json()
    if args.alpha is not None:
        F = _field(args)
        alpha = {k: v for k, v in parse_series(args.alpha).items() if F(v)}
        d["alpha"] = args.alpha
        d["certificate"] = verify_extension_blowup(H, T, alpha, getattr(args, "N", None), F).to_json()
    return d, 0


def cmd_verify_ideal(args):
    from .trunc import SemigroupAlgebra, colength, default_N, ideal_closure, is_ulrich_general, socle_type

    H = _H(args.gens)
    F = _field(args)
    texts = [t for t in args.ideal.split(",") if t.strip()]
    N = getattr(args, "N", None)
    if N is None:
        from .trunc import parse_series

        top = max(max(parse_series(t) or {0: 0}) for t in texts)
        N = default_N(H, top)
    A = SemigroupAlgebra(H, F, N)
    gens = [A.parse(t) for t in texts]
    I = ideal_closure(A, gens)
    v = is_ulrich_general(A, gens)
    d = v.to_json()
    d.update({"field": str(F), "N": N, "generators": texts, "colength": colength(I), "socle_type": socle_type(A, I)})
    return d, 0


def cmd_presentation(args):
    from .presentations import PresentationData, verify_presentation

    rep = verify_presentation(PresentationData.load(args.file), args.degree)
    d = rep.to_json()
    ok = d["generators_vanish"] and d["hypothesis"] and (d["evidence"] is None or d["evidence"]["holds"])
    return d, 0 if ok else 1


def cmd_corpus(args):
    from .corpus import corpus_verify, load_cases

    if args.action == "list":
        return [{"id": c.id, "kind": c.kind, "anchor": c.anchor} for c in load_cases(args.dir)], 0
    only = None if args.which == "all" else args.which
    results = corpus_verify(args.dir, only)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.id} [{r.anchor}]", file=sys.stderr)
    d = {
        "passed": sum(r.passed for r in results),
        "total": len(results),
        "cases": [r.to_json() for r in results],
    }
    return d, 0 if all(r.passed for r in results) else 1


COMMANDS = {
    "info": cmd_info,
    "classify": cmd_classify,
    "ulrich": cmd_ulrich,
    "glue": cmd_glue,
    "ext": cmd_ext,
    "verify-ideal": cmd_verify_ideal,
    "presentation": cmd_presentation,
    "corpus": cmd_corpus,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        out, code = COMMANDS[args.cmd](args)
    except (NsgError, ValueError) as e:
        print(f"nsg: error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    print(json.dumps(out, indent=2 if getattr(args, "json", False) else None, sort_keys=False))
    return code


if __name__ == "__main__":
    sys.exit(main())
