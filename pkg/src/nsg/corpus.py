"""Golden-example corpus: one JSON object per case, run through the library.

A case is {"id", "kind", "input", "expected", "anchor"}.  Every key of
``expected`` must equal the same key of the computed result.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib.resources import files
from pathlib import Path
from typing import Callable

from .errors import MalformedCase

KINDS = ("classify", "ulrich", "extension", "gluing", "presentation", "family")


@dataclass(frozen=True)
class CorpusCase:
    id: str
    kind: str
    input: dict
    expected: dict
    anchor: str

    @classmethod
    def from_json(cls, data: dict, source: str = "?") -> "CorpusCase":
        if not isinstance(data, dict):
            raise MalformedCase(f"{source}: case must be a JSON object")
        anchor = data.get("anchor")
        missing = [k for k in ("id", "kind", "input", "expected") if k not in data]
        if missing or not anchor:
            raise MalformedCase(f"{source}: missing {missing or ['anchor']}")
        if data["kind"] not in KINDS:
            raise MalformedCase(f"{source}: unknown kind {data['kind']!r}")
        if not isinstance(data["input"], dict) or not isinstance(data["expected"], dict) or not data["expected"]:
            raise MalformedCase(f"{source}: input and expected must be non-empty objects")
        return cls(data["id"], data["kind"], data["input"], data["expected"], anchor)

    def to_json(self) -> dict:
        return {"id": self.id, "kind": self.kind, "input": self.input, "expected": self.expected, "anchor": self.anchor}


@dataclass
class CaseResult:
    id: str
    kind: str
    anchor: str
    passed: bool
    mismatches: dict
    error: str | None = None

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "anchor": self.anchor,
            "passed": self.passed,
            "mismatches": self.mismatches,
            "error": self.error,
        }


def default_corpus_dir() -> Path:
    return Path(str(files("nsg") / "data" / "corpus"))


def load_cases(path=None) -> list[CorpusCase]:
    p = Path(path) if path else default_corpus_dir()
    paths = sorted(p.glob("*.json")) if p.is_dir() else [p]
    cases = []
    for f in paths:
        try:
            data = json.loads(f.read_text())
        except json.JSONDecodeError as e:
            raise MalformedCase(f"{f.name}: {e}") from e
        cases.append(CorpusCase.from_json(data, f.name))
    ids = [c.id for c in cases]
    if len(set(ids)) != len(ids):
        raise MalformedCase("duplicate case ids")
    return sorted(cases, key=lambda c: c.id)


# -- runners -------------------------------------------------------------------------


def _H(gens):
    from .semigroup import make_semigroup

    return make_semigroup(gens)


def run_classify(inp: dict) -> dict:
    from .classify import classify

    rep = classify(_H(inp["generators"]), inp.get("hilbert"))
    return rep.to_json()


def run_ulrich(inp: dict) -> dict:
    from .ulrich import completeness_bound, enumerate_monomial_ulrich

    def one(gens):
        H = _H(gens)
        bound = inp.get("bound", completeness_bound(H))
        return [list(v.generators) for v in enumerate_monomial_ulrich(H, bound, inp.get("max_mu"))]

    if "rings" in inp:
        return {"sets": [one(g) for g in inp["rings"]]}
    return {"ideals": one(inp["generators"])}


def run_gluing(inp: dict) -> dict:
    from .classify import classify
    from .ideals import RelativeIdeal
    from .semigroup import glue
    from .ulrich import gluing_ulrich_set

    H1 = _H(inp["H1"])
    alpha = inp["alpha"]
    H = glue(H1, alpha)
    rep = classify(H)
    m1R = RelativeIdeal.generated_by(H, [2 * a for a in H1.generators])
    c = RelativeIdeal.generated_by(H, rep.conductor_generators)
    return {
        "generators": list(H.generators),
        "pairs": [list(p) for p in gluing_ulrich_set(H1, alpha)],
        "two_agl": rep.two_agl,
        "conductor_is_m1R": c == m1R,
        "mu_c": c.mu,
        "multiplicity_minimal": rep.multiplicity_minimal,
    }


def run_extension(inp: dict) -> dict:
    from .extensions import duplication_report, extension_type_by_socle, verify_extension_blowup
    from .fields import FieldSpec

    H, T = _H(inp["generators"]), _H(inp["T"])
    out = duplication_report(H, T).to_json()
    F = FieldSpec.parse(inp.get("field", "q"))
    alphas = [{int(k): v for k, v in a.items()} for a in inp.get("alphas", [])]
    certs = [verify_extension_blowup(H, T, a, field=F) for a in alphas]
    out["blowup_certified"] = [c.ok for c in certs]
    out["length_AL_mod_L"] = [c.length_AL_mod_L for c in certs]
    if inp.get("socle_check"):
        out["r_A_by_socle"] = extension_type_by_socle(H, T, field=F)
    return out


def run_presentation(inp: dict) -> dict:
    from .presentations import PresentationData, bundled_presentation, verify_presentation

    P = bundled_presentation(inp["name"]) if "name" in inp else PresentationData.load(inp["path"])
    rep = verify_presentation(P, inp.get("degree_bound", 10)).to_json()
    rep["evidence_holds"] = bool(rep["evidence"] and rep["evidence"]["holds"])
    return rep


def run_family(inp: dict) -> dict:
    if "ells" in inp:
        from .presentations import minors_family

        return minors_family(inp["ells"], inp.get("degree_bound", 6)).to_json()
    from .fields import FieldSpec
    from .trunc import family_scan

    F = FieldSpec.parse(inp["field"])
    scan = family_scan(
        _H(inp["generators"]),
        F,
        inp["templates"],
        inp["params"],
        samples=inp.get("samples", 20),
        nonzero=inp.get("nonzero", ()),
        N=inp.get("N"),
    )
    out = scan.to_json()
    out["none_ulrich"] = scan.none_ulrich
    key = inp.get("split_on")
    if key:
        i = list(inp["params"]).index(key)
        out["ulrich_iff_zero"] = all(v == (p[i] == "0") for p, v in scan.results)
    out.pop("results")
    return out


RUNNERS: dict[str, Callable[[dict], dict]] = {
    "classify": run_classify,
    "ulrich": run_ulrich,
    "extension": run_extension,
    "gluing": run_gluing,
    "presentation": run_presentation,
    "family": run_family,
}


def run_case(case: CorpusCase) -> CaseResult:
    try:
        actual = RUNNERS[case.kind](case.input)
    except (KeyError, TypeError) as e:
        raise MalformedCase(f"{case.id}: bad input ({e})") from e
    except Exception as e:  # a crash is a failed case, not a crashed run
        return CaseResult(case.id, case.kind, case.anchor, False, {}, f"{type(e).__name__}: {e}")
    mism = {}
    for k, want in case.expected.items():
        got = actual.get(k, "<missing>")
        if got != want:
            mism[k] = {"expected": want, "actual": got}
    return CaseResult(case.id, case.kind, case.anchor, not mism, mism)


def corpus_verify(path=None, only: str | None = None, workers: int = 4) -> list[CaseResult]:
    """Run every case (or the one with id ``only``); results sorted by id."""
    cases = load_cases(path)
    if only is not None:
        cases = [c for c in cases if c.id == only]
        if not cases:
            raise MalformedCase(f"no case with id {only!r}")
    with ThreadPoolExecutor(max_workers=workers) as ex:
        results = list(ex.map(run_case, cases))
    return sorted(results, key=lambda r: r.id)
