"""Command-line front end.

Subcommands: report, verify, series, dual, macaulay, pure.  All output is
JSON (report also has --text); identical inputs and flags produce identical
bytes.  Exit codes: 2 parse/validation, 3 verification mismatch, 4 size
limit, 5 not an M-vector, 6 infeasible integrality.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import diagram as dg
from . import ideal as il
from . import invariants as iv
from . import macaulay as mc
from . import oracle as oc
from . import series as sr
from .errors import (
    FerrerError,
    NotMVector,
    SizeLimitExceeded,
    TooManyGenerators,
    ValidationError,
)
from .limits import Limits

EXIT_VALIDATION = 2
EXIT_MISMATCH = 3
EXIT_SIZE_LIMIT = 4
EXIT_NOT_M_VECTOR = 5
EXIT_INFEASIBLE = 6


def _emit(document: dict) -> None:
    print(json.dumps(document, indent=2))


def _load_diagram(path: str, limits: Limits) -> dg.PFerrerPartition:
    if path == "-":
        raw = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            raw = handle.read()
    tree = json.loads(raw)
    return dg.validate(tree, limits)


def _series_block(part: dg.PFerrerPartition) -> dict:
    profile = dg.diagonal_profile(part)
    c, delta = profile.df, profile.delta
    sigma = tuple(profile.count(k) for k in range(c + 1, delta + 1))
    n = len(il.ferrer_ideal(part).ambient)
    series = sr.hilbert_series_linear(c, part.depth, sigma, n - c)
    raw_numerator = sr.h_poly(c, part.depth) - sr.deviation_poly(sigma).shift(part.depth)
    return {
        "series": series.to_json(),
        "series_raw": {
            "numerator": list(raw_numerator.coeffs),
            "denom_exponent": n - c,
        },
        "pretty": series.pretty(),
        "h_vector": list(sr.h_vector(series)),
        "s_vector": list(sigma),
    }


def _sorted_primes(primes) -> list[list[str]]:
    keyed = sorted(
        (tuple(sorted(p, key=il.variable_key)) for p in primes),
        key=lambda prime: tuple(il.variable_key(v) for v in prime),
    )
    return [[str(v) for v in prime] for prime in keyed]


def _report_document(part: dg.PFerrerPartition, limits: Limits, certificate: bool) -> dict:
    profile = dg.diagonal_profile(part)
    summary = iv.homological_summary(part)
    table = iv.betti_table(part)
    reg_ideal, reg_quotient = iv.regularity(part)
    ideal = il.ferrer_ideal(part)
    doc = {
        "input": part.to_tree(),
        "depth": part.depth,
        "boxes": dg.box_count(part),
        "profile": {"s": list(profile.counts), "df": profile.df, "delta": profile.delta},
        "summary": {**summary.to_json(), "reg_ideal": reg_ideal, "reg_quotient": reg_quotient},
        "betti": table.to_json(),
        **_series_block(part),
        "generators": [str(g) for g in ideal.generators],
        "minimal_primes": _sorted_primes(il.minimal_primes(ideal, limits)),
    }
    if certificate:
        cert = iv.ara_certificate(part)
        doc["certificate"] = {
            "classes": [[str(m) for m in cls] for cls in cert.classes],
            "witnesses": [
                {
                    "pair": [str(w.first), str(w.second)],
                    "witness_class": w.witness_class,
                    "witness_monomial": str(w.witness),
                }
                for w in cert.witnesses
            ],
        }
    _assert_consistent(doc)
    return doc


def _assert_consistent(doc: dict) -> None:
    assert doc["betti"].get("1") == doc["boxes"]
    assert doc["summary"]["projdim"] == doc["profile"]["delta"]
    assert doc["summary"]["height"] == doc["profile"]["df"]
    assert len(doc["generators"]) == doc["boxes"]


def _render_text(doc: dict) -> str:
    lines = [
        f"diagram: {json.dumps(doc['input'])}",
        f"depth: {doc['depth']}   boxes: {doc['boxes']}",
        f"diagonals: s = {doc['profile']['s']}  df = {doc['profile']['df']}  delta = {doc['profile']['delta']}",
        f"n = {doc['summary']['n']}  height = {doc['summary']['height']}  dim = {doc['summary']['dim']}  depth(S/I) = {doc['summary']['depth']}",
        f"projdim = {doc['summary']['projdim']}  reg(I) = {doc['summary']['reg_ideal']}  ara = {doc['summary']['ara']}",
        f"betti: {doc['betti']}",
        f"hilbert series: {doc['pretty']}",
        f"h-vector: {doc['h_vector']}   s-vector: {doc['s_vector']}",
        f"generators ({len(doc['generators'])}): {', '.join(doc['generators'])}",
        f"minimal primes ({len(doc['minimal_primes'])}):",
    ]
    lines.extend("  (" + ", ".join(p) + ")" for p in doc["minimal_primes"])
    return "\n".join(lines)


def cmd_report(args, limits: Limits) -> int:
    try:
        part = _load_diagram(args.path, limits)
    except ValidationError as err:
        _emit({"error": type(err).__name__, "message": str(err), "path": err.path})
        return EXIT_VALIDATION
    doc = _report_document(part, limits, args.certificate)
    if args.text:
        print(_render_text(doc))
    else:
        _emit(doc)
    return 0


def _check_betti(part, limits) -> dict:
    table = iv.betti_table(part)
    brute = oc.graded_betti_brute(il.ferrer_ideal(part), limits)
    ok = brute.totals() == table.betti and brute.is_linear(part.depth)
    result = {"name": "betti_formula_vs_oracle", "ok": ok}
    if not ok:
        result["formula"] = list(table.betti)
        result["oracle"] = list(brute.totals())
        result["graded"] = brute.to_json()
    return result


def _check_series(part, limits, max_degree: int) -> dict:
    profile = dg.diagonal_profile(part)
    ideal = il.ferrer_ideal(part)
    sigma = tuple(profile.count(k) for k in range(profile.df + 1, profile.delta + 1))
    formula = sr.hilbert_series_linear(
        profile.df, part.depth, sigma, len(ideal.ambient) - profile.df
    )
    from_monomials = sr.hilbert_series_monomial(ideal, limits)
    truncated = oc.hilbert_function_truncated(ideal, max_degree, limits)
    ok = formula == from_monomials and formula.taylor(max_degree) == truncated
    result = {"name": "hilbert_series", "ok": ok}
    if not ok:
        result["formula"] = formula.to_json()
        result["from_monomials"] = from_monomials.to_json()
        result["truncated"] = list(truncated)
    return result


def _check_decomposition(part, limits, seed: int, max_degree: int) -> dict:
    ideal = il.ferrer_ideal(part)
    if part.depth == 1:
        return {"name": "intersection_decomposition", "ok": True, "skipped": "depth 1"}
    components = il.intersection_decomposition(part)
    intersection = components[0].ideal()
    for component in components[1:]:
        intersection = oc.intersect_monomial(intersection, component.ideal())
    ok = intersection.generators == ideal.generators
    rng = random.Random(seed)
    variables = list(ideal.ambient)
    for _ in range(32):
        chosen = rng.sample(variables, rng.randint(1, min(4, len(variables))))
        monomial = il.Monomial.of({v: rng.randint(1, 2) for v in chosen})
        if monomial.degree > max_degree:
            continue
        in_ideal = ideal.contains(monomial)
        in_all = all(c.ideal().contains(monomial) for c in components)
        if in_ideal != in_all:
            ok = False
            break
    result = {"name": "intersection_decomposition", "ok": ok}
    if not ok:
        result["intersection"] = [str(g) for g in intersection.generators]
        result["ideal"] = [str(g) for g in ideal.generators]
    return result


def _check_certificate(part) -> dict:
    cert = iv.ara_certificate(part)
    ok = len(cert.classes[0]) == 1 and cert.ara == dg.diagonal_profile(part).delta
    return {"name": "ara_certificate", "ok": ok, "ara": cert.ara}


def _check_height_projdim(part, limits) -> dict:
    profile = dg.diagonal_profile(part)
    ideal = il.ferrer_ideal(part)
    primes = il.minimal_primes(ideal, limits)
    brute = oc.graded_betti_brute(ideal, limits)
    ok = (
        min(len(p) for p in primes) == profile.df
        and brute.projdim == profile.delta
    )
    result = {"name": "height_and_projdim", "ok": ok}
    if not ok:
        result["min_prime"] = min(len(p) for p in primes)
        result["df"] = profile.df
        result["oracle_projdim"] = brute.projdim
        result["delta"] = profile.delta
    return result


def cmd_verify(args, limits: Limits) -> int:
    try:
        part = _load_diagram(args.path, limits)
    except ValidationError as err:
        _emit({"error": type(err).__name__, "message": str(err), "path": err.path})
        return EXIT_VALIDATION
    try:
        checks = [
            _check_betti(part, limits),
            _check_series(part, limits, args.max_degree),
            _check_decomposition(part, limits, args.seed, args.max_degree),
            _check_certificate(part),
            _check_height_projdim(part, limits),
        ]
    except (SizeLimitExceeded, TooManyGenerators) as err:
        _emit({"error": type(err).__name__, "message": str(err)})
        return EXIT_SIZE_LIMIT
    ok = all(check["ok"] for check in checks)
    _emit({"input": part.to_tree(), "seed": args.seed, "checks": checks, "ok": ok})
    return 0 if ok else EXIT_MISMATCH


def cmd_series(args, limits: Limits) -> int:
    try:
        part = _load_diagram(args.path, limits)
    except ValidationError as err:
        _emit({"error": type(err).__name__, "message": str(err), "path": err.path})
        return EXIT_VALIDATION
    profile = dg.diagonal_profile(part)
    doc = {
        "input": part.to_tree(),
        "c": profile.df,
        "p": part.depth,
        **_series_block(part),
    }
    _emit(doc)
    return 0


def cmd_dual(args, limits: Limits) -> int:
    try:
        part = _load_diagram(args.path, limits)
    except ValidationError as err:
        _emit({"error": type(err).__name__, "message": str(err), "path": err.path})
        return EXIT_VALIDATION
    profile = dg.diagonal_profile(part)
    ideal = il.ferrer_ideal(part)
    try:
        dual = il.alexander_dual(ideal, limits)
    except SizeLimitExceeded as err:
        _emit({"error": type(err).__name__, "message": str(err)})
        return EXIT_SIZE_LIMIT
    sigma = tuple(profile.count(k) for k in range(profile.df + 1, profile.delta + 1))
    primal, dual_series = sr.dual_series(
        profile.df, part.depth, sigma, len(ideal.ambient)
    )
    _emit(
        {
            "input": part.to_tree(),
            "primal": {"series": primal.to_json(), "pretty": primal.pretty()},
            "dual": {"series": dual_series.to_json(), "pretty": dual_series.pretty()},
            "dual_generators": [str(g) for g in dual.generators],
            "dual_h_vector": list(sr.h_vector(dual_series)),
        }
    )
    return 0


def cmd_macaulay(args, limits: Limits) -> int:
    try:
        h = tuple(int(chunk) for chunk in args.h.split(","))
    except ValueError:
        _emit({"error": "BadHVector", "message": f"cannot parse {args.h!r}"})
        return EXIT_VALIDATION
    check = mc.is_m_vector(h)
    if not check.ok:
        _emit(
            {
                "error": "NotMVector",
                "message": f"h_{check.index} <= {check.bound} is violated",
                "index": check.index,
                "bound": check.bound,
            }
        )
        return EXIT_NOT_M_VECTOR
    try:
        realization = mc.realize_mvector(h, limits)
    except NotMVector as err:
        _emit({"error": "NotMVector", "message": str(err)})
        return EXIT_NOT_M_VECTOR
    except (SizeLimitExceeded, TooManyGenerators) as err:
        _emit({"error": type(err).__name__, "message": str(err)})
        return EXIT_SIZE_LIMIT
    _emit(
        {
            "h": list(h),
            "diagram": realization.diagram.to_tree(),
            "generators": [str(g) for g in realization.ideal.generators],
            "dual_generators": [str(g) for g in realization.dual.generators],
            "dual_h_vector": list(realization.dual_h_vector),
            "verified": realization.verified,
        }
    )
    return 0


def cmd_pure(args, limits: Limits) -> int:
    if args.a1 is not None:
        if args.a2 is None or args.beta0 is None:
            _emit({"error": "BadFlags", "message": "--a1 requires --a2 and --beta0"})
            return EXIT_VALIDATION
        record = iv.pure_codim2_betti(args.a1, args.a2, args.beta0)
        if record is None:
            _emit(
                {
                    "error": "Infeasible",
                    "message": f"({args.a1}, {args.a2}) does not support integral Betti numbers",
                }
            )
            return EXIT_INFEASIBLE
        _emit(
            {
                "type": [0, args.a1, args.a2],
                "betti": [args.beta0, record.beta1, record.beta2],
                "c": record.c,
                "alpha": record.alpha,
            }
        )
        return 0
    if args.c is None or args.p is None or args.alpha is None:
        _emit({"error": "BadFlags", "message": "need --a1/--a2/--beta0 or --c/--p/--alpha"})
        return EXIT_VALIDATION
    base_type = tuple([0] + [args.c + i for i in range(args.p)])
    base_betti = tuple(iv.betti_cm(args.c, args.p, j) for j in range(args.p + 1))
    scaled_type, scaled_betti = iv.scaled_resolution_type(base_type, base_betti, args.alpha)
    _emit({"type": list(scaled_type), "betti": list(scaled_betti), "alpha": args.alpha})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pferrer",
        description="Staircase diagrams in p dimensions: invariants, series, verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    report = sub.add_parser("report", help="full invariant report for a diagram")
    report.add_argument("path", help="diagram JSON file, or - for stdin")
    report.add_argument("--text", action="store_true", help="render as text instead of JSON")
    report.add_argument("--json", action="store_true", help="JSON output (default)")
    report.add_argument("--certificate", action="store_true", help="include the ara certificate")
    report.set_defaults(handler=cmd_report)

    verify = sub.add_parser("verify", help="formula-vs-brute-force verification")
    verify.add_argument("path")
    verify.add_argument("--max-degree", type=int, default=12, dest="max_degree")
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(handler=cmd_verify)

    series = sub.add_parser("series", help="Hilbert series of a diagram quotient")
    series.add_argument("path")
    series.set_defaults(handler=cmd_series)

    dual = sub.add_parser("dual", help="series and generators of the Alexander dual")
    dual.add_argument("path")
    dual.set_defaults(handler=cmd_dual)

    macaulay = sub.add_parser("macaulay", help="realize an M-vector as a diagram")
    macaulay.add_argument("--h", required=True, help="comma-separated entries, e.g. 1,4,3,4,1")
    macaulay.set_defaults(handler=cmd_macaulay)

    pure = sub.add_parser("pure", help="pure resolution arithmetic")
    pure.add_argument("--a1", type=int)
    pure.add_argument("--a2", type=int)
    pure.add_argument("--beta0", type=int)
    pure.add_argument("--c", type=int)
    pure.add_argument("--p", type=int)
    pure.add_argument("--alpha", type=int)
    pure.set_defaults(handler=cmd_pure)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        limits = Limits.from_env()
    except (ValueError, json.JSONDecodeError) as err:
        _emit({"error": "BadLimits", "message": str(err)})
        return EXIT_VALIDATION
    try:
        return args.handler(args, limits)
    except SizeLimitExceeded as err:
        _emit({"error": "SizeLimitExceeded", "message": str(err)})
        return EXIT_SIZE_LIMIT
    except json.JSONDecodeError as err:
        _emit({"error": "BadJSON", "message": str(err)})
        return EXIT_VALIDATION
    except FerrerError as err:
        _emit({"error": type(err).__name__, "message": str(err)})
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
