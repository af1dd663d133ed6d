"""Command-line front end.

Subcommands: det, charpoly, roots, eigen, check, fuzz. Exit codes: 0 on
success, 1 when a check or campaign found a violation, 2 for input errors,
3 when an enumeration bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .errors import BoundExceededError, DomainError, ParseError, ShapeError
from .fuzz import (
    CAMPAIGN_CHECKS,
    Config,
    random_matrix,
    run_campaign,
    search_eigenpairs,
    trial_seed,
)
from .matrix import Matrix, char_poly, det, parse_matrix_any
from .oracle import census_power_tracks, sym_charpoly_coeff, sym_direct_charpoly
from .polynomial import (
    Polynomial,
    coeff_strings,
    parse_polynomial,
    polynomial_from_strings,
    roots,
)
from .scalar import ZERO, ghost, tangible
from .spectral import (
    Verdict,
    check_charpoly_power,
    check_corner_root_power,
    check_det_rule,
    check_eigen_power,
    check_frobenius,
    check_tangible_equality,
    check_trace_power,
    eigenvalues,
)

CHECK_IDS = (
    "thm13",
    "frobenius",
    "prop32",
    "thm36",
    "cor37",
    "cor38",
    "trace",
    "claim35",
    "charpoly-equiv",
)


def _read_matrix(path: str) -> Matrix:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix_any(fh.read())


def _read_polynomial(arg: str) -> Polynomial:
    if os.path.exists(arg):
        with open(arg, "r", encoding="utf-8") as fh:
            text = fh.read()
        if text.lstrip().startswith("["):
            try:
                strings = json.loads(text)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad JSON: {exc}") from exc
            return polynomial_from_strings(strings)
        return parse_polynomial(text)
    return parse_polynomial(arg)


def _emit(data: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print(text)


def cmd_det(args) -> int:
    report = det(_read_matrix(args.path), bound=args.bound)
    names = ", ".join(t.name for t in report.dominant_tracks) or "none"
    text = f"{report.value} ({report.classification.value}), dominant: {names}"
    _emit(report.to_json_dict(), args.json, text)
    return 0


def cmd_charpoly(args) -> int:
    poly = char_poly(_read_matrix(args.path), bound=args.bound)
    _emit({"coeffs": coeff_strings(poly), "text": str(poly)}, args.json, str(poly))
    return 0


def _root_report_text(report) -> str:
    lines = []
    if report.is_identically_root:
        lines.append("identically a root (every evaluation is ghost or -inf)")
    corners = ", ".join(f"{r} (mult {m})" for r, m in report.corner_roots) or "none"
    lines.append(f"corner roots: {corners}")
    intervals = ", ".join(str(iv) for iv in report.ghost_intervals) or "none"
    lines.append(f"ghost intervals: {intervals}")
    return "\n".join(lines)


def cmd_roots(args) -> int:
    report = roots(_read_polynomial(args.poly))
    _emit(report.to_json_dict(), args.json, _root_report_text(report))
    return 0


def cmd_eigen(args) -> int:
    report = eigenvalues(_read_matrix(args.path), bound=args.bound)
    values = ", ".join(f"{v} (mult {m})" for v, m in report.eigenvalues) or "none"
    region = ", ".join(str(iv) for iv in report.ghost_region) or "none"
    text = f"eigenvalues: {values}\nghost root region: {region}"
    _emit(report.to_json_dict(), args.json, text)
    return 0


def _verdict_text(v: Verdict) -> str:
    if v.holds is None:
        status = "N/A "
    else:
        status = "PASS" if v.holds else "FAIL"
    lines = [f"{status} {v.check}"]
    for record in v.detail:
        lines.append("  " + "  ".join(f"{k}={val}" for k, val in record.items()))
    if v.witness is not None:
        lines.append("  witness: " + json.dumps(v.witness, sort_keys=True))
    return "\n".join(lines)


def _print_verdicts(verdicts: list[Verdict], as_json: bool) -> int:
    if as_json:
        payload = [v.to_json_dict() for v in verdicts]
        print(json.dumps(payload[0] if len(payload) == 1 else payload,
                         sort_keys=True, indent=2))
    else:
        for v in verdicts:
            print(_verdict_text(v))
    return 1 if any(v.holds is False for v in verdicts) else 0


def _generated_matrices(args):
    fixed_m = args.power
    cfg = Config(
        trials=args.trials,
        seed=args.seed,
        min_n=2,
        max_n=args.max_n,
        min_m=fixed_m or 2,
        max_m=fixed_m or args.max_m,
        det_bound=args.bound,
    )
    for trial in range(cfg.trials):
        rng = random.Random(trial_seed(cfg.seed, trial))
        n = rng.randint(cfg.min_n, cfg.max_n)
        m = rng.randint(cfg.min_m, cfg.max_m)
        yield random_matrix(rng, n, cfg), random_matrix(rng, n, cfg), m


def cmd_check(args) -> int:
    check_id = args.theorem
    m = args.power or 2
    if check_id == "claim35":
        n = args.dim or 2
        verdicts = [
            census_power_tracks(n, m, k) for k in range(1, n + 1)
        ]
        if args.json:
            payload = [v.to_json_dict() for v in verdicts]
            if args.full_census:
                for k, entry in enumerate(payload, start=1):
                    entry["census"] = sym_charpoly_coeff(n, m, k).to_json_list()
            print(json.dumps(payload, sort_keys=True, indent=2))
            return 1 if any(v.holds is False for v in verdicts) else 0
        return _print_verdicts(verdicts, False)
    if check_id == "frobenius":
        grid = [ZERO] + [f(v) for v in range(-3, 4) for f in (tangible, ghost)]
        bad = []
        total = 0
        for a in grid:
            for b in grid:
                for n in range(1, 5):
                    total += 1
                    v = check_frobenius(a, b, n)
                    if not v.holds:
                        bad.append(v)
        summary = Verdict(
            "frobenius",
            not bad,
            bad[0].witness if bad else None,
            ({"cases": total, "failures": len(bad)},),
        )
        return _print_verdicts([summary], args.json)
    if check_id == "charpoly-equiv":
        if args.file:
            a = _read_matrix(args.file)
            same = char_poly(a, args.bound) == sym_direct_charpoly(a, args.bound)
            v = Verdict("charpoly-equiv", same, None if same else {"matrix": a.to_json_dict()})
            return _print_verdicts([v], args.json)
        failures = []
        total = 0
        for a, _b, _m in _generated_matrices(args):
            total += 1
            if char_poly(a, args.bound) != sym_direct_charpoly(a, args.bound):
                failures.append(a)
        v = Verdict(
            "charpoly-equiv",
            not failures,
            {"matrix": failures[0].to_json_dict()} if failures else None,
            ({"cases": total, "failures": len(failures)},),
        )
        return _print_verdicts([v], args.json)
    if check_id == "prop32":
        if not args.file:
            print("error: prop32 needs a matrix file (-f)", file=sys.stderr)
            return 2
        a = _read_matrix(args.file)
        pairs = search_eigenpairs(a, bound=args.bound, max_results=args.trials)
        if not pairs:
            v = Verdict("eigen-power", None, None,
                        ({"note": "no tangible eigenpair found on the search lattice"},))
            return _print_verdicts([v], args.json)
        verdicts = [check_eigen_power(a, v, x, m) for v, x in pairs]
        return _print_verdicts(verdicts, args.json)

    def single(a: Matrix, b: Matrix, power: int) -> Verdict:
        if check_id == "thm36":
            return check_charpoly_power(a, power, args.bound)
        if check_id == "cor37":
            return check_tangible_equality(a, power, args.bound)
        if check_id == "cor38":
            return check_corner_root_power(a, power, args.bound)
        if check_id == "trace":
            return check_trace_power(a, power)
        return check_det_rule(a, b, args.bound)

    if args.file:
        a = _read_matrix(args.file)
        b = _read_matrix(args.file_b) if args.file_b else a
        return _print_verdicts([single(a, b, m)], args.json)
    tallies = {"pass": 0, "fail": 0, "na": 0}
    first_failure = None
    for a, b, gen_m in _generated_matrices(args):
        v = single(a, b, gen_m)
        if v.holds is None:
            tallies["na"] += 1
        elif v.holds:
            tallies["pass"] += 1
        else:
            tallies["fail"] += 1
            first_failure = first_failure or v
    summary = Verdict(
        check_id,
        tallies["fail"] == 0,
        first_failure.witness if first_failure else None,
        (tallies,),
    )
    return _print_verdicts([summary], args.json)


def cmd_fuzz(args) -> int:
    cfg = Config(
        trials=args.trials,
        seed=args.seed,
        min_n=args.min_n,
        max_n=args.max_n,
        min_m=2,
        max_m=args.max_m,
        ghost_prob=args.ghost_prob,
        det_bound=args.bound,
    )
    result = run_campaign(cfg)
    if args.json:
        print(result.to_json())
    else:
        print(
            f"fuzz: {cfg.trials} trials, seed {cfg.seed}, "
            f"n in [{cfg.min_n},{cfg.max_n}], m in [{cfg.min_m},{cfg.max_m}]"
        )
        for name in CAMPAIGN_CHECKS:
            t = result.tallies[name]
            print(f"  {name:<6} pass {t['pass']:>5}  fail {t['fail']:>3}  na {t['na']:>5}")
        if result.violations:
            print("violations:")
            for item in result.violations:
                print(json.dumps(item, sort_keys=True))
        else:
            print("violations: none")
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supertropical",
        description="Exact max-plus (with ghosts) matrix and polynomial computations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_bound=True):
        p.add_argument("--json", action="store_true", help="emit JSON")
        if with_bound:
            p.add_argument("--bound", type=int, default=None,
                           help="determinant enumeration bound (default 9)")

    p = sub.add_parser("det", help="determinant with dominant tracks")
    p.add_argument("path", help="matrix file (text or JSON)")
    add_common(p)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("charpoly", help="characteristic polynomial")
    p.add_argument("path")
    add_common(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("roots", help="root report for a polynomial")
    p.add_argument("poly", help="polynomial string or file")
    add_common(p, with_bound=False)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("eigen", help="eigenvalues of a matrix")
    p.add_argument("path")
    add_common(p)
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("check", help="run one law checker")
    p.add_argument("theorem", choices=CHECK_IDS)
    p.add_argument("-f", "--file", help="matrix file")
    p.add_argument("-g", "--file-b", help="second matrix file (thm13)")
    p.add_argument("-m", "--power", type=int, default=None, help="matrix power")
    p.add_argument("-n", "--dim", type=int, default=None, help="dimension (claim35)")
    p.add_argument("--trials", type=int, default=100,
                   help="generated-input trials when no file is given")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--full-census", action="store_true",
                   help="include the complete monomial census in JSON output")
    add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fuzz", help="seeded law-checking campaign")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--ghost-prob", type=float, default=0.2)
    add_common(p)
    p.set_defaults(func=cmd_fuzz)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ShapeError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
