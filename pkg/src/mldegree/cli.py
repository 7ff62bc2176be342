"""Command-line front end.

Exit codes: 0 success, 2 malformed input, 3 failed hypothesis or degenerate
system, 4 cross-check disagreement, 5 precision exhausted.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stdout
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from mldegree import arrangement as arr
from mldegree import formulas, oracle
from mldegree.errors import InputError, MLDegreeError, SmoothnessHypothesisViolated
from mldegree.exactmath import format_rational, parse_rational
from mldegree.io import arrangement_from_json, load_json, model_from_json, oracle_model_from_json

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_DISAGREE, EXIT_PRECISION = 0, 2, 3, 4, 5
MIN_BITS, MAX_BITS = 64, 4096


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse already exits 2; keep the message on stderr
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _precision(text: str) -> int:
    try:
        bits = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"precision must be an integer, got {text!r}")
    if not MIN_BITS <= bits <= MAX_BITS:
        raise argparse.ArgumentTypeError(f"precision must lie in [{MIN_BITS}, {MAX_BITS}]")
    return bits


def _tol(text: str) -> Fraction:
    """Accept "p/q", an integer, or "2^-k"."""
    t = text.strip().replace(" ", "")
    try:
        if t.startswith("2^"):
            return Fraction(2) ** int(t[2:])
        value = parse_rational(t)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad tolerance {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--precision", type=_precision, default=oracle.DEFAULT_PRECISION,
                        help="starting working precision in bits (64..4096)")
    common.add_argument("--tol", type=_tol, default=Fraction(1, 2 ** 40),
                        help="certification radius, e.g. 2^-40 or 1/1000")
    common.add_argument("--seed", type=int, default=oracle.DEFAULT_SEED,
                        help="seed for random shears and weight draws")
    common.add_argument("--explain", action="store_true", help="print the per-term breakdown")
    common.add_argument("--crosscheck", action="store_true", help="recompute by an independent route")

    parser = _Parser(prog="mldegree", description="Exact maximum likelihood degree computations.")
    parser.add_argument("--all-golden", action="store_true", help="run every bundled golden example")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("generic", parents=[common], help="dense generic model")
    p.add_argument("-d", type=int, required=True, help="number of parameters")
    p.add_argument("-b", type=_int_list, required=True, help="degrees, comma separated")
    p.add_argument("--series", type=int, metavar="N", help="also print coefficients of z^0..z^N")

    p = sub.add_parser("toric", parents=[common], help="toric model from Newton polytopes")
    p.add_argument("model", help="model JSON file")
    p.add_argument("--fastpath", action="store_true", help="use the planar area formula")

    p = sub.add_parser("arrangement", parents=[common], help="linear model from a hyperplane arrangement")
    p.add_argument("arrangement", help="arrangement JSON file")
    p.add_argument("-u", type=_int_list, help="data vector, comma separated")
    p.add_argument("--brute", action="store_true", help="cross-check regions by sign-vector enumeration")

    p = sub.add_parser("oracle", parents=[common], help="count critical points directly (d <= 2)")
    p.add_argument("model", help="oracle model JSON file")

    p = sub.add_parser("viro", parents=[common], help="plane curve bounds")
    p.add_argument("-b", type=_int_list, required=True, help="curve degrees, comma separated")
    return parser


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_generic(args) -> int:
    value = formulas.generic_ml_degree(args.d, args.b)
    payload = {"d": args.d, "degrees": args.b, "ml_degree": value}
    lines = [f"ML degree: {value}"]
    if args.series is not None:
        if args.series < 0:
            raise InputError("--series needs a nonnegative order")
        coeffs = formulas.generic_series(args.d, args.b, args.series)
        payload["series"] = coeffs
        lines.append("series: " + ", ".join(str(c) for c in coeffs))
    if args.crosscheck and args.d <= 2:
        payload["crosscheck"] = _crosscheck_generic(args)
        lines.append(f"oracle on random coefficients: {payload['crosscheck']['oracle']} "
                     f"({'agree' if payload['crosscheck']['agree'] else 'DISAGREE'})")
        _emit(args, payload, lines)
        return EXIT_OK if payload["crosscheck"]["agree"] else EXIT_DISAGREE
    _emit(args, payload, lines)
    return EXIT_OK


def _crosscheck_generic(args) -> dict:
    import random

    rng = random.Random(args.seed)
    f, u = oracle.random_generic_model(rng, args.d, args.b)
    rep = oracle.count_critical(oracle.build_system(f, u), precision=args.precision, tol=args.tol)
    value = formulas.generic_ml_degree(args.d, args.b)
    return {"oracle": rep.complex_count, "formula": value, "agree": rep.complex_count == value}


def cmd_toric(args) -> int:
    spec = model_from_json(load_json(args.model))
    if isinstance(spec, formulas.DenseModelSpec):
        args.d, args.b, args.series = spec.d, list(spec.degrees), None
        return cmd_generic(args)
    if args.fastpath:
        value = formulas.toric_ml_degree_2d_fastpath(spec)
        _emit(args, {"ml_degree": value, "method": "area"}, [f"ML degree: {value} (area formula)"])
        return EXIT_OK
    try:
        res = formulas.toric_ml_degree(spec)
    except SmoothnessHypothesisViolated as exc:
        cone = list(exc.cone) if exc.cone is not None else None
        print(f"smoothness hypothesis violated: {exc} (cone {cone})", file=sys.stderr)
        return EXIT_HYPOTHESIS
    fan = res.support.fan
    support = sorted(res.support.support)
    payload = {
        "ml_degree": res.value,
        "exact": res.exact,
        "support": [j + 1 for j in support],
        "rays": [list(r) for r in fan.rays],
        "terms": [{"label": label, "value": format_rational(v)} for label, v in res.explain()],
        "notes": res.notes,
    }
    lines = [f"ML degree: {res.value}" + ("" if res.exact else " (upper bound)")]
    lines.append("rays: " + " ".join(f"x{j + 1}={tuple(r)}" for j, r in enumerate(fan.rays)))
    lines.append("support I: {" + ", ".join(f"x{j + 1}" for j in support) + "}")
    if args.explain:
        for label, v in res.explain():
            lines.append(f"  {label:>24} {'+' if v >= 0 else '-'} {format_rational(abs(v))}")
    lines += [f"note: {n}" for n in res.notes]
    code = EXIT_OK
    if args.crosscheck and spec.d == 2:
        try:
            fast = formulas.toric_ml_degree_2d_fastpath(spec)
        except MLDegreeError as exc:
            lines.append(f"area formula not applicable: {exc}")
            payload["crosscheck"] = None
        else:
            payload["crosscheck"] = {"area_formula": fast, "agree": fast == res.value}
            lines.append(f"area formula: {fast} ({'agree' if fast == res.value else 'DISAGREE'})")
            if fast != res.value:
                code = EXIT_DISAGREE
    _emit(args, payload, lines)
    return code


def cmd_arrangement(args) -> int:
    A = arrangement_from_json(load_json(args.arrangement))
    poset = arr.build_poset(A)
    chi = arr.characteristic_polynomial(poset)
    bounded = arr.bounded_regions(A)
    total = arr.total_regions(A)
    u = args.u if args.u is not None else [1] * A.n
    lin = arr.linear_ml_degree(A, u, verify=args.crosscheck, seed=args.seed)
    payload = {
        "bounded_regions": bounded,
        "regions": total,
        "characteristic_polynomial": [format_rational(c) for c in chi.coeffs],
        "ml_degree": lin.ml_degree,
        "all_critical_points_real": lin.all_critical_points_real,
        "note": lin.note,
    }
    lines = [
        f"bounded regions: {bounded}",
        f"regions: {total}",
        f"characteristic polynomial: {chi}",
        f"ML degree: {lin.ml_degree}",
        f"note: {lin.note}",
    ]
    code = EXIT_OK
    if lin.verified_by_oracle is not None:
        payload["oracle_agrees"] = lin.verified_by_oracle
        lines.append(f"oracle: {'agree' if lin.verified_by_oracle else 'DISAGREE'}")
        if not lin.verified_by_oracle:
            code = EXIT_DISAGREE
    if args.brute:
        bb = arr.bounded_regions_bruteforce(A)
        tb = arr.total_regions_bruteforce(A)
        ok = bb == bounded and tb == total
        payload["brute_force"] = {"bounded_regions": bb, "regions": tb, "agree": ok}
        lines.append(f"brute force: bounded {bb}, regions {tb} ({'agree' if ok else 'DISAGREE'})")
        if not ok:
            code = EXIT_DISAGREE
    _emit(args, payload, lines)
    return code


def cmd_oracle(args) -> int:
    model = oracle_model_from_json(load_json(args.model))
    system = oracle.build_system(model.polynomials, model.weights, torus=model.torus)
    rep = oracle.count_critical(system, precision=args.precision, tol=args.tol, seed=args.seed)
    payload = rep.to_json()
    lines = [
        f"complex critical points: {rep.complex_count}",
        f"real critical points: {rep.real_count}",
        f"certified: {'yes' if rep.certified else 'no'} ({rep.precision_used} bits)",
        f"filtered on the divisor: {rep.filtered_extraneous}",
    ]
    if len(rep.roots) <= 12:
        for pt in rep.roots:
            lines.append("  point: (" + ", ".join(oracle._format_complex(z) for z in pt) + ")")
    lines += [f"caveat: {c}" for c in rep.caveats]
    code = EXIT_OK
    if args.crosscheck:
        formula_value, method = _oracle_formula(model)
        if model.generic_coefficients:
            ok = formula_value == rep.complex_count
            verdict = "agree" if ok else "DISAGREE"
        else:
            ok = rep.complex_count <= formula_value
            verdict = "within bound" if ok else "EXCEEDS BOUND"
        payload["crosscheck"] = {"formula": formula_value, "method": method, "agree": ok}
        lines.append(f"{method} formula: {formula_value} ({verdict})")
        if not ok:
            code = EXIT_DISAGREE
    _emit(args, payload, lines)
    return code


def _oracle_formula(model) -> tuple[int, str]:
    method = model.formula or ("toric" if model.torus or any(p.is_laurent() for p in model.polynomials) else "dense")
    if method == "dense":
        return formulas.generic_ml_degree(model.d, model.degrees()), "dense"
    spec = formulas.ToricModelSpec(model.newton_polytopes(), model.weights)
    return formulas.toric_ml_degree(spec).value, "toric"


def cmd_viro(args) -> int:
    bound = formulas.viro_bound(args.b)
    degree = formulas.plane_curve_ml_degree(args.b)
    _emit(args, {"viro_bound": bound, "ml_degree": degree},
          [f"Viro bound: {bound}", f"plane-curve ML degree: {degree}"])
    return EXIT_OK


COMMANDS = {
    "generic": cmd_generic,
    "toric": cmd_toric,
    "arrangement": cmd_arrangement,
    "oracle": cmd_oracle,
    "viro": cmd_viro,
}


def _fixture_dir() -> Path:
    return Path(str(resources.files("mldegree") / "fixtures"))


def run_golden() -> int:
    """Run every case listed in the bundled golden index; one PASS/FAIL line each."""
    base = _fixture_dir()
    cases = load_json(base / "golden.json")["cases"]
    failures = 0
    for case in cases:
        argv = [str(base / a) if a.endswith(".json") else a for a in case["argv"]] + ["--json"]
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = main(argv)
        ok = code == case.get("exit", 0)
        if ok and "expect" in case:
            out = json.loads(buf.getvalue())
            ok = all(out.get(k) == v for k, v in case["expect"].items())
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} {case['name']}")
    return EXIT_OK if failures == 0 else EXIT_DISAGREE


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.all_golden:
        return run_golden()
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except MLDegreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
