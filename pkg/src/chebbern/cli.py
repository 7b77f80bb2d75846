"""Command-line interface: ``chebbern {matrix,convert,eval,fit,verify}``.

Data goes to stdout (or ``--output``), diagnostics to stderr.
Exit codes: 0 success, 1 verification failure, 2 bad input, 3 singular matrix.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

import numpy as np

from .bernstein import BernsteinPoly, evaluate
from .exactnum import as_fraction
from .leastsq import Basis, FitProblem, IllConditionedError, Samples, fit
from .oracle import SingularMatrixError
from .serialize import (
    dump_value,
    fit_result_to_json,
    float_matrix_to_csv,
    float_matrix_to_json,
    load_value,
    matrix_to_csv,
    matrix_to_json,
    poly_from_json,
    poly_to_json,
    series_from_json,
    series_to_json,
)
from .transform import (
    ConversionMatrix,
    Direction,
    Provenance,
    convert_coeffs,
    forward_matrix,
    forward_matrix_float,
    inverse_matrix_exact,
    inverse_matrix_printed,
)
from .tschebyscheff import (
    Convention,
    GenChebSeries,
    SignMode,
    WeightParams,
    classical_u_shifted_bernstein,
    generalized_u_eval,
)
from .verification import all_expected_pass, run_verification

FLOAT_WARNING = (
    "warning: float mode uses 64-bit arithmetic; double factorials overflow "
    "near n=150 and the inverse loses accuracy well before that\n"
)


class UsageError(Exception):
    pass


def rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid rational {text!r}")


def mass(text: str) -> Fraction:
    v = rational(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"mass must be non-negative, got {text}")
    return v


def _common(p: argparse.ArgumentParser, with_n: bool = True):
    if with_n:
        p.add_argument("--n", type=int, default=None, help="degree")
    p.add_argument("--M", type=mass, default=Fraction(0), help="left endpoint mass (p/q)")
    p.add_argument("--N", type=mass, default=Fraction(0), help="right endpoint mass (p/q)")
    p.add_argument("--convention", choices=[c.value for c in Convention], default="printed")
    p.add_argument("--mode", choices=["exact", "float"], default="exact")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--output", "-o", default=None, help="write to file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chebbern", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    m = sub.add_parser("matrix", help="emit a change-of-basis matrix")
    _common(m)
    m.add_argument("--direction", choices=[d.value for d in Direction], default="gen2bern")
    m.add_argument("--provenance", choices=[p.value for p in Provenance], default=None,
                   help="bern2gen only: closed-form (printed) or exact inverse (default exact)")

    c = sub.add_parser("convert", help="convert a coefficient vector")
    _common(c)
    c.add_argument("--direction", choices=[d.value for d in Direction], default="gen2bern")
    c.add_argument("--provenance", choices=[p.value for p in Provenance], default=None)
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", "-i", help="JSON list, polynomial file or series file")
    src.add_argument("--coeffs", help="comma-separated coefficients")

    e = sub.add_parser("eval", help="evaluate a basis polynomial or a stored polynomial")
    _common(e, with_n=False)
    e.add_argument("--r", type=int, default=None, help="degree of the generalized polynomial")
    e.add_argument("--classical", action="store_true", help="evaluate U_r(2x-1) instead")
    e.add_argument("--sign-mode", choices=[s.value for s in SignMode], default="corrected")
    e.add_argument("--input", "-i", help="polynomial or series file to evaluate")
    e.add_argument("--x", required=True, nargs="+", help="abscissae in [0, 1]")

    f = sub.add_parser("fit", help="continuous least-squares fit on [0, 1]")
    _common(f)
    f.add_argument("--basis", choices=[b.value for b in Basis], default="power")
    tgt = f.add_mutually_exclusive_group(required=True)
    tgt.add_argument("--target", help="power-basis coefficients of f, comma-separated")
    tgt.add_argument("--samples", help="two-column CSV file of x,y samples")

    v = sub.add_parser("verify", help="run the identity checks")
    v.add_argument("--n", type=int, default=8)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--output", "-o", default=None)
    return parser


def _params(args) -> WeightParams:
    return WeightParams(args.M, args.N)


def _emit(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_matrix(args, n: int):
    """Return (exact ConversionMatrix or None, float array or None, meta)."""
    direction = Direction(args.direction)
    conv = Convention(args.convention)
    params = _params(args)
    if direction is Direction.GEN_TO_BERNSTEIN:
        if args.provenance == "exact":
            raise UsageError("gen2bern matrices come from the closed form only; drop --provenance exact")
        prov = Provenance.PRINTED_FORMULA
    else:
        prov = Provenance(args.provenance or "exact")
    meta = (n, params, direction, prov, conv)

    if args.mode == "float":
        sys.stderr.write(FLOAT_WARNING)
        if direction is Direction.GEN_TO_BERNSTEIN:
            arr = forward_matrix_float(n, params, conv)
        elif prov is Provenance.EXACT_INVERSE:
            arr = np.linalg.inv(forward_matrix_float(n, params, conv))
        else:
            arr = inverse_matrix_printed(n, params).as_array()
        return None, arr, meta

    if direction is Direction.GEN_TO_BERNSTEIN:
        m = forward_matrix(n, params, conv)
    elif prov is Provenance.EXACT_INVERSE:
        m = inverse_matrix_exact(n, params, conv)
    else:
        m = inverse_matrix_printed(n, params)
        m = ConversionMatrix(m.n, m.params, m.entries, m.direction, m.provenance, conv)
    return m, None, meta


def cmd_matrix(args):
    n = 0 if args.n is None else args.n
    if n < 0:
        raise UsageError("--n must be non-negative")
    m, arr, meta = _resolve_matrix(args, n)
    if m is not None:
        return matrix_to_json(m) if args.format == "json" else matrix_to_csv(m)
    return (float_matrix_to_json if args.format == "json" else float_matrix_to_csv)(arr, *meta)


def _read_vector(args) -> list:
    if args.coeffs is not None:
        vals = [t for t in args.coeffs.split(",") if t.strip()]
        return [float(t) if args.mode == "float" else as_fraction(t) for t in vals]
    with open(args.input) as fh:
        text = fh.read()
    data = json.loads(text)
    if isinstance(data, list):
        return [load_value(v) for v in data]
    if data.get("basis") == "bernstein":
        return list(poly_from_json(text).coeffs)
    if data.get("basis") == "gen-cheb2":
        return list(series_from_json(text).coeffs)
    raise UsageError("unrecognised coefficient file")


def cmd_convert(args):
    vec = _read_vector(args)
    n = len(vec) - 1
    if args.n is not None and args.n != n:
        raise UsageError(f"vector has {len(vec)} entries but --n {args.n} needs {args.n + 1}")
    if n < 0:
        raise UsageError("empty coefficient vector")
    m, arr, (_, params, direction, _, conv) = _resolve_matrix(args, n)
    if m is not None:
        out = convert_coeffs(vec, m)
    else:
        out = [float(v) for v in arr @ np.asarray(vec, dtype=float)]
    if args.format == "csv":
        return "\n".join(str(dump_value(v)) for v in out)
    if direction is Direction.GEN_TO_BERNSTEIN:
        return poly_to_json(BernsteinPoly(n, tuple(out)))
    return series_to_json(GenChebSeries(params, tuple(out), conv))


def cmd_eval(args):
    xs = [float(t) if args.mode == "float" else as_fraction(t) for t in args.x]
    if any(not 0 <= x <= 1 for x in xs):
        raise UsageError("abscissae must lie in [0, 1]")
    conv = Convention(args.convention)
    if args.input:
        with open(args.input) as fh:
            text = fh.read()
        kind = json.loads(text).get("basis")
        poly = poly_from_json(text) if kind == "bernstein" else series_from_json(text).to_bernstein()
        values = [evaluate(poly, x) for x in xs]
    elif args.r is not None:
        if args.r < 0:
            raise UsageError("--r must be non-negative")
        if args.classical:
            poly = classical_u_shifted_bernstein(args.r, SignMode(args.sign_mode))
            values = [evaluate(poly, x) for x in xs]
        else:
            values = [generalized_u_eval(args.r, _params(args), conv, x) for x in xs]
    else:
        raise UsageError("eval needs --r or --input")
    if args.mode == "float":
        values = [float(v) for v in values]
    if args.format == "csv":
        return "\n".join(["x,value"] + [f"{dump_value(x)},{dump_value(v)}" for x, v in zip(xs, values)])
    return json.dumps([{"x": dump_value(x), "value": dump_value(v)} for x, v in zip(xs, values)])


def _read_samples(path: str) -> Samples:
    xs, ys = [], []
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0].lstrip().startswith("#"):
                continue
            try:
                xs.append(float(row[0]))
                ys.append(float(row[1]))
            except (ValueError, IndexError):
                if xs:
                    raise UsageError(f"malformed sample row {row}")
                # header line
    return Samples(tuple(xs), tuple(ys))


def cmd_fit(args):
    n = 1 if args.n is None else args.n
    if args.samples:
        target = _read_samples(args.samples)
    else:
        vals = [t for t in args.target.split(",") if t.strip()]
        target = [float(t) for t in vals] if args.mode == "float" else [as_fraction(t) for t in vals]
        if args.mode == "float":
            coeffs = list(target)
            target = lambda x: np.polynomial.polynomial.polyval(x, coeffs)  # noqa: E731
    problem = FitProblem(target, n, Basis(args.basis), _params(args), Convention(args.convention))
    return fit_result_to_json(fit(problem))


def cmd_verify(args):
    results = run_verification(args.n)
    if args.format == "json":
        text = json.dumps({"n": args.n, "checks": [r.to_dict() for r in results],
                           "ok": all_expected_pass(results)}, indent=2)
    else:
        width = max(len(r.name) for r in results)
        text = "\n".join(f"{r.status:<8} {r.name:<{width}}  {r.detail}" for r in results)
    return text, all_expected_pass(results)


COMMANDS = {"matrix": cmd_matrix, "convert": cmd_convert, "eval": cmd_eval, "fit": cmd_fit}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            text, ok = cmd_verify(args)
            _emit(args, text)
            return 0 if ok else 1
        _emit(args, COMMANDS[args.command](args))
        return 0
    except SingularMatrixError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except IllConditionedError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except (UsageError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
