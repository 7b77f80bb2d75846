"""JSON and CSV formats for polynomials, series, matrices and fit results.

Exact values are written as ``"p/q"`` strings (``str(Fraction)``), so a dump
followed by a load reproduces every entry bit for bit. Floats are written as
JSON numbers (or ``repr`` in CSV).
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .bernstein import BernsteinPoly
from .exactnum import as_fraction
from .leastsq import FitResult
from .transform import ConversionMatrix, Direction, Provenance
from .tschebyscheff import Convention, GenChebSeries, WeightParams

__all__ = [
    "dump_value",
    "load_value",
    "poly_to_json",
    "poly_from_json",
    "series_to_json",
    "series_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "matrix_to_csv",
    "matrix_from_csv",
    "float_matrix_to_json",
    "float_matrix_to_csv",
    "fit_result_to_json",
]


def dump_value(v):
    if isinstance(v, float):
        return v
    return str(v)


def load_value(v):
    """Strings and ints load as Fractions, JSON floats stay floats."""
    if isinstance(v, float):
        return v
    if isinstance(v, (int, str)):
        return as_fraction(v)
    raise ValueError(f"cannot load coefficient {v!r}")


def poly_to_json(p: BernsteinPoly) -> str:
    return json.dumps(
        {"basis": "bernstein", "degree": p.degree, "coeffs": [dump_value(c) for c in p.coeffs]}
    )


def poly_from_json(text: str) -> BernsteinPoly:
    d = json.loads(text)
    if d.get("basis") != "bernstein":
        raise ValueError("not a Bernstein polynomial file")
    return BernsteinPoly(int(d["degree"]), tuple(load_value(c) for c in d["coeffs"]))


def series_to_json(s: GenChebSeries) -> str:
    return json.dumps({
        "basis": "gen-cheb2",
        "convention": s.convention.value,
        "M": str(s.params.mass_left),
        "N": str(s.params.mass_right),
        "coeffs": [dump_value(c) for c in s.coeffs],
    })


def series_from_json(text: str) -> GenChebSeries:
    d = json.loads(text)
    if d.get("basis") != "gen-cheb2":
        raise ValueError("not a generalized Chebyshev-II series file")
    return GenChebSeries(
        WeightParams(Fraction(d["M"]), Fraction(d["N"])),
        tuple(load_value(c) for c in d["coeffs"]),
        Convention(d.get("convention", "printed")),
    )


def _header(n, params, direction, provenance, convention) -> dict:
    return {
        "n": n,
        "M": str(params.mass_left),
        "N": str(params.mass_right),
        "direction": direction.value,
        "provenance": provenance.value,
        "convention": convention.value,
    }


def matrix_to_json(m: ConversionMatrix) -> str:
    d = _header(m.n, m.params, m.direction, m.provenance, m.convention)
    d["entries"] = [[str(v) for v in row] for row in m.entries]
    return json.dumps(d)


def matrix_from_json(text: str) -> ConversionMatrix:
    d = json.loads(text)
    return ConversionMatrix(
        int(d["n"]),
        WeightParams(Fraction(d["M"]), Fraction(d["N"])),
        [[Fraction(v) for v in row] for row in d["entries"]],
        Direction(d["direction"]),
        Provenance(d["provenance"]),
        Convention(d.get("convention", "printed")),
    )


def _csv_header(n, params, direction, provenance, convention) -> str:
    return (
        f"# n={n} M={params.mass_left} N={params.mass_right} "
        f"direction={direction.value} provenance={provenance.value} convention={convention.value}\n"
    )


def _csv_rows(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def matrix_to_csv(m: ConversionMatrix) -> str:
    return _csv_header(m.n, m.params, m.direction, m.provenance, m.convention) + _csv_rows(
        [[str(v) for v in row] for row in m.entries]
    )


def matrix_from_csv(text: str) -> ConversionMatrix:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("#"):
        raise ValueError("missing CSV matrix header")
    meta = dict(item.split("=", 1) for item in lines[0][1:].split())
    rows = [[Fraction(v) for v in row] for row in csv.reader(lines[1:]) if row]
    return ConversionMatrix(
        int(meta["n"]),
        WeightParams(Fraction(meta["M"]), Fraction(meta["N"])),
        rows,
        Direction(meta["direction"]),
        Provenance(meta["provenance"]),
        Convention(meta["convention"]),
    )


def float_matrix_to_json(arr, n, params, direction, provenance, convention) -> str:
    d = _header(n, WeightParams.of(params), direction, provenance, convention)
    d["entries"] = [[float(v) for v in row] for row in arr]
    return json.dumps(d)


def float_matrix_to_csv(arr, n, params, direction, provenance, convention) -> str:
    return _csv_header(n, WeightParams.of(params), direction, provenance, convention) + _csv_rows(
        [[repr(float(v)) for v in row] for row in arr]
    )


def fit_result_to_json(r: FitResult) -> str:
    return json.dumps({
        "basis": r.basis.value,
        "exact": r.exact,
        "coeffs": [dump_value(c) for c in r.coeffs],
        "residual": dump_value(r.residual),
        "weighted_residual": dump_value(r.weighted_residual),
        "gram_diagonal": r.gram_diagonal,
        "bernstein_form": json.loads(poly_to_json(r.bernstein_form)),
    })
