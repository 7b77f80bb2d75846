"""Change-of-basis matrices between the generalized Chebyshev-II basis and
the Bernstein basis of fixed degree n.

Conventions used throughout:

* ``forward_matrix(n)[i][r]`` maps generalized coefficients ``d`` to
  Bernstein coefficients ``c``: ``c_i = sum_r M[i][r] d_r``.
* ``inverse_matrix_*`` maps ``c`` back to ``d`` (rows indexed by the
  generalized degree).
* ``entries_corollary`` and ``entries_raw`` return the transposed array
  ``N[r][i] = M[i][r]``.

The closed-form inverse (``inverse_matrix_printed``) is reproduced as
published. It is not the inverse of ``forward_matrix``; use
``inverse_matrix_exact`` for round trips and ``consistency_report`` to see
the discrepancy.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .bernstein import elevate
from .exactnum import (
    ExactScalar,
    as_fraction,
    binom,
    binom_half,
    central_factor,
    gamma_half,
)
from .oracle import (
    identity,
    integrate_weighted,
    invert_exact,
    matmul,
    to_monomial,
)
from .tschebyscheff import (
    Convention,
    SignMode,
    WeightParams,
    block_scale,
    classical_u_shifted_bernstein,
    generalized_u_bernstein,
    lambda_k,
)

__all__ = [
    "Direction",
    "Provenance",
    "ConversionMatrix",
    "ConsistencyReport",
    "phi",
    "forward_matrix",
    "forward_matrix_float",
    "entries_corollary",
    "entries_raw",
    "lambda_integral",
    "weighted_pairing",
    "inverse_matrix_printed",
    "inverse_matrix_exact",
    "convert_coeffs",
    "consistency_report",
]


class Direction(enum.Enum):
    GEN_TO_BERNSTEIN = "gen2bern"
    BERNSTEIN_TO_GEN = "bern2gen"


class Provenance(enum.Enum):
    PRINTED_FORMULA = "printed"
    EXACT_INVERSE = "exact"


def _rational(v) -> Fraction:
    if isinstance(v, ExactScalar):
        if v.pi_power != 0 and v.coeff != 0:
            raise ValueError(f"matrix entry {v} is not rational")
        return v.coeff
    return as_fraction(v)


@dataclass(frozen=True)
class ConversionMatrix:
    """Exact (n+1) x (n+1) change-of-basis matrix, rows stored as tuples.

    ``transposed`` marks the N-layout (rows indexed by generalized degree)
    used by ``entries_corollary``; ``.T`` flips it.
    """

    n: int
    params: WeightParams
    entries: tuple
    direction: Direction
    provenance: Provenance
    convention: Convention = Convention.PRINTED
    transposed: bool = False

    def __post_init__(self):
        rows = tuple(tuple(_rational(v) for v in row) for row in self.entries)
        if len(rows) != self.n + 1 or any(len(r) != self.n + 1 for r in rows):
            raise ValueError(f"expected a {self.n + 1}x{self.n + 1} matrix")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "params", WeightParams.of(self.params))

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    @property
    def T(self) -> ConversionMatrix:
        flipped = tuple(zip(*self.entries))
        return ConversionMatrix(
            self.n, self.params, flipped, self.direction, self.provenance,
            self.convention, not self.transposed,
        )

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def as_array(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.entries])

    def __matmul__(self, other: ConversionMatrix) -> list[list[Fraction]]:
        return matmul(self.rows(), other.rows())


def _phi_sum(i: int, n: int, r: int) -> Fraction:
    s = Fraction(0)
    for k in range(max(0, i + r - n), min(i, r) + 1):
        s += (-1) ** (r - k) * binom(n - r, i - k) * binom_half(r, k) * binom_half(r, r - k)
    return s / binom(n, i)


def phi(i: int, n: int, r: int, conv: Convention = Convention.PRINTED) -> Fraction:
    """Bernstein coefficient i (degree n) of the degree-r block.

    Under the printed convention the block is c_r^2 U_r(2x-1) and this is
    the published Phi_{i,n}^r; the definitional variant drops one c_r.
    """
    if not (0 <= i <= n and 0 <= r <= n):
        raise IndexError(f"phi indices ({i}, {r}) outside 0..{n}")
    s = _phi_sum(i, n, r)
    return central_factor(r) * s if conv is Convention.PRINTED else s


def forward_matrix(n: int, params=None, conv: Convention = Convention.PRINTED) -> ConversionMatrix:
    """M[i][r] = Phi_{i,n}^r + sum_{k<=r} lambda_k Phi_{i,n}^k."""
    p = WeightParams.of(params)
    ph = [[phi(i, n, r, conv) for r in range(n + 1)] for i in range(n + 1)]
    lams = [lambda_k(k, p) for k in range(n + 1)]
    rows = []
    for i in range(n + 1):
        row, running = [], Fraction(0)
        for r in range(n + 1):
            running += lams[r] * ph[i][r]
            row.append(ph[i][r] + running)
        rows.append(row)
    return ConversionMatrix(n, p, rows, Direction.GEN_TO_BERNSTEIN, Provenance.PRINTED_FORMULA, conv)


def forward_matrix_float(n: int, params=None, conv: Convention = Convention.PRINTED) -> np.ndarray:
    """Float64 version of ``forward_matrix``.

    Scale factors and theta coefficients come from ratio recurrences, so no
    double factorial is ever formed; elevation weights use exact integer
    binomials divided once.
    """
    p = WeightParams.of(params)
    # c_r by c_r = c_{r-1} (2r+1) / (2(r+1))
    c = np.empty(n + 1)
    c[0] = 1.0
    for r in range(1, n + 1):
        c[r] = c[r - 1] * (2 * r + 1) / (2 * (r + 1))
    blocks = np.zeros((n + 1, n + 1))  # blocks[i, r]: coefficient i of block r, degree n
    central = 1.0  # C(2r, r) / 4^r
    for r in range(n + 1):
        if r:
            central *= (2 * r - 1) / (2 * r)
        th = np.empty(r + 1)
        th[0] = (2 * r + 1) * central
        for i in range(1, r + 1):
            th[i] = th[i - 1] * (2 * r - 2 * i + 3) / (2 * i + 1)
        lead = c[r] if conv is Convention.PRINTED else 1.0
        signed = lead * th * (-1.0) ** (r - np.arange(r + 1))
        for i in range(n + 1):
            acc = 0.0
            for k in range(max(0, i + r - n), min(i, r) + 1):
                acc += signed[k] * (math.comb(r, k) * math.comb(n - r, i - k) / math.comb(n, i))
            blocks[i, r] = acc
    lams = np.array([float(lambda_k(k, p)) for k in range(n + 1)])
    return blocks + np.cumsum(blocks * lams[None, :], axis=1)


def entries_corollary(n: int, params=None) -> ConversionMatrix:
    """N[r][i] from the all-integer binomial form (printed convention)."""
    p = WeightParams.of(params)

    def block(r: int, i: int) -> Fraction:
        s = Fraction(0)
        for k in range(max(0, i + r - n), min(i, r) + 1):
            s += Fraction(
                (-1) ** (r - k) * (2 * r + 1) ** 2 * binom(n - r, i - k) * binom(2 * r, r) * binom(2 * r, 2 * k),
                2 ** (2 * r) * (2 * r - 2 * k + 1) * (2 * k + 1) * binom(n, i),
            )
        return central_factor(r) * s

    rows = []
    for r in range(n + 1):
        row = []
        for i in range(n + 1):
            v = block(r, i)
            for k in range(r + 1):
                lam = lambda_k(k, p)
                if lam:
                    v += lam * block(k, i)
            row.append(v)
        rows.append(row)
    return ConversionMatrix(
        n, p, rows, Direction.GEN_TO_BERNSTEIN, Provenance.PRINTED_FORMULA,
        Convention.PRINTED, transposed=True,
    )


def entries_raw(n: int, params=None) -> ConversionMatrix:
    """N[r][i] written with the half-integer binomials, before the
    simplification to integer binomials."""
    p = WeightParams.of(params)

    def block(r: int, i: int) -> Fraction:
        s = Fraction(0)
        for k in range(max(0, i + r - n), min(i, r) + 1):
            s += (-1) ** (r - k) * binom(n - r, i - k) * binom_half(r, k) * binom_half(r, r - k)
        return Fraction(central_factor(r)) / binom(n, i) * s

    rows = [
        [block(r, i) + sum((lambda_k(k, p) * block(k, i) for k in range(r + 1)), Fraction(0))
         for i in range(n + 1)]
        for r in range(n + 1)
    ]
    return ConversionMatrix(
        n, p, rows, Direction.GEN_TO_BERNSTEIN, Provenance.PRINTED_FORMULA,
        Convention.PRINTED, transposed=True,
    )


def lambda_integral(r: int, n: int, d: int) -> ExactScalar:
    """Lambda_{r,n}^d: int_0^1 sqrt(x(1-x)) B_r^n(x) * c_d^2 U_d(2x-1) dx."""
    if not 0 <= r <= n or d < 0:
        raise IndexError(f"lambda_integral indices r={r}, n={n}, d={d} out of range")
    acc = ExactScalar.zero(1)
    denom = gamma_half(2 * (n + d + 3))
    for j in range(d + 1):
        g = gamma_half(2 * (r + j) + 3) * gamma_half(2 * (n + d - r - j) + 3) / denom
        acc = acc + (-1) ** (d - j) * binom_half(d, j) * binom_half(d, d - j) * g.as_exact()
    return binom(n, r) * central_factor(d) * acc


def weighted_pairing(r: int, n: int, i: int, params=None) -> ExactScalar:
    """int sqrt(x(1-x)) B_r^n U_i^(M,N) dx via Lambda (printed convention)."""
    p = WeightParams.of(params)
    if not 0 <= r <= n or not 0 <= i <= n:
        raise IndexError("weighted_pairing index out of range")
    acc = lambda_integral(r, n, i)
    for d in range(i + 1):
        lam = lambda_k(d, p)
        if lam:
            acc = acc + lam * lambda_integral(r, n, d)
    return acc


def inverse_matrix_printed(n: int, params=None) -> ConversionMatrix:
    """Closed-form Bernstein -> generalized matrix exactly as published:

    8 / (pi (1+lambda_i)^2) * (1/c_i)^2 * (Lambda_{r,n}^i + sum_d lambda_d Lambda_{r,n}^d)
    """
    p = WeightParams.of(params)
    rows = []
    for i in range(n + 1):
        lam = lambda_k(i, p)
        scale = ExactScalar(Fraction(8) / ((1 + lam) ** 2 * central_factor(i) ** 2), -1)
        row = []
        for r in range(n + 1):
            v = scale * weighted_pairing(r, n, i, p)
            assert v.coeff == 0 or v.pi_power == 0, "pi failed to cancel"
            row.append(v.coeff)
        rows.append(row)
    return ConversionMatrix(n, p, rows, Direction.BERNSTEIN_TO_GEN, Provenance.PRINTED_FORMULA)


def inverse_matrix_exact(n: int, params=None, conv: Convention = Convention.PRINTED) -> ConversionMatrix:
    """True inverse of ``forward_matrix`` by fraction-free elimination.

    Raises ``oracle.SingularMatrixError`` if the forward matrix is singular.
    """
    fwd = forward_matrix(n, params, conv)
    inv = invert_exact(fwd.rows())
    return ConversionMatrix(n, fwd.params, inv, Direction.BERNSTEIN_TO_GEN, Provenance.EXACT_INVERSE, conv)


def convert_coeffs(v: Sequence, m: ConversionMatrix) -> list:
    """Matrix-vector product; exact for exact input, float for float input."""
    if len(v) != m.n + 1:
        raise ValueError(f"vector of length {len(v)} does not match degree {m.n}")
    if any(isinstance(x, float) for x in v):
        return list(m.as_array() @ np.asarray(v, dtype=float))
    vals = [as_fraction(x) for x in v]
    return [sum((a * b for a, b in zip(row, vals)), Fraction(0)) for row in m.entries]


@dataclass(frozen=True)
class ConsistencyReport:
    """How a Bernstein -> generalized matrix compares with the exact inverse.

    ``per_row_ratio[i]`` is the common ratio candidate/exact on row i, or
    ``None`` when the rows are not proportional. ``norm_shortcut`` holds
    (pi/8) c_i^2 (1 + lambda_i)^2 and ``norm_oracle`` the exact weighted
    squared norm of each basis polynomial.
    """

    n: int
    params: WeightParams
    convention: Convention
    provenance: Provenance
    max_roundtrip_deviation: ExactScalar
    per_row_ratio: tuple
    norm_shortcut: tuple = field(default=())
    norm_oracle: tuple = field(default=())
    matches_classical_u: bool = False

    @property
    def is_exact_inverse(self) -> bool:
        return self.max_roundtrip_deviation == 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "M": str(self.params.mass_left),
            "N": str(self.params.mass_right),
            "convention": self.convention.value,
            "provenance": self.provenance.value,
            "max_roundtrip_deviation": str(self.max_roundtrip_deviation),
            "per_row_ratio": [None if r is None else str(r) for r in self.per_row_ratio],
            "norm_shortcut": [str(v) for v in self.norm_shortcut],
            "norm_oracle": [str(v) for v in self.norm_oracle],
            "matches_classical_u": self.matches_classical_u,
        }


def _row_ratio(candidate: Sequence[Fraction], exact: Sequence[Fraction]):
    ratio = None
    for a, b in zip(candidate, exact):
        if b == 0:
            if a != 0:
                return None
            continue
        q = a / b
        if ratio is None:
            ratio = q
        elif q != ratio:
            return None
    return ratio


def consistency_report(
    n: int,
    params=None,
    conv: Convention = Convention.PRINTED,
    provenance: Provenance = Provenance.PRINTED_FORMULA,
) -> ConsistencyReport:
    p = WeightParams.of(params)
    fwd = forward_matrix(n, p, conv)
    exact = inverse_matrix_exact(n, p, conv)
    cand = inverse_matrix_printed(n, p) if provenance is Provenance.PRINTED_FORMULA else exact

    prod = fwd @ cand
    eye = identity(n + 1)
    dev = max(sum(abs(prod[i][j] - eye[i][j]) for j in range(n + 1)) for i in range(n + 1))
    ratios = tuple(_row_ratio(cand.entries[i], exact.entries[i]) for i in range(n + 1))

    shortcut, oracle_norms = [], []
    for i in range(n + 1):
        lam = lambda_k(i, p)
        shortcut.append(ExactScalar(Fraction(1, 8) * central_factor(i) ** 2 * (1 + lam) ** 2, 1))
        m = to_monomial(generalized_u_bernstein(i, p, conv))
        oracle_norms.append(integrate_weighted(m * m))

    # does the candidate expand B_r^n in the plain U_i(2x-1) basis?
    u_cols = [elevate(classical_u_shifted_bernstein(i, SignMode.CORRECTED), n).coeffs for i in range(n + 1)]
    u_fwd = [[u_cols[r][i] for r in range(n + 1)] for i in range(n + 1)]
    matches_u = matmul(u_fwd, cand.rows()) == eye

    return ConsistencyReport(
        n, p, conv, provenance, ExactScalar(dev, 0), ratios,
        tuple(shortcut), tuple(oracle_norms), matches_u,
    )
