"""Independent reference computations.

Nothing here uses the closed-form change-of-basis formulas. Integrals are
done by expanding to monomials and applying the Beta integral term by term;
basis conversions are done by solving linear systems exactly. The rest of
the package is checked against these routines.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .bernstein import BernsteinPoly, elevate
from .exactnum import ExactScalar, as_fraction, beta_integral, binom

__all__ = [
    "MonomialForm",
    "SingularMatrixError",
    "to_monomial",
    "from_monomial",
    "integrate_weighted",
    "integrate_plain",
    "convert_bruteforce",
    "solve_exact",
    "invert_exact",
    "matmul",
    "identity",
]


class SingularMatrixError(ArithmeticError):
    """Raised when exact elimination finds no usable pivot."""

    def __init__(self, pivot: int):
        super().__init__(f"matrix is singular (no pivot in column {pivot})")
        self.pivot = pivot


@dataclass(frozen=True)
class MonomialForm:
    """sum_k coeffs[k] x^k with exact rational coefficients."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(as_fraction(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: MonomialForm) -> MonomialForm:
        if not self.coeffs or not other.coeffs:
            return MonomialForm(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return MonomialForm(out)

    def __sub__(self, other: MonomialForm) -> MonomialForm:
        m = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (m - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (m - len(other.coeffs))
        return MonomialForm([x - y for x, y in zip(a, b)])


def to_monomial(p: BernsteinPoly) -> MonomialForm:
    """Binomial expansion of C(n,k) x^k (1-x)^(n-k)."""
    n = p.degree
    out = [Fraction(0)] * (n + 1)
    for k, c in enumerate(p.coeffs):
        c = as_fraction(c)
        if not c:
            continue
        for j in range(n - k + 1):
            out[k + j] += c * binom(n, k) * binom(n - k, j) * (-1) ** j
    return MonomialForm(out)


def from_monomial(m: MonomialForm, degree: int | None = None) -> BernsteinPoly:
    """x^j = sum_{i>=j} C(i,j)/C(n,j) B_i^n."""
    n = m.degree if degree is None else degree
    if n < m.degree:
        raise ValueError("target degree below monomial degree")
    n = max(n, 0)
    out = [Fraction(0)] * (n + 1)
    for j, c in enumerate(m.coeffs):
        if not c:
            continue
        for i in range(j, n + 1):
            out[i] += c * Fraction(binom(i, j), binom(n, j))
    return BernsteinPoly(n, tuple(out))


def integrate_weighted(m: MonomialForm) -> ExactScalar:
    """int_0^1 sqrt(x(1-x)) m(x) dx, exactly."""
    acc = ExactScalar.zero(1)
    for k, c in enumerate(m.coeffs):
        if c:
            acc = acc + c * beta_integral(2 * k + 3, 3)
    return acc


def integrate_plain(m: MonomialForm) -> Fraction:
    """int_0^1 m(x) dx, exactly."""
    return sum((c / (k + 1) for k, c in enumerate(m.coeffs)), Fraction(0))


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a, b) -> list[list]:
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [
        [sum((row[k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)]
        for row in a
    ]


def _bareiss(a: list[list[Fraction]], rhs: list[list[Fraction]]) -> list[list[Fraction]]:
    """Solve a X = rhs (rhs given as rows) with fraction-free elimination.

    Each row of the augmented system is scaled to integers first; integer
    Bareiss elimination then keeps every intermediate exactly divisible.
    """
    n = len(a)
    width = len(rhs[0]) if rhs else 0
    rows = []
    for i in range(n):
        vals = [as_fraction(v) for v in a[i]] + [as_fraction(v) for v in rhs[i]]
        if len(vals) != n + width:
            raise ValueError("matrix must be square and match the right-hand side")
        scale = lcm(*(v.denominator for v in vals)) if vals else 1
        rows.append([int(v * scale) for v in vals])

    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if piv is None:
            raise SingularMatrixError(k)
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
        pk = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            ri, rk = rows[i], rows[k]
            for j in range(k + 1, n + width):
                ri[j] = (ri[j] * pk - rik * rk[j]) // prev
            ri[k] = 0
        prev = pk

    x = [[Fraction(0)] * width for _ in range(n)]
    for i in range(n - 1, -1, -1):
        for c in range(width):
            s = Fraction(rows[i][n + c])
            for j in range(i + 1, n):
                s -= rows[i][j] * x[j][c]
            x[i][c] = s / rows[i][i]
    return x


def solve_exact(a, b: Sequence) -> list[Fraction]:
    """Exact solution of a x = b. Raises SingularMatrixError."""
    x = [row[0] for row in _bareiss(a, [[v] for v in b])]
    for row, bi in zip(a, b):
        if sum((as_fraction(r) * xi for r, xi in zip(row, x)), Fraction(0)) != as_fraction(bi):
            raise ArithmeticError("exact solve failed its residual check")
    return x


def invert_exact(a) -> list[list[Fraction]]:
    n = len(a)
    inv = _bareiss(a, identity(n))
    if matmul([[as_fraction(v) for v in row] for row in a], inv) != identity(n):
        raise ArithmeticError("exact inverse failed its residual check")
    return inv


def convert_bruteforce(p: BernsteinPoly, basis: Sequence[BernsteinPoly]) -> list[Fraction]:
    """Coefficients of ``p`` in ``basis`` by solving the Bernstein-coefficient
    system directly. All polynomials are elevated to a common degree.
    """
    if not basis:
        raise ValueError("empty target basis")
    n = max([p.degree] + [q.degree for q in basis])
    if len(basis) != n + 1:
        raise ValueError(f"need {n + 1} basis polynomials for degree {n}, got {len(basis)}")
    cols = [elevate(q, n).coeffs for q in basis]
    a = [[cols[j][i] for j in range(n + 1)] for i in range(n + 1)]
    try:
        return solve_exact(a, elevate(p, n).coeffs)
    except SingularMatrixError as exc:
        raise ValueError(f"target basis is linearly dependent (column {exc.pivot})") from exc
