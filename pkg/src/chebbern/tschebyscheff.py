"""Classical and generalized Chebyshev polynomials of the second kind.

Everything public works on the shifted interval x in [0, 1] through
U_n(2x - 1). The generalized family with endpoint masses (M, N) is built
from shifted U_k blocks mixed by the coefficients ``lambda_k``.

Two normalizations of the generalized family are in circulation and they
differ by the factor ``c_r = (2r+1)!! / (2^r (r+1)!)`` per block:

``Convention.PRINTED``
    U_r^(M,N) = c_r^2 U_r + sum_k lambda_k c_k^2 U_k, which is what the
    Bernstein representation with the theta coefficients produces.
``Convention.DEFINITIONAL``
    U_r^(M,N) = c_r U_r + sum_k lambda_k c_k U_k.

Neither is chosen silently; callers pass the convention explicitly.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bernstein import BernsteinPoly, elevate, evaluate
from .exactnum import as_fraction, binom, binom_half, central_factor

__all__ = [
    "Convention",
    "SignMode",
    "WeightParams",
    "GenChebSeries",
    "classical_u",
    "classical_u_direct",
    "classical_u_shifted_bernstein",
    "lambda_k",
    "theta",
    "theta_by_recurrence",
    "block_bernstein",
    "block_scale",
    "generalized_u_bernstein",
    "generalized_u_eval",
]


class Convention(enum.Enum):
    PRINTED = "printed"
    DEFINITIONAL = "definitional"


class SignMode(enum.Enum):
    CORRECTED = "corrected"
    AS_PRINTED = "as-printed"


@dataclass(frozen=True)
class WeightParams:
    """Endpoint masses M (at x = -1, i.e. 0 after shifting) and N."""

    mass_left: Fraction = Fraction(0)
    mass_right: Fraction = Fraction(0)

    def __post_init__(self):
        m, n = as_fraction(self.mass_left), as_fraction(self.mass_right)
        if m < 0 or n < 0:
            raise ValueError("endpoint masses must be non-negative")
        object.__setattr__(self, "mass_left", m)
        object.__setattr__(self, "mass_right", n)

    @classmethod
    def of(cls, params) -> WeightParams:
        if params is None:
            return cls()
        if isinstance(params, WeightParams):
            return params
        m, n = params
        return cls(m, n)

    def __str__(self):
        return f"(M={self.mass_left}, N={self.mass_right})"


def classical_u(n: int, y):
    """U_n(y) on [-1, 1] by the three-term recurrence."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    prev, cur = 1, 2 * y
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * y * cur - prev
    return cur


def classical_u_direct(n: int, y):
    """U_n(y) from the explicit double-binomial sum (reference form)."""
    y = as_fraction(y)
    s = Fraction(0)
    for k in range(n + 1):
        s += (
            binom_half(n, n - k)
            * binom_half(n, k)
            * ((y + 1) / 2) ** (n - k)
            * ((y - 1) / 2) ** k
        )
    return s / central_factor(n)


def classical_u_shifted_bernstein(n: int, sign_mode: SignMode = SignMode.CORRECTED) -> BernsteinPoly:
    """Bernstein coefficients of U_n(2x - 1) on degree n.

    ``SignMode.AS_PRINTED`` applies the k-independent sign (-1)^(n+1) from the
    typeset formula; it does not reproduce U_n and is kept for comparison.
    """
    pref = 1 / central_factor(n)  # (n+1)(2n)!!/(2n+1)!!
    coeffs = []
    for k in range(n + 1):
        sign = (-1) ** (n - k) if sign_mode is SignMode.CORRECTED else (-1) ** (n + 1)
        coeffs.append(sign * pref * binom_half(n, k) * binom_half(n, n - k) / binom(n, k))
    return BernsteinPoly(n, tuple(coeffs))


def lambda_k(k: int, params) -> Fraction:
    p = WeightParams.of(params)
    m, n = p.mass_left, p.mass_right
    return (
        Fraction(k * (k + 1) * (2 * k + 1), 6) * (m + n)
        + Fraction((k + 2) * (k + 1) ** 2 * k**2 * (k - 1), 9) * m * n
    )


@lru_cache(maxsize=None)
def theta(i: int, r: int) -> Fraction:
    """Magnitude of the i-th Bernstein coefficient of c_r U_r(2x-1), degree r."""
    if not 0 <= i <= r:
        raise IndexError(f"theta index {i} outside 0..{r}")
    return Fraction(
        (2 * r + 1) ** 2 * binom(2 * r, r) * binom(2 * r, 2 * i),
        2 ** (2 * r) * (2 * r - 2 * i + 1) * (2 * i + 1) * binom(r, i),
    )


@lru_cache(maxsize=None)
def theta_by_recurrence(r: int) -> tuple[Fraction, ...]:
    out = [Fraction(2 * r + 1, 2 ** (2 * r)) * binom(2 * r, r)]
    for i in range(1, r + 1):
        out.append(Fraction(2 * r - 2 * i + 3, 2 * i + 1) * out[-1])
    return tuple(out)


def block_scale(r: int, conv: Convention) -> Fraction:
    """Multiple of U_r(2x-1) carried by the degree-r block under ``conv``."""
    c = central_factor(r)
    return c * c if conv is Convention.PRINTED else c


@lru_cache(maxsize=None)
def block_bernstein(r: int, conv: Convention = Convention.PRINTED) -> BernsteinPoly:
    """Degree-r Bernstein form of block_scale(r, conv) * U_r(2x - 1)."""
    th = theta_by_recurrence(r)
    lead = central_factor(r) if conv is Convention.PRINTED else Fraction(1)
    return BernsteinPoly(r, tuple(lead * (-1) ** (r - i) * th[i] for i in range(r + 1)))


def generalized_u_bernstein(r: int, params=None, conv: Convention = Convention.PRINTED) -> BernsteinPoly:
    """Bernstein form (degree r) of the generalized polynomial of degree r.

    The lambda-weighted lower blocks are elevated to degree r and added; the
    sum over k includes k = r, so the leading block carries (1 + lambda_r).
    """
    p = WeightParams.of(params)
    acc = list(block_bernstein(r, conv).coeffs)
    for k in range(r + 1):
        lam = lambda_k(k, p)
        if lam:
            elevated = elevate(block_bernstein(k, conv), r).coeffs
            acc = [a + lam * b for a, b in zip(acc, elevated)]
    return BernsteinPoly(r, tuple(acc))


def generalized_u_eval(r: int, params, conv: Convention, x, path: str | None = None):
    """Value of the generalized polynomial of degree r at x in [0, 1].

    ``path="recurrence"`` sums scaled U_k(2x-1) from the three-term
    recurrence; ``path="bernstein"`` evaluates the Bernstein form. The default
    is recurrence for the definitional convention and Bernstein for printed.
    """
    p = WeightParams.of(params)
    if path is None:
        path = "recurrence" if conv is Convention.DEFINITIONAL else "bernstein"
    if path == "bernstein":
        return evaluate(generalized_u_bernstein(r, p, conv), x)
    if path != "recurrence":
        raise ValueError(f"unknown evaluation path {path!r}")
    if not 0 <= x <= 1:
        raise ValueError(f"x={x} outside [0, 1]")
    y = 2 * x - 1
    total = block_scale(r, conv) * classical_u(r, y)
    for k in range(r + 1):
        lam = lambda_k(k, p)
        if lam:
            total += lam * block_scale(k, conv) * classical_u(k, y)
    return total


@dataclass(frozen=True)
class GenChebSeries:
    """sum_r coeffs[r] * U_r^(M,N)(x) in a fixed convention."""

    params: WeightParams
    coeffs: tuple
    convention: Convention = Convention.PRINTED

    def __post_init__(self):
        object.__setattr__(self, "params", WeightParams.of(self.params))
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _check_compatible(self, other: GenChebSeries):
        if self.convention is not other.convention:
            raise ValueError("cannot combine series in different conventions")
        if self.params != other.params:
            raise ValueError("cannot combine series with different masses")

    def __add__(self, other: GenChebSeries) -> GenChebSeries:
        self._check_compatible(other)
        a, b = list(self.coeffs), list(other.coeffs)
        m = max(len(a), len(b))
        a += [0] * (m - len(a))
        b += [0] * (m - len(b))
        return GenChebSeries(self.params, tuple(x + y for x, y in zip(a, b)), self.convention)

    def to_bernstein(self) -> BernsteinPoly:
        n = self.degree
        acc = [Fraction(0)] * (n + 1)
        for r, d in enumerate(self.coeffs):
            if d:
                q = elevate(generalized_u_bernstein(r, self.params, self.convention), n)
                acc = [a + d * b for a, b in zip(acc, q.coeffs)]
        return BernsteinPoly(n, tuple(acc))

    def __call__(self, x):
        return evaluate(self.to_bernstein(), x)

