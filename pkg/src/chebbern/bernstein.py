"""Bernstein basis on [0, 1]: evaluation, degree elevation and exact weighted
inner products under the weight sqrt(x (1 - x))."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exactnum import ExactScalar, beta_integral, binom

__all__ = [
    "BernsteinPoly",
    "basis_value",
    "evaluate",
    "evaluate_array",
    "elevate",
    "weighted_inner_product",
]


@dataclass(frozen=True)
class BernsteinPoly:
    """Polynomial sum_k coeffs[k] * B_k^degree(x).

    Coefficients may be exact (int/Fraction) or floats; operations keep
    whichever kind they are given.
    """

    degree: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} needs {self.degree + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> BernsteinPoly:
        coeffs = tuple(coeffs)
        return cls(len(coeffs) - 1, coeffs)

    @classmethod
    def basis(cls, n: int, k: int) -> BernsteinPoly:
        if not 0 <= k <= n:
            raise IndexError(f"basis index {k} outside 0..{n}")
        return cls(n, tuple(Fraction(int(j == k)) for j in range(n + 1)))

    def __call__(self, x, strict: bool = True):
        return evaluate(self, x, strict=strict)

    def __add__(self, other: BernsteinPoly) -> BernsteinPoly:
        n = max(self.degree, other.degree)
        a, b = elevate(self, n), elevate(other, n)
        return BernsteinPoly(n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __sub__(self, other: BernsteinPoly) -> BernsteinPoly:
        return self + other.scale(-1)

    def scale(self, factor) -> BernsteinPoly:
        return BernsteinPoly(self.degree, tuple(factor * c for c in self.coeffs))

    __rmul__ = scale


def _check_x(x, strict: bool):
    if strict and not 0 <= x <= 1:
        raise ValueError(f"x={x} outside [0, 1]; pass strict=False to extrapolate")


def basis_value(n: int, k: int, x, strict: bool = True):
    """B_k^n(x) = C(n, k) x^k (1 - x)^(n - k)."""
    if not 0 <= k <= n:
        raise IndexError(f"basis index {k} outside 0..{n}")
    _check_x(x, strict)
    return binom(n, k) * x**k * (1 - x) ** (n - k)


def evaluate(p: BernsteinPoly, x, strict: bool = True):
    """de Casteljau evaluation (repeated convex combination)."""
    _check_x(x, strict)
    b = list(p.coeffs)
    t = 1 - x
    for r in range(p.degree):
        for i in range(p.degree - r):
            b[i] = t * b[i] + x * b[i + 1]
    return b[0]


def evaluate_array(p: BernsteinPoly, xs) -> np.ndarray:
    """Float64 de Casteljau over an array of abscissae (no domain check)."""
    xs = np.asarray(xs, dtype=float)
    b = [np.full(xs.shape, float(c)) for c in p.coeffs]
    t = 1.0 - xs
    for r in range(p.degree):
        for i in range(p.degree - r):
            b[i] = t * b[i] + xs * b[i + 1]
    return b[0]


def elevate(p: BernsteinPoly, target_degree: int) -> BernsteinPoly:
    """Rewrite ``p`` in the Bernstein basis of degree ``target_degree``.

    B_k^r contributes C(r,k) C(n-r,i-k) / C(n,i) to coefficient i.
    """
    r, n = p.degree, target_degree
    if n < r:
        raise ValueError(f"cannot elevate degree {r} down to {n}")
    if n == r:
        return p
    out = []
    for i in range(n + 1):
        acc = 0
        for k in range(max(0, i + r - n), min(i, r) + 1):
            acc += p.coeffs[k] * Fraction(binom(r, k) * binom(n - r, i - k), binom(n, i))
        out.append(acc)
    return BernsteinPoly(n, tuple(out))


def weighted_inner_product(n1: int, k1: int, n2: int, k2: int) -> ExactScalar:
    """Exact int_0^1 sqrt(x(1-x)) B_k1^n1(x) B_k2^n2(x) dx (a rational times pi)."""
    if not 0 <= k1 <= n1 or not 0 <= k2 <= n2:
        raise IndexError("Bernstein index out of range")
    a = k1 + k2
    b = n1 + n2 - a
    return binom(n1, k1) * binom(n2, k2) * beta_integral(2 * a + 3, 2 * b + 3)
