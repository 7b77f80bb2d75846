"""Exact scalars graded by powers of pi, factorials, and half-integer gammas.

Every weighted integral in this package is a rational multiple of an integer
power of pi. ``ExactScalar`` keeps the rational part in a ``Fraction`` and the
power of pi as a formal exponent, so pi is never rounded in the exact path.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "ExactScalar",
    "HalfGamma",
    "as_fraction",
    "factorial",
    "double_factorial",
    "double_factorial_identity_check",
    "gamma_half",
    "beta_integral",
    "binom",
    "binom_half",
    "central_factor",
    "parse_scalar",
]


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a ``Fraction``.

    Floats are rejected so that inexact values never leak into the exact path.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, ExactScalar):
        return value.rational()
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


@dataclass(frozen=True, eq=False)
class ExactScalar:
    """A rational number times ``pi ** pi_power``.

    Addition requires matching ``pi_power``; multiplication adds exponents.
    Zero compares equal to zero of any grade.
    """

    coeff: Fraction
    pi_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", as_fraction(self.coeff))
        if not isinstance(self.pi_power, int) or isinstance(self.pi_power, bool):
            raise TypeError("pi_power must be an int")

    @classmethod
    def zero(cls, pi_power: int = 0) -> ExactScalar:
        return cls(Fraction(0), pi_power)

    def _coerce(self, other) -> ExactScalar:
        if isinstance(other, ExactScalar):
            return other
        return ExactScalar(as_fraction(other), 0)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if other.pi_power != self.pi_power:
            raise ValueError(
                f"cannot add pi^{self.pi_power} and pi^{other.pi_power} terms"
            )
        return ExactScalar(self.coeff + other.coeff, self.pi_power)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self.coeff, self.pi_power)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(self.coeff * other.coeff, self.pi_power + other.pi_power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if other.coeff == 0:
            raise ZeroDivisionError("division by an exact zero")
        return ExactScalar(self.coeff / other.coeff, self.pi_power - other.pi_power)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, ExactScalar):
            if self.coeff == 0 and other.coeff == 0:
                return True
            return self.coeff == other.coeff and self.pi_power == other.pi_power
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return (self.coeff == 0 and other == 0) or (
                self.pi_power == 0 and self.coeff == other
            )
        return NotImplemented

    def __hash__(self):
        if self.coeff == 0 or self.pi_power == 0:
            return hash(self.coeff)
        return hash((self.coeff, self.pi_power))

    def __abs__(self):
        return ExactScalar(abs(self.coeff), self.pi_power)

    def __float__(self):
        return float(self.coeff) * math.pi ** self.pi_power

    def rational(self) -> Fraction:
        """The value as a Fraction; only valid when ``pi_power == 0``."""
        if self.pi_power != 0 and self.coeff != 0:
            raise ValueError(f"value carries pi^{self.pi_power}, not rational")
        return self.coeff

    def __str__(self):
        c = str(self.coeff)
        if self.pi_power == 0:
            return c
        if self.pi_power == 1:
            return f"{c}*pi"
        return f"{c}*pi^{self.pi_power}"

    def __repr__(self):
        return f"ExactScalar({self})"


def parse_scalar(text: str) -> ExactScalar:
    """Inverse of ``str(ExactScalar)``."""
    text = text.strip()
    if "*pi" not in text:
        return ExactScalar(Fraction(text), 0)
    coeff, _, tail = text.partition("*pi")
    if not tail:
        return ExactScalar(Fraction(coeff), 1)
    if not tail.startswith("^"):
        raise ValueError(f"malformed exact scalar {text!r}")
    return ExactScalar(Fraction(coeff), int(tail[1:]))


@dataclass(frozen=True)
class HalfGamma:
    """``coeff * sqrt(pi) ** sqrt_pi_power``, the exact value of Gamma at an
    integer or half-integer argument (and products of such values)."""

    coeff: Fraction
    sqrt_pi_power: int = 0

    @property
    def sqrt_pi(self) -> bool:
        return self.sqrt_pi_power % 2 == 1

    def __mul__(self, other: HalfGamma) -> HalfGamma:
        return HalfGamma(self.coeff * other.coeff, self.sqrt_pi_power + other.sqrt_pi_power)

    def __truediv__(self, other: HalfGamma) -> HalfGamma:
        return HalfGamma(self.coeff / other.coeff, self.sqrt_pi_power - other.sqrt_pi_power)

    def as_exact(self) -> ExactScalar:
        if self.sqrt_pi:
            raise ValueError("odd power of sqrt(pi) is not an ExactScalar")
        return ExactScalar(self.coeff, self.sqrt_pi_power // 2)

    def __float__(self):
        return float(self.coeff) * math.sqrt(math.pi) ** self.sqrt_pi_power


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return math.factorial(n)


@lru_cache(maxsize=None)
def double_factorial(n: int) -> int:
    """n!! as the product n(n-2)(n-4)..., with 0!! = (-1)!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial undefined for n={n}")
    out = 1
    for k in range(n, 0, -2):
        out *= k
    return out


def double_factorial_identity_check(n: int) -> bool:
    """Compare the product form of n!! with its closed form in ordinary
    factorials (``2^(n/2) (n/2)!`` for even n, ``n! / (2^((n-1)/2) ((n-1)/2)!)``
    for odd n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n % 2 == 0:
        closed = Fraction(2 ** (n // 2) * math.factorial(n // 2))
    else:
        h = (n - 1) // 2
        closed = Fraction(math.factorial(n), 2**h * math.factorial(h))
    return closed == double_factorial(n)


def gamma_half(twice_arg: int) -> HalfGamma:
    """Exact Gamma(twice_arg / 2).

    Integer arguments give ``(m-1)!``; half-integer arguments ``k + 1/2`` give
    ``(2k-1)!! / 2^k * sqrt(pi)``.
    """
    if twice_arg <= 0:
        raise ValueError("gamma_half needs a positive argument")
    if twice_arg % 2 == 0:
        return HalfGamma(Fraction(math.factorial(twice_arg // 2 - 1)), 0)
    k = (twice_arg - 1) // 2
    return HalfGamma(Fraction(double_factorial(2 * k - 1), 2**k), 1)


def beta_integral(twice_x: int, twice_y: int) -> ExactScalar:
    """Exact int_0^1 u^(x-1) (1-u)^(y-1) du = Gamma(x)Gamma(y)/Gamma(x+y) for
    integer or half-integer x, y given as twice their value."""
    if twice_x <= 0 or twice_y <= 0:
        raise ValueError("beta_integral needs positive arguments")
    # sqrt(pi) powers always pair up: both half-integer -> pi, exactly one ->
    # cancels against Gamma(x + y), neither -> none.
    g = gamma_half(twice_x) * gamma_half(twice_y) / gamma_half(twice_x + twice_y)
    return g.as_exact()


def binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def binom_half(r: int, k: int) -> Fraction:
    """Generalised binomial C(r + 1/2, k) as an exact rational."""
    if k < 0:
        raise ValueError("k must be non-negative")
    top = Fraction(2 * r + 1, 2)
    num = Fraction(1)
    for j in range(k):
        num *= top - j
    return num / math.factorial(k)


@lru_cache(maxsize=None)
def central_factor(r: int) -> Fraction:
    """(2r+1)!! / (2^r (r+1)!), the scale tying U_r to the generalised basis."""
    return Fraction(double_factorial(2 * r + 1), 2**r * math.factorial(r + 1))
