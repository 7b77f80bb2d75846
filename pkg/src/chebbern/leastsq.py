"""Continuous least-squares fits on [0, 1].

Two bases are supported. The power basis leads to normal equations whose
matrix is the Hilbert matrix 1/(i+k+1). The generalized Chebyshev-II basis is
fitted under the weight sqrt(x(1-x)); for M = N = 0 its Gram matrix is
diagonal and the coefficients are plain projections.

Polynomial targets are handled exactly. Callables and sampled tables are
integrated numerically with composite Gauss-Legendre after substituting
x = sin^2(theta), which smooths the square-root endpoint behaviour.

Two error functionals are reported for every fit:

``residual``           int_0^1 (f - p)^2 dx
``weighted_residual``  int_0^1 sqrt(x(1-x)) (f - p)^2 dx

A power fit minimizes the first, a generalized fit the second.
"""
from __future__ import annotations

import enum
import warnings
from math import comb
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .bernstein import BernsteinPoly, evaluate_array
from .exactnum import ExactScalar, as_fraction, beta_integral
from .oracle import (
    MonomialForm,
    from_monomial,
    integrate_plain,
    integrate_weighted,
    solve_exact,
    to_monomial,
)
from .transform import convert_coeffs, forward_matrix
from .tschebyscheff import Convention, WeightParams, generalized_u_bernstein

__all__ = [
    "Basis",
    "Samples",
    "FitProblem",
    "FitResult",
    "IllConditionedError",
    "hilbert_normal_matrix",
    "power_normal_matrix",
    "fit",
    "fit_power",
    "fit_orthogonal",
    "residual",
    "integrate_sin2",
]

# A float solve is refused once cond(A) exceeds 1/eps.
_COND_LIMIT = 1.0 / np.finfo(float).eps


class Basis(enum.Enum):
    POWER = "power"
    GEN_CHEB2 = "gen-cheb2"


class IllConditionedError(np.linalg.LinAlgError):
    pass


@dataclass(frozen=True)
class Samples:
    """Tabulated target; linearly interpolated between abscissae."""

    x: tuple
    y: tuple

    def __post_init__(self):
        xs = np.asarray(self.x, dtype=float)
        ys = np.asarray(self.y, dtype=float)
        if xs.ndim != 1 or xs.shape != ys.shape or xs.size < 2:
            raise ValueError("samples need matching 1-D x and y with at least two points")
        if xs[0] < 0 or xs[-1] > 1:
            raise ValueError("sample abscissae must lie in [0, 1]")
        if np.any(np.diff(xs) <= 0):
            raise ValueError("sample abscissae must be strictly increasing")
        object.__setattr__(self, "x", tuple(xs))
        object.__setattr__(self, "y", tuple(ys))

    def __call__(self, x):
        return np.interp(x, self.x, self.y)


@dataclass(frozen=True)
class FitProblem:
    """``target`` is a power-basis coefficient list, a ``MonomialForm``, a
    ``BernsteinPoly``, a ``Samples`` table, or a callable on [0, 1]."""

    target: object
    degree: int
    basis_choice: Basis = Basis.POWER
    params: WeightParams = field(default_factory=WeightParams)
    convention: Convention = Convention.PRINTED
    rtol: float = 1e-12

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        object.__setattr__(self, "params", WeightParams.of(self.params))


@dataclass(frozen=True)
class FitResult:
    basis: Basis
    coeffs: tuple
    residual: object
    weighted_residual: object
    bernstein_form: BernsteinPoly
    exact: bool
    gram_diagonal: bool = True


def _exact_target(target) -> MonomialForm | None:
    if isinstance(target, MonomialForm):
        return target
    if isinstance(target, BernsteinPoly):
        try:
            return to_monomial(target)
        except TypeError:
            return None
    if isinstance(target, (list, tuple)) and not isinstance(target, Samples):
        try:
            return MonomialForm(target)
        except TypeError:
            return None
    return None


def _float_target(target) -> Callable:
    if isinstance(target, BernsteinPoly):
        return lambda x: evaluate_array(target, x)
    if isinstance(target, (list, tuple)):
        coeffs = [float(c) for c in target]
        return lambda x: np.polynomial.polynomial.polyval(x, coeffs)
    if isinstance(target, MonomialForm):
        coeffs = [float(c) for c in target.coeffs]
        return lambda x: np.polynomial.polynomial.polyval(x, coeffs)
    if callable(target):
        def f(x):
            try:
                out = np.asarray(target(x), dtype=float)
            except TypeError:
                out = None
            if out is None or out.shape != np.shape(x):
                out = np.vectorize(lambda t: float(target(t)))(x)
            return out
        return f
    raise TypeError(f"unsupported fit target {type(target).__name__}")


def integrate_sin2(g: Callable, weighted: bool = False, rtol: float = 1e-12,
                   atol: float = 1e-15, order: int = 16, max_panels: int = 4096,
                   breakpoints: Sequence[float] = ()) -> float:
    """int_0^1 g(x) [sqrt(x(1-x))] dx by composite Gauss-Legendre in theta,
    x = sin^2(theta), doubling the panel count until two successive
    estimates agree to ``rtol`` (or ``atol`` for near-zero integrals).

    ``breakpoints`` are x positions where g has kinks; panels never straddle
    them.
    """
    nodes, weights = np.polynomial.legendre.leggauss(order)
    cuts = np.unique(np.concatenate([
        [0.0, np.pi / 2],
        np.arcsin(np.sqrt(np.clip(np.asarray(breakpoints, dtype=float), 0.0, 1.0))),
    ]))

    def estimate(panels: int) -> float:
        edges = np.concatenate([
            np.linspace(a, b, panels + 1)[:-1] for a, b in zip(cuts[:-1], cuts[1:])
        ] + [[cuts[-1]]])
        half = 0.5 * np.diff(edges)
        mid = 0.5 * (edges[:-1] + edges[1:])
        th = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
        w = (half[:, None] * weights[None, :]).ravel()
        x = np.sin(th) ** 2
        jac = np.sin(2 * th)  # dx/dtheta
        if weighted:
            jac = jac * 0.5 * np.sin(2 * th)  # sqrt(x(1-x)) = sin(2 theta)/2
        return float(np.sum(w * g(x) * jac))

    panels = 1
    prev = estimate(panels)
    while panels < max_panels:
        panels *= 2
        cur = estimate(panels)
        if abs(cur - prev) <= max(rtol * abs(cur), atol):
            return cur
        prev = cur
    warnings.warn(f"quadrature did not reach rtol={rtol} with {max_panels} panels")
    return prev


def _kinks(target) -> tuple:
    return target.x if isinstance(target, Samples) else ()


def hilbert_normal_matrix(n: int) -> list[list[Fraction]]:
    return [[Fraction(1, i + k + 1) for k in range(n + 1)] for i in range(n + 1)]


def power_normal_matrix(n: int) -> list[list[Fraction]]:
    """Gram matrix of 1, x, ..., x^n under int_0^1, via the Beta integral
    B(i+k+1, 1)."""
    return [[beta_integral(2 * (i + k + 1), 2).rational() for k in range(n + 1)] for i in range(n + 1)]


def _exact_residuals(f: MonomialForm, p: BernsteinPoly) -> tuple[Fraction, ExactScalar]:
    diff = f - to_monomial(p)
    sq = diff * diff
    return integrate_plain(sq), integrate_weighted(sq)


def residual(f, p: BernsteinPoly, weighted: bool = False, rtol: float = 1e-12):
    """int_0^1 [w(x)] (f - p)^2 dx; exact when ``f`` and ``p`` are exact
    polynomials, quadrature otherwise. ``weighted`` selects w = sqrt(x(1-x))."""
    fm = _exact_target(f)
    if fm is not None and all(not isinstance(c, float) for c in p.coeffs):
        plain, wtd = _exact_residuals(fm, p)
        return wtd if weighted else plain
    ff = _float_target(f)
    return integrate_sin2(lambda x: (ff(x) - evaluate_array(p, x)) ** 2, weighted, rtol,
                          breakpoints=_kinks(f))


def _float_solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    cond = np.linalg.cond(a)
    if not np.isfinite(cond) or cond > _COND_LIMIT:
        raise IllConditionedError(f"normal matrix condition number {cond:.3e} exceeds {_COND_LIMIT:.3e}")
    return np.linalg.solve(a, b)


def fit_power(problem: FitProblem) -> FitResult:
    n = problem.degree
    fm = _exact_target(problem.target)
    if fm is not None:
        rhs = [integrate_plain(fm * MonomialForm([0] * i + [1])) for i in range(n + 1)]
        a = solve_exact(power_normal_matrix(n), rhs)
        bern = from_monomial(MonomialForm(a), n)
        plain, wtd = _exact_residuals(fm, bern)
        return FitResult(Basis.POWER, tuple(a), plain, wtd, bern, exact=True)

    f = _float_target(problem.target)
    kw = {"rtol": problem.rtol, "breakpoints": _kinks(problem.target)}
    rhs = np.array([integrate_sin2(lambda x, i=i: f(x) * x**i, **kw) for i in range(n + 1)])
    a = _float_solve(np.array(hilbert_normal_matrix(n), dtype=float), rhs)
    bern = _power_to_bernstein_float(a)
    plain = integrate_sin2(lambda x: (f(x) - evaluate_array(bern, x)) ** 2, False, **kw)
    wtd = integrate_sin2(lambda x: (f(x) - evaluate_array(bern, x)) ** 2, True, **kw)
    return FitResult(Basis.POWER, tuple(float(v) for v in a), plain, wtd, bern, exact=False)


def _power_to_bernstein_float(a: Sequence[float]) -> BernsteinPoly:
    n = len(a) - 1
    out = np.zeros(n + 1)
    for j, c in enumerate(a):
        for i in range(j, n + 1):
            out[i] += c * comb(i, j) / comb(n, j)
    return BernsteinPoly(n, tuple(float(v) for v in out))


def _gram(basis_mono: list[MonomialForm]) -> list[list[ExactScalar]]:
    return [[integrate_weighted(p * q) for q in basis_mono] for p in basis_mono]


def fit_orthogonal(problem: FitProblem) -> FitResult:
    """Weighted least squares in the generalized basis.

    The Gram matrix is formed exactly from monomial expansions. When it is
    diagonal (always the case for M = N = 0) each coefficient is the
    projection <f, U_i> / <U_i, U_i>; otherwise the full normal system is
    solved and ``gram_diagonal`` is False.
    """
    n, p, conv = problem.degree, problem.params, problem.convention
    basis_mono = [to_monomial(generalized_u_bernstein(i, p, conv)) for i in range(n + 1)]
    gram = _gram(basis_mono)
    diagonal = all(gram[i][j] == 0 for i in range(n + 1) for j in range(n + 1) if i != j)
    fwd = forward_matrix(n, p, conv)

    fm = _exact_target(problem.target)
    if fm is not None:
        rhs = [integrate_weighted(fm * u) for u in basis_mono]
        if diagonal:
            a = [(rhs[i] / gram[i][i]).rational() for i in range(n + 1)]
        else:
            # every entry is a rational multiple of pi; strip the common factor
            a = solve_exact([[g.coeff for g in row] for row in gram], [b.coeff for b in rhs])
        bern = BernsteinPoly(n, tuple(convert_coeffs(a, fwd)))
        plain, wtd = _exact_residuals(fm, bern)
        return FitResult(Basis.GEN_CHEB2, tuple(a), plain, wtd, bern, True, diagonal)

    f = _float_target(problem.target)
    kw = {"rtol": problem.rtol, "breakpoints": _kinks(problem.target)}
    basis_b = [generalized_u_bernstein(i, p, conv) for i in range(n + 1)]
    rhs = np.array([
        integrate_sin2(lambda x, q=q: f(x) * evaluate_array(q, x), True, **kw) for q in basis_b
    ])
    g = np.array([[float(v) for v in row] for row in gram])
    a = rhs / np.diag(g) if diagonal else _float_solve(g, rhs)
    bern = BernsteinPoly(n, tuple(float(v) for v in fwd.as_array() @ a))
    plain = integrate_sin2(lambda x: (f(x) - evaluate_array(bern, x)) ** 2, False, **kw)
    wtd = integrate_sin2(lambda x: (f(x) - evaluate_array(bern, x)) ** 2, True, **kw)
    return FitResult(Basis.GEN_CHEB2, tuple(float(v) for v in a), plain, wtd, bern, False, diagonal)


def fit(problem: FitProblem) -> FitResult:
    if problem.basis_choice is Basis.POWER:
        return fit_power(problem)
    return fit_orthogonal(problem)
