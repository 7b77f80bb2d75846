import math
from fractions import Fraction

import numpy as np
import pytest

from chebbern.bernstein import BernsteinPoly
from chebbern.exactnum import ExactScalar
from chebbern.leastsq import (
    Basis,
    FitProblem,
    IllConditionedError,
    Samples,
    fit,
    fit_orthogonal,
    fit_power,
    hilbert_normal_matrix,
    integrate_sin2,
    power_normal_matrix,
    residual,
)
from chebbern.oracle import to_monomial
from chebbern.tschebyscheff import Convention, generalized_u_bernstein

F = Fraction


def test_hilbert_examples():
    assert hilbert_normal_matrix(0) == [[1]]
    assert hilbert_normal_matrix(1) == [[1, F(1, 2)], [F(1, 2), F(1, 3)]]
    assert hilbert_normal_matrix(2)[2][2] == F(1, 5)


def test_power_normal_matrix_is_hilbert():
    for n in range(13):
        assert power_normal_matrix(n) == hilbert_normal_matrix(n)


@pytest.mark.parametrize("target, n, coeffs, res", [
    ([0, 1], 1, (0, 1), 0),
    ([0, 0, 1], 2, (0, 0, 1), 0),
    ([0, 0, 1], 1, (F(-1, 6), 1), F(1, 180)),
])
def test_fit_power_examples(target, n, coeffs, res):
    r = fit_power(FitProblem(target, n))
    assert r.coeffs == coeffs
    assert r.residual == res
    assert r.exact


def test_residual_1_180_by_direct_integration():
    # int_0^1 (x^2 - x + 1/6)^2 dx expanded by hand: x^4 - 2x^3 + (4/3)x^2 - x/3 + 1/36
    direct = F(1, 5) - F(2, 4) + F(4, 9) - F(1, 6) + F(1, 36)
    assert direct == F(1, 180)


def test_fit_orthogonal_examples():
    u2 = to_monomial(generalized_u_bernstein(2)).coeffs
    r = fit_orthogonal(FitProblem(list(u2), 3, Basis.GEN_CHEB2))
    assert r.coeffs == (0, 0, 1, 0) and r.residual == 0

    r = fit_orthogonal(FitProblem([1], 0, Basis.GEN_CHEB2))
    assert r.coeffs == (1,) and r.residual == 0

    # x = 1/2 + (4/9) * (9/8)(2x - 1)
    r = fit_orthogonal(FitProblem([0, 1], 1, Basis.GEN_CHEB2))
    assert r.coeffs == (F(1, 2), F(4, 9))
    assert r.bernstein_form == BernsteinPoly(1, (0, 1))


def test_a1_by_hand_projection():
    # <x, U1>_w / <U1, U1>_w with U1 = (9/8)(2x-1); <x,x^k> moments are Beta values
    m1, m2 = F(1, 16), F(5, 128)  # int w x, int w x^2  (in units of pi)
    num = F(9, 8) * (2 * m2 - m1)
    den = F(81, 64) * (4 * m2 - 4 * m1 + F(1, 8))
    assert num / den == F(4, 9)


@pytest.mark.parametrize("conv", list(Convention))
@pytest.mark.parametrize("params", [(0, 0), (1, 0), (Fraction(1, 2), 2)])
def test_projection_idempotent(conv, params):
    for n in range(5):
        for basis in Basis:
            target = [F(k + 1, 3) * (-1) ** k for k in range(n + 1)]
            r = fit(FitProblem(target, n, basis, params, conv))
            assert r.residual == 0 and r.weighted_residual == 0


@pytest.mark.parametrize("conv", list(Convention))
def test_orthogonal_fit_degree_stable(conv):
    target = [F(1), F(-2, 3), F(5, 7), 0, F(1, 11), F(3, 2), F(-1, 5), F(2, 9), 1]
    for n in range(7):
        a = fit(FitProblem(target, n, Basis.GEN_CHEB2, (0, 0), conv)).coeffs
        b = fit(FitProblem(target, n + 1, Basis.GEN_CHEB2, (0, 0), conv)).coeffs
        assert a == b[: n + 1]


def test_masses_make_gram_non_diagonal():
    r = fit(FitProblem([0, 0, 0, 1], 2, Basis.GEN_CHEB2, (1, 2)))
    assert not r.gram_diagonal


def test_monotone_residuals_exact():
    target = [1, -1, F(1, 2), F(-1, 6), F(1, 24), F(-1, 120), F(1, 720), F(-1, 5040)]
    for params in [(0, 0), (1, 1)]:
        prev_plain = prev_wtd = None
        for n in range(7):
            p = fit(FitProblem(target, n, Basis.POWER))
            o = fit(FitProblem(target, n, Basis.GEN_CHEB2, params))
            if prev_plain is not None:
                assert p.residual <= prev_plain
                assert o.weighted_residual.coeff <= prev_wtd.coeff
            prev_plain, prev_wtd = p.residual, o.weighted_residual


def test_power_fit_minimizes_plain_and_orthogonal_weighted():
    f = [0, 0, 0, 1]
    p = fit(FitProblem(f, 2, Basis.POWER))
    o = fit(FitProblem(f, 2, Basis.GEN_CHEB2))
    assert p.residual <= o.residual
    assert o.weighted_residual.coeff <= p.weighted_residual.coeff


def test_residual_examples():
    assert residual([0, 0, 1], BernsteinPoly(2, (0, 0, 1))) == 0
    p = fit(FitProblem([0, 0, 1], 1)).bernstein_form
    assert residual([0, 0, 1], p) == F(1, 180)
    assert residual([0], BernsteinPoly(1, (1, 1))) == 1
    assert residual([0], BernsteinPoly(1, (1, 1)), weighted=True) == ExactScalar(F(1, 8), 1)


class TestQuadraturePath:
    def test_integrate_sin2_weight(self):
        assert integrate_sin2(lambda x: np.ones_like(x), weighted=True) == pytest.approx(math.pi / 8, rel=1e-14)
        assert integrate_sin2(lambda x: x**3) == pytest.approx(0.25, rel=1e-14)

    def test_callable_matches_exact_polynomial(self):
        exact = fit(FitProblem([0, 0, 1], 1))
        approx = fit(FitProblem(lambda x: x * x, 1))
        assert approx.residual == pytest.approx(float(exact.residual), rel=1e-10)
        assert np.allclose(approx.coeffs, [float(c) for c in exact.coeffs], atol=1e-12)

    def test_orthogonal_callable_matches_exact(self):
        exact = fit(FitProblem([0, 0, 0, 1], 2, Basis.GEN_CHEB2, (1, 1)))
        approx = fit(FitProblem(lambda x: x**3, 2, Basis.GEN_CHEB2, (1, 1)))
        assert np.allclose(approx.coeffs, [float(c) for c in exact.coeffs], rtol=1e-10)
        assert approx.weighted_residual == pytest.approx(float(exact.weighted_residual), rel=1e-8)

    def test_sqrt_target_converges(self):
        r = fit(FitProblem(np.sqrt, 4, Basis.GEN_CHEB2))
        assert r.weighted_residual < 1e-3
        assert not r.exact

    def test_monotone_for_exp(self):
        for basis, key in [(Basis.POWER, "residual"), (Basis.GEN_CHEB2, "weighted_residual")]:
            vals = [getattr(fit(FitProblem(math.exp, n, basis)), key) for n in range(6)]
            assert all(b <= a for a, b in zip(vals, vals[1:]))

    def test_ill_conditioning_is_surfaced(self):
        with pytest.raises(IllConditionedError):
            fit(FitProblem(math.exp, 14))

    def test_samples_target(self):
        xs = np.linspace(0, 1, 401)
        s = Samples(tuple(xs), tuple(xs**2))
        r = fit(FitProblem(s, 1))
        assert np.allclose(r.coeffs, [-1 / 6, 1], atol=1e-4)

    @pytest.mark.parametrize("x, y", [((0, 0.5, 0.4), (1, 2, 3)), ((-0.1, 0.5), (1, 2)), ((0, 1), (1,))])
    def test_samples_validation(self, x, y):
        with pytest.raises(ValueError):
            Samples(x, y)
