from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chebbern.bernstein import BernsteinPoly, evaluate
from chebbern.exactnum import ExactScalar
from chebbern.oracle import (
    MonomialForm,
    SingularMatrixError,
    convert_bruteforce,
    from_monomial,
    integrate_plain,
    integrate_weighted,
    invert_exact,
    matmul,
    identity,
    solve_exact,
    to_monomial,
)
from chebbern.tschebyscheff import generalized_u_bernstein

F = Fraction
small = st.fractions(min_value=-20, max_value=20, max_denominator=30)


@pytest.mark.parametrize("coeffs, expected", [
    ([1, 1], (1, 0)),
    ([0, 1], (0, 1)),
    ([F(-9, 8), F(9, 8)], (F(-9, 8), F(9, 4))),
])
def test_to_monomial_examples(coeffs, expected):
    assert to_monomial(BernsteinPoly.from_coeffs(coeffs)).coeffs == expected


@given(st.lists(small, min_size=1, max_size=16))
def test_monomial_round_trip(coeffs):
    p = BernsteinPoly.from_coeffs(coeffs)
    assert from_monomial(to_monomial(p)) == p


@given(st.lists(small, min_size=1, max_size=10), st.fractions(min_value=0, max_value=1, max_denominator=40))
def test_monomial_form_evaluates_same(coeffs, x):
    p = BernsteinPoly.from_coeffs(coeffs)
    assert to_monomial(p)(x) == evaluate(p, x)


@pytest.mark.parametrize("coeffs, expected", [
    ([1], ExactScalar(F(1, 8), 1)),
    ([0, 1], ExactScalar(F(1, 16), 1)),
    ([], ExactScalar.zero(1)),
])
def test_integrate_weighted_examples(coeffs, expected):
    assert integrate_weighted(MonomialForm(coeffs)) == expected


def test_integrate_plain():
    assert integrate_plain(MonomialForm([1, 1, 1])) == F(1) + F(1, 2) + F(1, 3)


def test_bruteforce_examples():
    basis = [generalized_u_bernstein(r) for r in range(2)]
    assert convert_bruteforce(basis[1], basis) == [0, 1]
    assert convert_bruteforce(BernsteinPoly.basis(1, 0), basis) == [F(1, 2), F(-4, 9)]
    assert convert_bruteforce(BernsteinPoly(1, (0, 0)), basis) == [0, 0]


def test_bruteforce_reports_dependent_basis():
    basis = [BernsteinPoly(1, (1, 1)), BernsteinPoly(1, (2, 2))]
    with pytest.raises(ValueError, match="dependent"):
        convert_bruteforce(BernsteinPoly(1, (0, 1)), basis)


@pytest.mark.parametrize("a, b, expected", [
    ([[1, 0], [0, 1]], [F(3, 7), -2], [F(3, 7), -2]),
    ([[1, F(1, 2)], [F(1, 2), F(1, 3)]], [F(1, 3), F(1, 4)], [F(-1, 6), 1]),
    ([[1, F(-9, 8)], [1, F(9, 8)]], [1, 0], [F(1, 2), F(-4, 9)]),
])
def test_solve_exact_examples(a, b, expected):
    assert solve_exact(a, b) == expected


def test_solve_needs_pivoting():
    assert solve_exact([[0, 1], [1, 0]], [2, 3]) == [3, 2]


def test_singular_reported_with_pivot():
    with pytest.raises(SingularMatrixError) as info:
        solve_exact([[1, 2], [2, 4]], [1, 1])
    assert info.value.pivot == 1


@given(st.integers(1, 6).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n),
        st.lists(small, min_size=n, max_size=n),
    )))
def test_solve_exact_residual_zero(ab):
    a, b = ab
    try:
        x = solve_exact(a, b)
    except SingularMatrixError:
        return
    assert [sum(r * v for r, v in zip(row, x)) for row in a] == b


def test_invert_hilbert():
    h = [[F(1, i + j + 1) for j in range(7)] for i in range(7)]
    assert matmul(h, invert_exact(h)) == identity(7)
    # known integer inverse entry of the 7x7 Hilbert matrix
    assert invert_exact(h)[0][0] == 49
