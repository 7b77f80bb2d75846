"""Run every identity check against the independent oracles.

Each check yields a ``CheckResult``. Checks marked ``expected=False`` document
a known discrepancy in the published formulas; they are reported but never
count as failures.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bernstein import elevate, evaluate, weighted_inner_product
from .exactnum import (
    ExactScalar,
    binom,
    binom_half,
    double_factorial,
    double_factorial_identity_check,
    gamma_half,
)
from .oracle import identity
from .transform import (
    consistency_report,
    entries_corollary,
    entries_raw,
    forward_matrix,
    inverse_matrix_exact,
    weighted_pairing,
)
from .tschebyscheff import (
    Convention,
    SignMode,
    classical_u,
    classical_u_shifted_bernstein,
    generalized_u_bernstein,
    theta,
    theta_by_recurrence,
)

__all__ = ["CheckResult", "PARAM_SETS", "run_verification", "all_expected_pass"]

PARAM_SETS = [(0, 0), (1, 0), (0, 1), (1, 1), (Fraction(1, 2), 2)]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    expected: bool = True  # False: discrepancy is a documented finding

    @property
    def status(self) -> str:
        if not self.expected:
            return "REPORTED"
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "passed": self.passed, "detail": self.detail}


def _sample_points(count: int = 9) -> list[Fraction]:
    return [Fraction(j, count - 1) for j in range(count)]


def check_double_factorial() -> CheckResult:
    ok = all(double_factorial_identity_check(n) for n in range(201))
    ok &= all(double_factorial(2 * n) == 2**n * math.factorial(n) for n in range(101))
    ok &= all(
        math.factorial(2 * n) == double_factorial(2 * n - 1) * 2**n * math.factorial(n)
        for n in range(101)
    )
    return CheckResult("double factorial identities", ok, "n!! closed forms, n <= 200")


def check_half_factorial() -> CheckResult:
    # (n + 1/2)! = Gamma(n + 3/2) = sqrt(pi) (2n+1)!! / 2^(n+1)
    ok = all(
        gamma_half(2 * n + 3).coeff == Fraction(double_factorial(2 * n + 1), 2 ** (n + 1))
        and gamma_half(2 * n + 3).sqrt_pi
        for n in range(101)
    )
    return CheckResult("half-integer factorial", ok, "n <= 100")


def check_half_binomial_identity() -> CheckResult:
    ok = all(
        binom_half(r, k) * binom_half(r, r - k)
        == Fraction((2 * r + 1) ** 2 * binom(2 * r, r) * binom(2 * r, 2 * k),
                    2 ** (2 * r) * (2 * r - 2 * k + 1) * (2 * k + 1))
        for r in range(31)
        for k in range(r + 1)
    )
    return CheckResult("half-integer binomial product identity", ok, "r <= 30")


def check_theta_recurrence() -> CheckResult:
    ok = all(
        theta_by_recurrence(r) == tuple(theta(i, r) for i in range(r + 1)) for r in range(31)
    )
    return CheckResult("theta recurrence vs closed form", ok, "r <= 30")


def check_sign(n_max: int) -> list[CheckResult]:
    xs = _sample_points()
    corrected = all(
        evaluate(classical_u_shifted_bernstein(n, SignMode.CORRECTED), x) == classical_u(n, 2 * x - 1)
        for n in range(n_max + 1)
        for x in xs
    )
    bad = [
        n for n in range(n_max + 1)
        if any(evaluate(classical_u_shifted_bernstein(n, SignMode.AS_PRINTED), x) != classical_u(n, 2 * x - 1)
               for x in xs)
    ]
    return [
        CheckResult("U_n(2x-1) Bernstein form, corrected sign", corrected, f"n <= {n_max}"),
        CheckResult(
            "U_n(2x-1) Bernstein form, sign as printed",
            not bad,
            f"disagrees with the recurrence for n in {bad}",
            expected=False,
        ),
    ]


def check_orthogonality(n_max: int) -> CheckResult:
    forms = [classical_u_shifted_bernstein(n) for n in range(n_max + 1)]
    ok = True
    for n, p in enumerate(forms):
        for m, q in enumerate(forms[: n + 1]):
            val = ExactScalar.zero(1)
            for i, a in enumerate(p.coeffs):
                for j, b in enumerate(q.coeffs):
                    val = val + a * b * weighted_inner_product(n, i, m, j)
            want = ExactScalar(Fraction(1, 8), 1) if n == m else ExactScalar.zero(1)
            ok &= val == want
    return CheckResult("orthogonality pi/8 delta_nm", ok, f"n, m <= {n_max}")


def check_transposition(n_max: int) -> list[CheckResult]:
    trans, raw = True, True
    for params in PARAM_SETS:
        for n in range(n_max + 1):
            cor = entries_corollary(n, params)
            trans &= forward_matrix(n, params).T.entries == cor.entries
            raw &= entries_raw(n, params).entries == cor.entries
    return [
        CheckResult("forward matrix = transposed N entries", trans, f"n <= {n_max}, {len(PARAM_SETS)} mass pairs"),
        CheckResult("half-integer N form = integer-binomial form", raw, f"n <= {n_max}"),
    ]


def pairing_oracle(r: int, n: int, i: int, params) -> ExactScalar:
    """int w B_r^n U_i^(M,N) via the elevated Bernstein form and the Beta integral."""
    u = elevate(generalized_u_bernstein(i, params, Convention.PRINTED), n)
    acc = ExactScalar.zero(1)
    for j, c in enumerate(u.coeffs):
        if c:
            acc = acc + c * weighted_inner_product(n, r, n, j)
    return acc


def check_pairing(n_max: int) -> CheckResult:
    ok = all(
        weighted_pairing(r, n, i, params) == pairing_oracle(r, n, i, params)
        for params in PARAM_SETS
        for n in range(n_max + 1)
        for r in range(n + 1)
        for i in range(n + 1)
    )
    return CheckResult("Lambda integrals = Bernstein-form integrals", ok, f"n <= {n_max}")


def check_exact_inverse(n_max: int) -> CheckResult:
    ok = True
    for conv in Convention:
        for params in PARAM_SETS:
            for n in range(n_max + 1):
                ok &= forward_matrix(n, params, conv) @ inverse_matrix_exact(n, params, conv) == identity(n + 1)
    return CheckResult("forward x exact inverse = I", ok, f"n <= {n_max}, both conventions")


def check_printed_inverse(n_max: int) -> list[CheckResult]:
    out = []
    for conv in Convention:
        head = consistency_report(min(1, n_max), (0, 0), conv)
        full = consistency_report(n_max, (0, 0), conv)
        ratios = ", ".join("-" if r is None else str(r) for r in head.per_row_ratio)
        out.append(CheckResult(
            f"closed-form inverse round trip ({conv.value})",
            full.is_exact_inverse,
            f"n={head.n}: row ratios printed/exact [{ratios}], deviation {head.max_roundtrip_deviation}; "
            f"n={n_max}: deviation {full.max_roundtrip_deviation}",
            expected=False,
        ))
    return out


def run_verification(n: int = 8) -> list[CheckResult]:
    if n < 0:
        raise ValueError("n must be non-negative")
    results = [
        check_double_factorial(),
        check_half_factorial(),
        check_half_binomial_identity(),
        check_theta_recurrence(),
    ]
    results += check_sign(max(n, 12))
    results.append(check_orthogonality(max(n, 10)))
    results += check_transposition(n)
    results.append(check_pairing(min(n, 6)))
    results.append(check_exact_inverse(n))
    results += check_printed_inverse(n)
    return results


def all_expected_pass(results) -> bool:
    return all(r.passed for r in results if r.expected)
