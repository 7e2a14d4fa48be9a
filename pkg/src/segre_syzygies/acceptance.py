"""Self-verification suite: every acceptance check, exact, with time budgets.

Each criterion is a function returning a CriterionResult; run_all executes
them in order and is shared by the command-line `verify` subcommand and the
test suite.  All comparisons are exact; the per-criterion time limits are
part of the contract.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .characters import character_table, kronecker_coefficient, mn_character
from .koszul import koszul_homology, new_syzygy_dimension
from .partitions import dimension_sn, partitions_of
from .rationality import (
    MPoly,
    PolynomialRing,
    divides_up_to_unit,
    geometric_torus_coefficients,
    multinomial,
    multinomial_sum_rational,
    rational_reconstruct,
    weyl_series,
)
from .series import (
    TruncationPolicy,
    dimension_on_factors,
    euler_chi,
    exp_combination,
    f4_degree5,
    f_segre,
    lascoux_leading,
    order_normalize,
    small_p_exponential_form,
    tensor_schur_series_closed,
    tensor_schur_series_recurrence,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float

    @property
    def in_budget(self) -> bool:
        return self.seconds < self.limit

    def line(self) -> str:
        status = "PASS" if self.passed and self.in_budget else "FAIL"
        note = self.detail if self.detail else ""
        if self.passed and not self.in_budget:
            note = f"over time budget ({self.seconds:.1f}s >= {self.limit:.0f}s)"
        suffix = f" -- {note}" if note else ""
        return f"{status} {self.number:02d} {self.name} ({self.seconds:.2f}s){suffix}"


def _run(number: int, name: str, limit: float, fn) -> CriterionResult:
    start = time.perf_counter()
    try:
        detail = fn() or ""
        passed = True
    except AssertionError as exc:
        detail = str(exc) or "assertion failed"
        passed = False
    elapsed = time.perf_counter() - start
    return CriterionResult(number, name, passed, detail if not passed else "", elapsed, limit)


def _mono(*parts):
    return tuple(sorted((tuple(p) for p in parts), key=lambda t: (sum(t), t)))


S2 = (2,)
W2 = (1, 1)


def criterion_1() -> CriterionResult:
    def check():
        policy = TruncationPolicy(5, 4)
        assert exp_combination(small_p_exponential_form(1), policy) == f_segre(1, policy), (
            "exponential form and Euler slice disagree for p=1"
        )

    return _run(1, "exponential-form-p1", 1.0, check)


def criterion_2() -> CriterionResult:
    def check():
        star = order_normalize(f_segre(1, TruncationPolicy(4, 2)))
        assert star.order_component(2).terms == {_mono(W2, W2): Fraction(1)}, "order 2"
        assert star.order_component(3).terms == {_mono(S2, W2, W2): Fraction(3)}, "order 3"
        assert star.order_component(4).terms == {
            _mono(S2, S2, W2, W2): Fraction(6),
            _mono(W2, W2, W2, W2): Fraction(1),
        }, "order 4"

    return _run(2, "f1-star-expansion", 1.0, check)


def criterion_3() -> CriterionResult:
    def check():
        policy = TruncationPolicy(5, 5)
        assert exp_combination(small_p_exponential_form(2), policy) == euler_chi(3, policy), (
            "p=2 exponential form disagrees with the degree-3 Euler slice"
        )
        assert exp_combination(small_p_exponential_form(3), policy) == euler_chi(
            4, policy
        ).scale(-1), "p=3 exponential form disagrees with minus the degree-4 Euler slice"

    return _run(3, "exponential-forms-p2-p3", 30.0, check)


def criterion_4() -> CriterionResult:
    def check():
        for p in (1, 2, 3):
            policy = TruncationPolicy(2, 2 * p + 1)
            series = f_segre(p, policy)
            for d in range(0, 2 * p + 2):
                lhs = lascoux_leading(p, d)
                rhs = series.degree_slice(d, order=2)
                assert lhs == rhs, f"leading-term mismatch at p={p}, d={d}"
        lhs = lascoux_leading(4, 5)
        rhs = f4_degree5(TruncationPolicy(2, 5)).degree_slice(5, order=2)
        assert lhs == rhs, "leading-term mismatch at p=4, d=5"

    return _run(4, "lascoux-leading-term", 60.0, check)


def criterion_5() -> CriterionResult:
    def check():
        r = koszul_homology((2, 2), 1, 2)
        assert r.dimension == 1 and r.decomposition == {((1, 1), (1, 1)): 1}, "(2,2) p=1 d=2"
        r = koszul_homology((2, 2, 2), 1, 2)
        expected = {
            ((2,), (1, 1), (1, 1)): 1,
            ((1, 1), (2,), (1, 1)): 1,
            ((1, 1), (1, 1), (2,)): 1,
        }
        assert r.dimension == 9 and r.decomposition == expected, "(2,2,2) p=1 d=2"
        for d in (3, 4):
            assert koszul_homology((2, 2), 1, d).dimension == 0, f"(2,2) p=1 d={d}"

    return _run(5, "oracle-ground-truth", 10.0, check)


def _support_grid():
    for p in (1, 2):
        for n in (1, 2, 3):
            for dims in itertools.product((1, 2), repeat=n):
                yield p, dims


def criterion_6() -> CriterionResult:
    def check():
        for p, dims in _support_grid():
            for d in range(0, 2 * p + 3):
                if p + 1 <= d <= 2 * p:
                    continue
                r = koszul_homology(dims, p, d)
                assert r.dimension == 0, f"non-zero outside support: {dims} p={p} d={d}"

    return _run(6, "degree-support-sweep", 120.0, check)


def criterion_7() -> CriterionResult:
    def check():
        stars = {
            p: order_normalize(f_segre(p, TruncationPolicy(3, 2 * p))) for p in (1, 2)
        }
        for p, dims in _support_grid():
            for d in range(p + 1, 2 * p + 1):
                predicted = dimension_on_factors(stars[p], dims, d)
                actual = koszul_homology(dims, p, d).dimension
                assert predicted == actual, (
                    f"series predicts {predicted}, oracle finds {actual} "
                    f"at {dims} p={p} d={d}"
                )

    return _run(7, "series-oracle-agreement", 120.0, check)


def criterion_8() -> CriterionResult:
    def check():
        dim, decomp = new_syzygy_dimension((2, 2), 1, 2)
        assert dim == 1 and decomp == {((1, 1), (1, 1)): 1}, "(2,2) p=1 d=2"
        dim, _ = new_syzygy_dimension((2, 2, 2), 1, 2)
        assert dim == 0, "(2,2,2) p=1 d=2"
        dim, _ = new_syzygy_dimension((2, 2, 3), 2, 3)
        assert dim == 0, "(2,2,3) p=2 d=3"

    return _run(8, "cosocle-new-syzygies", 300.0, check)


def criterion_9() -> CriterionResult:
    def check():
        policy = TruncationPolicy(4, 3)
        for p in (1, 2, 3):
            for lam in partitions_of(p):
                closed = tensor_schur_series_closed(lam, policy)
                recur = tensor_schur_series_recurrence(lam, policy)
                assert closed == recur, f"two-sided mismatch at {lam}"

    return _run(9, "tensor-schur-two-sided", 30.0, check)


def criterion_10() -> CriterionResult:
    def check():
        for p in range(1, 7):
            character_table(p)  # constructor validates orthonormality
        for p in range(1, 6):
            labels = partitions_of(p)
            for lam in labels:
                for mu in labels:
                    for nu in labels:
                        base = kronecker_coefficient(lam, mu, nu)
                        for perm in itertools.permutations((lam, mu, nu)):
                            assert kronecker_coefficient(*perm) == base, (
                                f"Kronecker symmetry broken at {lam}, {mu}, {nu}"
                            )
        for n in range(1, 8):
            identity = (1,) * n
            for lam in partitions_of(n):
                assert mn_character(lam, identity) == dimension_sn(lam), (
                    f"character at the identity disagrees with hook dimension at {lam}"
                )

    return _run(10, "character-infrastructure", 30.0, check)


def _direct_multinomial_sum(poly, e, d, nterms):
    out = [Fraction(0)] * nterms
    for k in itertools.product(range(nterms), repeat=d):
        n = sum(k)
        if n >= nterms:
            continue
        value = Fraction(0)
        for expo, c in poly.items():
            value += Fraction(c) * prod(ki**xi for ki, xi in zip(k, expo))
        out[n] += value * multinomial(tuple(ki + ei for ki, ei in zip(k, e)))
    return out


def criterion_11() -> CriterionResult:
    def check():
        one_t = multinomial_sum_rational(1, (0,), 1)
        assert one_t.num == [Fraction(1)] and one_t.den == [Fraction(1), Fraction(-1)], "1/(1-t)"
        two_t = multinomial_sum_rational(1, (0, 0), 2)
        assert two_t.num == [Fraction(1)] and two_t.den == [Fraction(1), Fraction(-2)], "1/(1-2t)"
        k1 = multinomial_sum_rational({(1,): 1}, (0,), 1)
        assert k1.num == [Fraction(0), Fraction(1)] and k1.den == [
            Fraction(1),
            Fraction(-2),
            Fraction(1),
        ], "t/(1-t)^2"
        for d in (1, 2, 3):
            monomials = [(0,) * d]
            monomials += [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
            monomials += [
                tuple((1 if j == i else 0) + (1 if j == k else 0) for j in range(d))
                for i in range(d)
                for k in range(i, d)
            ]
            for e in itertools.product((-2, 0, 2), repeat=d):
                for expo in monomials:
                    poly = {expo: Fraction(1)}
                    closed = multinomial_sum_rational(poly, e, d)
                    assert closed.coefficients(10) == _direct_multinomial_sum(
                        poly, e, d, 10
                    ), f"re-expansion mismatch at d={d}, e={e}, poly={poly}"

    return _run(11, "multinomial-sum-closed-forms", 10.0, check)


def f1_star_polynomial_coefficients(n_terms: int) -> list[MPoly]:
    """Order-graded coefficients of the normalized 1-syzygy series in QQ[s,w]."""
    ring = PolynomialRing(2)
    s, w = ring.variable(0), ring.variable(1)
    star = order_normalize(f_segre(1, TruncationPolicy(n_terms - 1, 2)))
    out = []
    for n in range(n_terms):
        poly = ring.zero
        for mono, c in star.order_component(n).terms.items():
            term = MPoly.constant(2, c)
            for lam in mono:
                term = term * (s if lam == (2,) else w)
            poly = poly + term
        out.append(poly)
    return out


def criterion_12() -> CriterionResult:
    def check():
        ring = PolynomialRing(2)
        s, w = ring.variable(0), ring.variable(1)
        coeffs = f1_star_polynomial_coefficients(8)
        rec = rational_reconstruct(coeffs, 3)
        assert rec is not None, "no rational function found"
        assert rec.coefficients(8) == coeffs, "re-expansion disagrees with the data"
        one = ring.one
        lin = [one, -s]
        quad = [one, -2 * s, s * s - w * w]
        target = [ring.zero] * 4
        for i, a in enumerate(lin):
            for j, b in enumerate(quad):
                target[i + j] = target[i + j] + a * b
        assert divides_up_to_unit(rec.den, target, ring), (
            "denominator does not divide the closed-form denominator"
        )

    return _run(12, "rational-reconstruction-f1", 10.0, check)


def criterion_13() -> CriterionResult:
    def check():
        for d in (1, 2, 3):
            coeffs = geometric_torus_coefficients(d, 5)
            values = weyl_series(d, coeffs, 5)
            assert values == [Fraction(1)] * 5, f"constant-term pairing wrong at d={d}"

    return _run(13, "weyl-constant-term", 5.0, check)


ALL_CRITERIA = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
    criterion_12,
    criterion_13,
]

QUICK_NUMBERS = {1, 2, 5, 9, 11, 12, 13}


def run_all(quick: bool = False) -> list[CriterionResult]:
    results = []
    for number, fn in enumerate(ALL_CRITERIA, start=1):
        if quick and number not in QUICK_NUMBERS:
            continue
        results.append(fn())
    return results
