"""Truncated formal series in commuting variables indexed by partitions.

A monomial is a multiset of partitions; its order is the multiset size, and
it is degree-homogeneous of degree d when every partition in it has size d.
All closed-form syzygy series live here: the Euler-characteristic slices,
the small-p syzygy series of the Segre embedding, the Lascoux leading term
and the two sides of the tensor-Schur identity.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .characters import character_table, class_data
from .errors import UnsupportedError
from .partitions import (
    Partition,
    check_partition,
    conjugate,
    gl_dimension,
    partitions_of,
)
from .schur_ring import SymFunc, boxtimes, power_sum

Monomial = tuple[Partition, ...]


def _part_key(lam: Partition):
    return (sum(lam), lam)


def canonical_monomial(parts) -> Monomial:
    return tuple(sorted((tuple(p) for p in parts), key=_part_key))


def monomial_order(mono: Monomial) -> int:
    return len(mono)


def monomial_degree(mono: Monomial) -> int | None:
    """Common part size of a degree-homogeneous monomial, else None.

    The order-0 monomial and monomials mixing part sizes carry no degree.
    """
    sizes = {sum(lam) for lam in mono}
    if len(sizes) == 1:
        return sizes.pop()
    return None


class TruncationPolicy(NamedTuple):
    """Keep monomials of order <= max_order whose parts have size <= max_part_size."""

    max_order: int = 5
    max_part_size: int = 6

    def admits(self, mono: Monomial) -> bool:
        if len(mono) > self.max_order:
            return False
        return all(sum(lam) <= self.max_part_size for lam in mono)


DEFAULT_POLICY = TruncationPolicy()


class PartitionSeries:
    """Truncated series with exact-rational coefficients.

    Immutable by convention; all operations return new series.  Equality
    compares terms only, so series expanded under compatible policies agree
    when their stored terms do.
    """

    __slots__ = ("policy", "terms")

    def __init__(self, policy: TruncationPolicy, terms: dict[Monomial, Fraction] | None = None):
        self.policy = policy
        cleaned: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c and policy.admits(mono):
                    key = canonical_monomial(mono)
                    total = cleaned.get(key, Fraction(0)) + c
                    if total:
                        cleaned[key] = total
                    else:
                        cleaned.pop(key, None)
        self.terms = cleaned

    @staticmethod
    def zero(policy: TruncationPolicy) -> "PartitionSeries":
        return PartitionSeries(policy)

    @staticmethod
    def one(policy: TruncationPolicy) -> "PartitionSeries":
        return PartitionSeries(policy, {(): Fraction(1)})

    @staticmethod
    def variable(lam: Partition, policy: TruncationPolicy) -> "PartitionSeries":
        lam = check_partition(lam)
        if not lam:
            raise ValueError("the zero partition is not a series variable")
        return PartitionSeries(policy, {(lam,): Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, PartitionSeries) and self.terms == other.terms

    def __add__(self, other: "PartitionSeries") -> "PartitionSeries":
        self._check_policy(other)
        result = dict(self.terms)
        for mono, c in other.terms.items():
            result[mono] = result.get(mono, Fraction(0)) + c
        return PartitionSeries(self.policy, result)

    def __sub__(self, other: "PartitionSeries") -> "PartitionSeries":
        return self + (-other)

    def __neg__(self) -> "PartitionSeries":
        return PartitionSeries(self.policy, {m: -c for m, c in self.terms.items()})

    def scale(self, c) -> "PartitionSeries":
        c = Fraction(c)
        return PartitionSeries(self.policy, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "PartitionSeries") -> "PartitionSeries":
        self._check_policy(other)
        result: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if len(m1) + len(m2) > self.policy.max_order:
                    continue
                mono = canonical_monomial(m1 + m2)
                result[mono] = result.get(mono, Fraction(0)) + c1 * c2
        return PartitionSeries(self.policy, result)

    def _check_policy(self, other: "PartitionSeries") -> None:
        if self.policy != other.policy:
            raise ValueError(f"truncation policies differ: {self.policy} vs {other.policy}")

    def coefficient(self, mono) -> Fraction:
        return self.terms.get(canonical_monomial(mono), Fraction(0))

    def order_component(self, n: int) -> "PartitionSeries":
        return PartitionSeries(
            self.policy, {m: c for m, c in self.terms.items() if len(m) == n}
        )

    def degree_slice(self, d: int, order: int | None = None) -> "PartitionSeries":
        """Terms of degree d (optionally restricted to one order)."""
        kept = {
            m: c
            for m, c in self.terms.items()
            if m and monomial_degree(m) == d and (order is None or len(m) == order)
        }
        return PartitionSeries(self.policy, kept)

    def __repr__(self) -> str:
        if not self.terms:
            return "PartitionSeries(0)"
        bits = []
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            bits.append(f"{self.terms[mono]}*X{mono}")
        return "PartitionSeries(" + " + ".join(bits) + ")"


def series_mul(a: PartitionSeries, b: PartitionSeries) -> PartitionSeries:
    return a * b


def order_normalize(a: PartitionSeries) -> PartitionSeries:
    """Multiply each order-n component by n! (pass from averaged to plain counts)."""
    return PartitionSeries(
        a.policy, {m: c * factorial(len(m)) for m, c in a.terms.items()}
    )


def _linear_embedding(x: SymFunc, policy: TruncationPolicy) -> PartitionSeries:
    terms = {}
    for lam, c in x.terms.items():
        if not lam:
            raise ValueError("exponential arguments must have no constant term")
        if sum(lam) <= policy.max_part_size:
            terms[(lam,)] = c
    return PartitionSeries(policy, terms)


def exp_series(x: SymFunc, policy: TruncationPolicy) -> PartitionSeries:
    """exp of a constant-term-free ring element, expanded to the truncation order."""
    linear = _linear_embedding(x, policy)
    result = PartitionSeries.one(policy)
    power = PartitionSeries.one(policy)
    for n in range(1, policy.max_order + 1):
        power = power * linear
        if not power:
            break
        result = result + power.scale(Fraction(1, factorial(n)))
    return result


def exp_combination(
    terms, policy: TruncationPolicy
) -> PartitionSeries:
    """Sum of scaled exponentials of ring elements without constant term."""
    total = PartitionSeries.zero(policy)
    for coeff, x in terms:
        total = total + exp_series(x, policy).scale(coeff)
    return total


def euler_chi(k: int, policy: TruncationPolicy = DEFAULT_POLICY) -> PartitionSeries:
    """Degree-k slice of the alternating sum of all syzygy series of the Segre.

    Built as a signed combination of exponentials of products of a one-row
    Schur symbol with power-sum elements; the degree-0 slice is the constant 1.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return PartitionSeries.one(policy)
    combo = []
    for p in range(k + 1):
        row = SymFunc.basis((k - p,)) if k - p else SymFunc.unit()
        for lam in partitions_of(p):
            data = class_data(lam)
            coeff = Fraction((-1) ** p * data.class_size * data.sign, factorial(p))
            combo.append((coeff, boxtimes(row, power_sum(lam))))
    return exp_combination(combo, policy)


def f_segre(p: int, policy: TruncationPolicy = DEFAULT_POLICY) -> PartitionSeries:
    """The p-syzygy series of the Segre embedding for p = 1, 2, 3.

    These are the values pinned down by the vanishing results for small p;
    beyond p = 3 the Euler characteristic no longer determines the series.
    """
    if p not in (1, 2, 3):
        raise UnsupportedError(f"closed form available only for p in {{1, 2, 3}}, got {p}")
    return euler_chi(p + 1, policy).scale((-1) ** p)


def f4_degree5(policy: TruncationPolicy = DEFAULT_POLICY) -> PartitionSeries:
    """Degree-5 part of the 4-syzygy series (the part the Euler slice determines)."""
    return euler_chi(5, policy)


def tensor_schur_series_closed(
    lam: Partition, policy: TruncationPolicy = DEFAULT_POLICY
) -> PartitionSeries:
    """Series of the Schur functor for lam applied to an n-fold tensor product,
    via the closed exponential formula."""
    lam = check_partition(lam)
    p = sum(lam)
    if p < 1:
        raise ValueError("lam must be a non-zero partition")
    table = character_table(p)
    combo = []
    for mu in partitions_of(p):
        size = class_data(mu).class_size
        coeff = Fraction(size * table.entry(lam, mu), factorial(p))
        combo.append((coeff, power_sum(mu)))
    return exp_combination(combo, policy)


def tensor_schur_series_recurrence(
    lam: Partition, policy: TruncationPolicy = DEFAULT_POLICY
) -> PartitionSeries:
    """Same series as the closed form, built from the Kronecker recurrence.

    The order-n vector is 1/n times the Kronecker-matrix product of the
    order-(n-1) vector with the degree-p variables; the order-0 vector is
    supported at the one-row partition.
    """
    from .characters import kronecker_coefficient

    lam = check_partition(lam)
    p = sum(lam)
    if p < 1:
        raise ValueError("lam must be a non-zero partition")
    labels = partitions_of(p)
    variables = {mu: PartitionSeries.variable(mu, policy) if sum(mu) <= policy.max_part_size
                 else PartitionSeries.zero(policy) for mu in labels}
    current = {
        target: (PartitionSeries.one(policy) if target == (p,) else PartitionSeries.zero(policy))
        for target in labels
    }
    total = {target: current[target] for target in labels}
    for n in range(1, policy.max_order + 1):
        step = {target: PartitionSeries.zero(policy) for target in labels}
        for target in labels:
            acc = PartitionSeries.zero(policy)
            for mu in labels:
                for nu in labels:
                    c = kronecker_coefficient(target, mu, nu)
                    if c:
                        acc = acc + (variables[mu] * current[nu]).scale(c)
            step[target] = acc.scale(Fraction(1, n))
        current = step
        for target in labels:
            total[target] = total[target] + current[target]
    return total[lam]


def lascoux_leading(
    p: int, d: int, policy: TruncationPolicy | None = None
) -> PartitionSeries:
    """Order-two, degree-d leading term of the p-syzygy series.

    Built from the rank-one case of the resolution of determinantal
    varieties: pairs of partitions decorate an h-column, (h+1)-row rectangle,
    h = d - p; the term vanishes unless 1 <= h <= sqrt(p).
    """
    if p < 1:
        raise ValueError("p must be positive")
    if d < 0:
        raise ValueError("d must be non-negative")
    if policy is None:
        policy = TruncationPolicy(max_order=2, max_part_size=max(d, 1))
    h = d - p
    if h <= 0 or h * h > p:
        return PartitionSeries.zero(policy)
    remainder = p - h * h
    terms: dict[Monomial, Fraction] = {}
    for a in range(remainder + 1):
        for alpha in partitions_of(a):
            if alpha and alpha[0] > h:
                continue  # alpha must fit in h columns
            for beta in partitions_of(remainder - a, max_rows=h):
                mu = _decorate_rectangle(h, beta, alpha)
                nu = _decorate_rectangle(h, conjugate(alpha), conjugate(beta))
                mono = canonical_monomial((mu, nu))
                terms[mono] = terms.get(mono, Fraction(0)) + Fraction(1, 2)
    return PartitionSeries(policy, terms)


def _decorate_rectangle(h: int, right: Partition, bottom: Partition) -> Partition:
    """Append a partition to the right edge and another below an h x (h+1) rectangle."""
    rows = [h + right[i] for i in range(len(right))]
    rows += [h] * (h + 1 - len(right))
    rows += list(bottom)
    return check_partition(rows)


def small_p_exponential_form(p: int) -> list[tuple[Fraction, SymFunc]]:
    """Exact exponential-combination data of the small-p syzygy series."""
    half = Fraction(1, 2)
    if p == 1:
        s = SymFunc.basis((2,))
        w = SymFunc.basis((1, 1))
        return [(half, s + w), (half, s - w), (Fraction(-1), s)]
    if p == 2:
        s = SymFunc.basis((3,))
        w = SymFunc.basis((1, 1, 1))
        t = SymFunc.basis((2, 1))
        third = Fraction(1, 3)
        return [
            (third, s + w + t.scale(2)),
            (-third, s + w - t),
            (Fraction(-1), s + t),
            (Fraction(1), s),
        ]
    if p == 3:
        s = SymFunc.basis((4,))
        w = SymFunc.basis((1, 1, 1, 1))
        a = SymFunc.basis((3, 1))
        b = SymFunc.basis((2, 2))
        c = SymFunc.basis((2, 1, 1))
        eighth = Fraction(1, 8)
        quarter = Fraction(1, 4)
        return [
            (eighth, s + w + a.scale(3) + b.scale(2) + c.scale(3)),
            (-eighth, s + w - a + b.scale(2) - c),
            (quarter, s - w - a + c),
            (-quarter, s - w + a - c),
            (half, s + b - c),
            (-half, s + a.scale(2) + b + c),
            (Fraction(1), s + a),
            (Fraction(-1), s),
        ]
    raise UnsupportedError(f"exponential form recorded only for p in {{1, 2, 3}}, got {p}")


def dimension_on_factors(series_star, dims, degree: int) -> int:
    """Dimension predicted by an order-normalized series on given factor sizes.

    Sums, over monomials with the order and degree, the coefficient times the
    average over all assignments of the monomial's partitions to the factors.
    """
    n = len(dims)
    from itertools import permutations

    total = Fraction(0)
    for mono, coeff in series_star.terms.items():
        if len(mono) != n or monomial_degree(mono) != degree:
            continue
        perm_sum = 0
        for sigma in permutations(range(n)):
            prod = 1
            for j in range(n):
                prod *= gl_dimension(mono[sigma[j]], dims[j])
                if not prod:
                    break
            perm_sum += prod
        total += coeff * Fraction(perm_sum, factorial(n))
    if total.denominator != 1 or total < 0:
        raise ValueError(f"series does not evaluate to a dimension: {total}")
    return int(total)


def series_to_json(a: PartitionSeries) -> list[dict]:
    out = []
    for mono in sorted(a.terms, key=lambda m: (len(m), m)):
        out.append(
            {
                "monomial": [list(lam) for lam in mono],
                "coeff": str(a.terms[mono]),
            }
        )
    return out


def series_from_json(data, policy: TruncationPolicy) -> PartitionSeries:
    terms: dict[Monomial, Fraction] = {}
    for item in data:
        mono = canonical_monomial(tuple(check_partition(lam) for lam in item["monomial"]))
        terms[mono] = terms.get(mono, Fraction(0)) + Fraction(item["coeff"])
    return PartitionSeries(policy, terms)
