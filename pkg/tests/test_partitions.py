import itertools
from math import factorial

import pytest

from segre_syzygies.partitions import (
    check_partition,
    conjugate,
    dimension_sn,
    gl_dimension,
    kostka,
    lr_coefficient,
    partition_from_json,
    partition_to_json,
    partitions_of,
    schur_product,
)


def ssyt_count(lam, m):
    """Independent oracle: enumerate semistandard tableaux with entries <= m."""
    rows = len(lam)
    if rows == 0:
        return 1
    if rows > m:
        return 0

    def fill(r, c, current):
        if r == rows:
            return 1
        if c == lam[r]:
            return fill(r + 1, 0, current)
        lo = 1
        if c > 0:
            lo = max(lo, current[r][c - 1])
        if r > 0:
            lo = max(lo, current[r - 1][c] + 1)
        total = 0
        for v in range(lo, m + 1):
            current[r].append(v)
            total += fill(r, c + 1, current)
            current[r].pop()
        return total

    return fill(0, 0, [[] for _ in range(rows)])


def pieri_expected(lam, k, nu):
    """Independent oracle for one-row products: horizontal-strip condition."""
    if sum(nu) != sum(lam) + k:
        return 0
    if len(nu) > len(lam) + 1 or len(nu) < len(lam):
        return 0
    lamp = tuple(lam) + (0,) * (len(nu) - len(lam))
    if any(nu[i] < lamp[i] for i in range(len(nu))):
        return 0
    # no two added cells in one column: nu_{i+1} <= lam_i
    if any(nu[i + 1] > lamp[i] for i in range(len(nu) - 1)):
        return 0
    return 1


def test_conjugate_examples():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate(()) == ()
    assert conjugate((3, 1)) == (2, 1, 1)


def test_conjugate_involution():
    for n in range(8):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam


def test_partitions_of_examples():
    assert partitions_of(0) == ((),)
    assert partitions_of(3) == ((3,), (2, 1), (1, 1, 1))
    assert partitions_of(4, 2) == ((4,), (3, 1), (2, 2))


def test_partitions_of_reverse_lex():
    for n in range(9):
        parts = partitions_of(n)
        assert list(parts) == sorted(parts, reverse=True)
        assert len(set(parts)) == len(parts)


def test_check_partition_rejects():
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((2, 0))


def test_dimension_sn_examples():
    for n in range(1, 7):
        assert dimension_sn((n,)) == 1
    assert dimension_sn((2, 1)) == 2
    assert dimension_sn((2, 2)) == 2
    assert dimension_sn(()) == 1


def test_dimension_squares_sum_to_group_order():
    for n in range(1, 9):
        assert sum(dimension_sn(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


def test_kostka_examples():
    assert kostka((2,), (1, 1)) == 1
    assert kostka((1, 1), (2, 0)) == 0
    assert kostka((2, 1), (1, 1, 1)) == 2


def test_kostka_regular_weight_is_dimension():
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert kostka(lam, (1,) * n) == dimension_sn(lam)


def test_kostka_content_permutation_invariance():
    for lam in partitions_of(4):
        for mu in set(itertools.permutations((2, 1, 1, 0))):
            assert kostka(lam, mu) == kostka(lam, (2, 1, 1))


def test_kostka_size_mismatch():
    with pytest.raises(ValueError):
        kostka((2, 1), (1, 1))


def test_lr_examples():
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2,), (1,), (3,)) == 1
    assert lr_coefficient((2,), (1,), (2, 1)) == 1
    assert lr_coefficient((2,), (1,), (1, 1, 1)) == 0


def test_lr_pieri_oracle():
    for n in range(0, 5):
        for lam in partitions_of(n):
            for k in range(1, 4):
                for nu in partitions_of(n + k):
                    assert lr_coefficient(lam, (k,), nu) == pieri_expected(lam, k, nu)


def test_lr_commutativity():
    parts = [lam for n in range(0, 5) for lam in partitions_of(n)]
    for lam, mu in itertools.product(parts, repeat=2):
        if sum(lam) + sum(mu) > 6:
            continue
        for nu in partitions_of(sum(lam) + sum(mu)):
            assert lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu)


def test_lr_dimension_identity():
    parts = [lam for n in range(0, 5) for lam in partitions_of(n)]
    for lam, mu in itertools.product(parts, repeat=2):
        total = sum(lam) + sum(mu)
        if total > 6:
            continue
        for m in range(5):
            lhs = sum(
                lr_coefficient(lam, mu, nu) * gl_dimension(nu, m)
                for nu in partitions_of(total)
            )
            assert lhs == gl_dimension(lam, m) * gl_dimension(mu, m)


def test_gl_dimension_examples():
    assert gl_dimension((1, 1), 2) == 1
    assert gl_dimension((1, 1, 1), 2) == 0
    assert gl_dimension((2, 1), 2) == 2


def test_gl_dimension_ssyt_oracle():
    for n in range(0, 6):
        for lam in partitions_of(n):
            for m in range(0, 4):
                assert gl_dimension(lam, m) == ssyt_count(lam, m)


def test_partition_json():
    assert partition_to_json((2, 1)) == [2, 1]
    assert partition_to_json(()) == []
    assert partition_from_json([2, 1]) == (2, 1)
    assert partition_from_json([]) == ()
    with pytest.raises(ValueError):
        partition_from_json("2,1")
    with pytest.raises(ValueError):
        partition_from_json([1, 2])


def test_schur_product_matches_lr():
    expansion = schur_product((2, 1), (2, 1))
    for nu, coeff in expansion.items():
        assert coeff == lr_coefficient((2, 1), (2, 1), nu)
    assert sum(c * gl_dimension(nu, 3) for nu, c in expansion.items()) == 8 * 8
