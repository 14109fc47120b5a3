import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zmeasures.errors import DomainError, ResourceCapError
from zmeasures.partitions import (
    HALF,
    LatticeConfig,
    YoungDiagram,
    enumerate_partitions,
    frobenius_coordinates,
    generalized_pochhammer,
    hook_products,
    iter_partition_tuples,
    theta_content,
)

PARTITION_COUNTS = {1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 10: 42, 20: 627}


def test_diagram_validation():
    with pytest.raises(DomainError):
        YoungDiagram((1, 2))
    with pytest.raises(DomainError):
        YoungDiagram((2, 0))
    assert YoungDiagram((3, 1)).size == 4
    assert YoungDiagram().size == 0


def test_transpose_involution():
    lam = YoungDiagram((5, 3, 3, 1))
    assert lam.transpose().parts == (4, 3, 3, 1, 1)
    assert lam.transpose().transpose() == lam


def test_enumeration_counts():
    for n, count in PARTITION_COUNTS.items():
        assert len(enumerate_partitions(n)) == count


def test_enumeration_order_reverse_lex():
    tuples = list(iter_partition_tuples(4))
    assert tuples == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumeration_cap():
    with pytest.raises(ResourceCapError):
        list(iter_partition_tuples(101))


def test_enumeration_row_column_constraints():
    rows2 = list(iter_partition_tuples(6, max_rows=2))
    assert all(len(p) <= 2 for p in rows2)
    assert (3, 3) in rows2 and (4, 2) in rows2
    cols2 = list(iter_partition_tuples(6, max_cols=2))
    assert all(p[0] <= 2 for p in cols2)


def test_theta_content():
    assert theta_content((1, 1), 0.5) == 0.0
    assert theta_content((2, 1), 0.5) == -0.5
    assert theta_content((1, 3), 2) == 2.0


def test_hook_products_theta_one_is_hook_length_squared_shifted():
    # at theta = 1 both products equal the classical hook product
    lam = YoungDiagram((3, 1))
    h, hp = hook_products(lam, 1)
    assert h == pytest.approx(hp)
    assert h == pytest.approx(4 * 2 * 1 * 1)


def test_generalized_pochhammer_row_factorization():
    lam = YoungDiagram((2, 1))
    z = 1.3 + 0.4j
    th = 0.5
    expected = (z) * (z + 1) * (z - th)
    assert generalized_pochhammer(z, lam, th) == pytest.approx(expected)


def test_generalized_pochhammer_exact_zero():
    # z = theta kills the (2,1) box factor z - theta
    assert generalized_pochhammer(0.5, YoungDiagram((1, 1)), 0.5) == 0


def test_frobenius_coordinates_theta_one():
    # (4, 3, 1) at theta = 1: a_i = lam_i - i, and b_j = lam'_j - j + 1
    # because the zero-content diagonal belongs to the negative part
    cfg = frobenius_coordinates(YoungDiagram((4, 3, 1)), 1)
    assert cfg.negatives == (Fraction(-7, 2), Fraction(-3, 2))
    assert cfg.positives == (Fraction(7, 2), Fraction(3, 2))


def test_frobenius_coordinates_half_theta_repeats():
    # (3,3) at theta = 1/2: both rows cross the diagonal, a = (2, 2)
    cfg = frobenius_coordinates(YoungDiagram((3, 3)), HALF)
    assert cfg.negatives == (Fraction(-5, 2), Fraction(-5, 2))


def test_frobenius_single_box():
    # (1) has one box of content 0, which is negative by convention
    cfg = frobenius_coordinates(YoungDiagram((1,)), HALF)
    assert cfg.negatives == ()
    assert cfg.positives == (Fraction(3, 2),)


def test_frobenius_box_count_matches():
    for parts in iter_partition_tuples(8):
        lam = YoungDiagram(parts)
        for th in (HALF, Fraction(1), Fraction(2)):
            cfg = frobenius_coordinates(lam, th)
            a_sum = sum(-(v + HALF) for v in cfg.negatives)
            b_sum = sum(v - HALF for v in cfg.positives)
            assert a_sum + b_sum == lam.size


def test_lattice_config_validation():
    with pytest.raises(DomainError):
        LatticeConfig((Fraction(-1, 2),), (Fraction(1, 3),))
    with pytest.raises(DomainError):
        LatticeConfig((), (Fraction(1, 2), Fraction(3, 2)))  # must descend


@given(st.lists(st.integers(min_value=1, max_value=8), min_size=1, max_size=6))
def test_transpose_preserves_size(parts):
    lam = YoungDiagram(tuple(sorted(parts, reverse=True)))
    assert lam.transpose().size == lam.size


@given(st.integers(min_value=1, max_value=12))
def test_enumeration_sizes_consistent(n):
    for parts in iter_partition_tuples(n):
        assert sum(parts) == n
        assert list(parts) == sorted(parts, reverse=True)
