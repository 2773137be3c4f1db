import random

import pytest

from seaweed_index.lib.series import (
    SERIES,
    FactorSpec,
    OrderMismatchError,
    TruncatedSeries,
    a300574_factors,
    a300574_gf,
    bounded_parts_factors,
    expand_inverse_product,
    expand_product,
    multiply,
    partition_gf,
    two_colored_gf,
)


def test_truncation_pads_and_cuts():
    assert TruncatedSeries([1, 2], 3).coeffs == (1, 2, 0, 0)
    assert TruncatedSeries([1, 2, 3, 4], 1).coeffs == (1, 2)
    with pytest.raises(ValueError):
        TruncatedSeries([1], -1)


def test_coefficient_access_stays_within_order():
    series = TruncatedSeries([1, 1], 2)
    assert series[1] == 1
    with pytest.raises(IndexError):
        series[3]


def test_multiply_truncates():
    a = TruncatedSeries([1, 1], 2)
    assert (a * a).coeffs == (1, 2, 1)
    assert multiply(a * a, a).coeffs == (1, 3, 3)


def test_order_mismatch():
    with pytest.raises(OrderMismatchError):
        TruncatedSeries([1], 2) * TruncatedSeries([1], 3)
    with pytest.raises(OrderMismatchError):
        TruncatedSeries([1], 2) + TruncatedSeries([1], 3)


def test_partition_gf(partition_counts):
    assert list(partition_gf(20)) == partition_counts


def test_partition_gf_with_bounded_parts():
    # Partitions of n into parts at most 2: floor(n / 2) + 1
    assert list(partition_gf(10, max_part=2)) == [n // 2 + 1 for n in range(11)]


def test_two_colored_gf():
    assert list(two_colored_gf(10)) == [1, 2, 5, 10, 20, 36, 65, 110, 185, 300, 481]


def test_a300574_gf():
    series = a300574_gf(12)
    assert series.coeffs[:4] == (1, 1, 1, 0)
    assert series[3] == 0


def test_a300574_factors():
    factors = a300574_factors(7)
    assert [(f.sign, f.exponent) for f in factors] == [(-1, 1), (1, 3), (-1, 5), (1, 7)]
    assert a300574_factors(0) == []


@pytest.mark.parametrize("order", [0, 1, 5, 20, 40])
def test_inverse_product_times_product_is_one(order):
    for factors in (bounded_parts_factors(order, copies=2), a300574_factors(order)):
        inverse = expand_inverse_product(factors, order)
        product = expand_product(factors, order)
        assert inverse * product == TruncatedSeries.one(order)


def test_factor_spec_validation():
    with pytest.raises(ValueError):
        FactorSpec(sign=2, exponent=1)
    with pytest.raises(ValueError):
        FactorSpec(sign=1, exponent=0)


def test_rows_and_registry():
    assert two_colored_gf(2).rows() == [(0, 1), (1, 2), (2, 5)]
    assert sorted(SERIES) == ["a300574", "two-colored"]


def random_series(rng: random.Random, order: int) -> TruncatedSeries:
    return TruncatedSeries([rng.randint(-50, 50) for _ in range(order + 1)], order)


def test_multiply_is_commutative_and_associative():
    rng = random.Random(7)
    for _ in range(200):
        order = rng.randint(0, 25)
        a, b, c = (random_series(rng, order) for _ in range(3))
        assert multiply(a, b) == multiply(b, a)
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
        assert multiply(a, TruncatedSeries.one(order)) == a


def test_two_colored_coefficients_increase():
    coeffs = two_colored_gf(40).coeffs
    assert all(left < right for left, right in zip(coeffs, coeffs[1:]))
