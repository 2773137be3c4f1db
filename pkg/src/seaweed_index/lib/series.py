"""
Truncated integer power series and the generating-function products used by the statistics.

Arithmetic is exact on Python integers. A series of order N carries the coefficients of q^0 .. q^N and no operation
reads beyond them.
"""

from typing import Iterable, List, Literal, Optional, Sequence, Tuple

from pydantic import PositiveInt
from pydantic.dataclasses import dataclass


class OrderMismatchError(ValueError):
    """
    Raised when combining series truncated at different orders.
    """

    pass


class TruncatedSeries:
    """
    A power series truncated after q^order.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, coeffs: Iterable[int], order: int):
        if order < 0:
            raise ValueError(f"Series order must be non-negative, got {order}")
        coeffs = [int(c) for c in coeffs][: order + 1]
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        self._order = order
        self._coeffs: Tuple[int, ...] = tuple(coeffs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    def __getitem__(self, index: int) -> int:
        if not 0 <= index <= self._order:
            raise IndexError(f"Coefficient {index} is outside order {self._order}")
        return self._coeffs[index]

    def __len__(self) -> int:
        return self._order + 1

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return multiply(self, other)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_orders(self, other)
        return TruncatedSeries((x + y for x, y in zip(self._coeffs, other._coeffs)), self._order)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self._coeffs)!r}, order={self._order})"

    def rows(self) -> List[Tuple[int, int]]:
        """
        (exponent, coefficient) pairs.
        """
        return list(enumerate(self._coeffs))


def _check_orders(a: TruncatedSeries, b: TruncatedSeries):
    if a.order != b.order:
        raise OrderMismatchError(f"Series orders differ: {a.order} and {b.order}")


def multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """
    Cauchy product of two series of equal order, truncated at that order.
    """
    _check_orders(a, b)
    order = a.order
    x, y = a.coeffs, b.coeffs
    product = [0] * (order + 1)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j in range(order + 1 - i):
            product[i + j] += xi * y[j]
    return TruncatedSeries(product, order)


@dataclass(frozen=True)
class FactorSpec:
    """
    The factor 1 + sign * q^exponent. Products are expanded over the inverses of such factors.
    """

    sign: Literal[1, -1]
    exponent: PositiveInt


def expand_inverse_product(factors: Sequence[FactorSpec], order: int) -> TruncatedSeries:
    """
    Expand the product of (1 + s q^e)^-1 over the factors, up to q^order.

    Dividing by 1 + s q^e is the recurrence c[k] -= s * c[k - e], run in increasing k. Factors with e > order do not
    contribute and are skipped.
    """
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for factor in factors:
        sign, exponent = factor.sign, factor.exponent
        if exponent > order:
            continue
        for k in range(exponent, order + 1):
            coeffs[k] -= sign * coeffs[k - exponent]
    return TruncatedSeries(coeffs, order)


def expand_product(factors: Sequence[FactorSpec], order: int) -> TruncatedSeries:
    """
    Expand the product of (1 + s q^e) over the factors, up to q^order.
    """
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for factor in factors:
        sign, exponent = factor.sign, factor.exponent
        if exponent > order:
            continue
        for k in range(order, exponent - 1, -1):
            coeffs[k] += sign * coeffs[k - exponent]
    return TruncatedSeries(coeffs, order)


def bounded_parts_factors(max_part: int, copies: int = 1) -> List[FactorSpec]:
    """
    Factors of the product over m = 1..max_part of (1 - q^m)^-copies.
    """
    return [FactorSpec(sign=-1, exponent=m) for m in range(1, max_part + 1) for _ in range(copies)]


def partition_gf(order: int, max_part: Optional[int] = None) -> TruncatedSeries:
    """
    Generating function of partitions, optionally with parts at most `max_part`.
    """
    bound = order if max_part is None else min(max_part, order)
    return expand_inverse_product(bounded_parts_factors(bound), order)


def two_colored_gf(order: int) -> TruncatedSeries:
    """
    Generating function of partitions into parts of two kinds: the product over m of (1 - x^m)^-2.
    """
    return expand_inverse_product(bounded_parts_factors(order, copies=2), order)


def a300574_factors(order: int) -> List[FactorSpec]:
    """
    Factors 1 + (-1)^k q^(2k - 1) for every k with 2k - 1 <= order.
    """
    return [FactorSpec(sign=(-1) ** k, exponent=2 * k - 1) for k in range(1, (order + 1) // 2 + 1)]


def a300574_gf(order: int) -> TruncatedSeries:
    """
    The product over k of 1 / (1 + (-1)^k q^(2k - 1)) = 1 / ((1 - q)(1 + q^3)(1 - q^5)(1 + q^7)...).
    """
    return expand_inverse_product(a300574_factors(order), order)


SERIES = {
    "two-colored": two_colored_gf,
    "a300574": a300574_gf,
}
