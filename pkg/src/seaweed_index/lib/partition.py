"""
Integer partitions, compositions and two-colored partitions.

Partitions are stored as non-increasing tuples of positive parts, compositions as ordered tuples of positive parts.
Both are immutable and hashable. Enumeration is in reverse lexicographic order throughout.
"""

import itertools
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional, Tuple


class ParseError(ValueError):
    """
    Raised when partition, composition or seaweed type text cannot be parsed.
    """

    pass


def _check_parts(parts: Tuple[int, ...]):
    for part in parts:
        if isinstance(part, bool) or not isinstance(part, int):
            raise ValueError(f"Parts must be integers, got {part!r}")
        if part < 1:
            raise ValueError(f"Parts must be positive, got {part}")


class _Parts:
    """
    Shared storage for a finite sequence of positive parts.
    """

    __slots__ = ("_parts", "_weight")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        _check_parts(parts)
        self._parts = parts
        self._weight = sum(parts)

    @property
    def parts(self) -> Tuple[int, ...]:
        return self._parts

    @property
    def weight(self) -> int:
        return self._weight

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, index):
        return self._parts[index]

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._parts))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._parts!r})"


class Partition(_Parts):
    """
    A partition: a non-increasing sequence of positive integers. The empty partition has weight 0.
    """

    __slots__ = ()

    def __init__(self, parts: Iterable[int] = ()):
        super().__init__(parts)
        for left, right in zip(self._parts, self._parts[1:]):
            if left < right:
                raise ValueError(f"Partition parts must be non-increasing: {self._parts}")

    def __str__(self) -> str:
        return ",".join(str(part) for part in self._parts)

    @property
    def frequencies(self) -> Dict[int, int]:
        """
        Map of part size to multiplicity, in increasing part size.
        """
        frequencies: Dict[int, int] = {}
        for part in reversed(self._parts):
            frequencies[part] = frequencies.get(part, 0) + 1
        return frequencies

    def frequency_notation(self) -> str:
        """
        Frequency notation, e.g. `1^2 2^1 4^3`.
        """
        return " ".join(f"{part}^{count}" for part, count in self.frequencies.items())

    @property
    def arcs(self) -> int:
        """
        Number of arcs the parts contribute to one side of a meander.
        """
        return sum(part // 2 for part in self._parts)

    @property
    def odd_parts(self) -> int:
        return sum(part & 1 for part in self._parts)

    @property
    def is_self_conjugate(self) -> bool:
        return conjugate(self) == self


class Composition(_Parts):
    """
    A composition: an ordered sequence of positive integers.
    """

    __slots__ = ()

    def __str__(self) -> str:
        return "|".join(str(part) for part in self._parts)


class Color(Enum):
    BLUE = "blue"
    RED = "red"


# Blue sorts before red at equal value
_COLOR_RANK = {Color.BLUE: 0, Color.RED: 1}
_COLOR_CODE = {Color.BLUE: "b", Color.RED: "r"}


def _colored_key(part: Tuple[int, Color]) -> Tuple[int, int]:
    return (-part[0], _COLOR_RANK[part[1]])


class ColoredPartition:
    """
    A partition into parts of two kinds. Parts are kept in canonical order: value descending, blue before red.
    """

    __slots__ = ("_parts", "_weight")

    def __init__(self, parts: Iterable[Tuple[int, Color]] = ()):
        parts = tuple((value, Color(color)) for value, color in parts)
        _check_parts(tuple(value for value, _ in parts))
        self._parts = tuple(sorted(parts, key=_colored_key))
        self._weight = sum(value for value, _ in self._parts)

    @property
    def parts(self) -> Tuple[Tuple[int, Color], ...]:
        return self._parts

    @property
    def weight(self) -> int:
        return self._weight

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[Tuple[int, Color]]:
        return iter(self._parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, ColoredPartition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(("ColoredPartition", self._parts))

    def __str__(self) -> str:
        return ",".join(f"{value}{_COLOR_CODE[color]}" for value, color in self._parts)

    def __repr__(self) -> str:
        return f"ColoredPartition({str(self)!r})"


# Enumeration


def _fill_descending(parts: List[int], remaining: int, bound: int):
    while remaining:
        part = min(bound, remaining)
        parts.append(part)
        remaining -= part


def partition_tuples(n: int, max_part: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """
    Yield the partitions of n as tuples, in reverse lexicographic order.

    Args:
        n: The weight.
        max_part: Optional bound on the largest part.
    """
    if n < 0:
        raise ValueError(f"Cannot partition a negative integer: {n}")
    if max_part is not None and max_part < 1:
        raise ValueError(f"max_part must be positive, got {max_part}")
    if n == 0:
        yield ()
        return

    bound = n if max_part is None else min(max_part, n)
    parts: List[int] = []
    _fill_descending(parts, n, bound)

    while True:
        yield tuple(parts)

        # Strip the trailing ones, decrement the last part above one, refill greedily
        remaining = 0
        while parts and parts[-1] == 1:
            parts.pop()
            remaining += 1
        if not parts:
            return
        part = parts.pop() - 1
        parts.append(part)
        _fill_descending(parts, remaining + 1, part)


def enumerate_partitions(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """
    Enumerate the partitions of n in reverse lexicographic order.

    Args:
        n: The weight. n = 0 yields exactly the empty partition.
        max_part: Optional bound on the largest part.

    Returns:
        An iterator over every partition of n exactly once.
    """
    return (Partition(parts) for parts in partition_tuples(n, max_part))


def bounded_partition_tuples(
    n: int, max_part: int, max_odd_parts: Optional[int] = None
) -> Iterator[Tuple[int, ...]]:
    """
    Yield the partitions of n with parts at most `max_part` and at most `max_odd_parts` odd parts, as tuples in
    reverse lexicographic order. Recursion runs over part sizes, so depth is bounded by `max_part`.
    """
    if n < 0:
        raise ValueError(f"Cannot partition a negative integer: {n}")
    if max_part < 1:
        raise ValueError(f"max_part must be positive, got {max_part}")
    if max_odd_parts is not None and max_odd_parts < 0:
        raise ValueError(f"max_odd_parts must be non-negative, got {max_odd_parts}")

    budget = n if max_odd_parts is None else max_odd_parts

    def descend(part: int, remaining: int, odd_budget: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        if part == 1:
            if remaining <= odd_budget:
                yield prefix + (1,) * remaining
            return

        odd = part & 1
        top = remaining // part
        if odd:
            top = min(top, odd_budget)
        for count in range(top, -1, -1):
            yield from descend(
                part - 1,
                remaining - count * part,
                odd_budget - odd * count,
                prefix + (part,) * count,
            )

    yield from descend(min(max_part, max(n, 1)), n, budget, ())


def odd_partition_tuples(n: int) -> Iterator[Tuple[int, ...]]:
    """
    Yield the partitions of n into odd parts, as tuples in reverse lexicographic order. Only odd sizes are visited.
    """
    if n < 0:
        raise ValueError(f"Cannot partition a negative integer: {n}")

    def descend(part: int, remaining: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        if part == 1:
            yield prefix + (1,) * remaining
            return
        for count in range(remaining // part, -1, -1):
            yield from descend(part - 2, remaining - count * part, prefix + (part,) * count)

    largest = n if n & 1 else n - 1
    yield from descend(max(largest, 1), n, ())


def enumerate_bounded_partitions(
    n: int, max_part: int, max_odd_parts: Optional[int] = None
) -> Iterator[Partition]:
    """
    Enumerate partitions of n with bounded part size and, optionally, a bounded number of odd parts.
    """
    return (Partition(parts) for parts in bounded_partition_tuples(n, max_part, max_odd_parts))


def enumerate_colored_partitions(i: int) -> Iterator[ColoredPartition]:
    """
    Enumerate the two-colored partitions of i.

    Underlying partitions come in reverse lexicographic order; within one, colorings go from most blue to most red.
    """
    for parts in partition_tuples(i):
        multiplicities: Dict[int, int] = {}
        for part in parts:
            multiplicities[part] = multiplicities.get(part, 0) + 1

        choices = [
            [(value, blue, count - blue) for blue in range(count, -1, -1)]
            for value, count in multiplicities.items()
        ]
        for coloring in itertools.product(*choices):
            colored: List[Tuple[int, Color]] = []
            for value, blue, red in coloring:
                colored.extend([(value, Color.BLUE)] * blue)
                colored.extend([(value, Color.RED)] * red)
            yield ColoredPartition(colored)


# Structural maps


def conjugate(partition: Partition) -> Partition:
    """
    Conjugate a partition by exchanging the rows and columns of its Ferrers diagram.
    """
    parts = partition.parts
    if not parts:
        return Partition()
    return Partition(sum(1 for part in parts if part >= column) for column in range(1, parts[0] + 1))


def reverse(partition: Partition) -> Composition:
    """
    Reverse a partition into a composition with non-decreasing parts.
    """
    return Composition(reversed(partition.parts))


def phi(colored: ColoredPartition) -> Partition:
    """
    Send each blue part v to 2v + 1 and each red part v to 2v.
    """
    # Canonical order already gives a non-increasing image
    return Partition(2 * value + (color is Color.BLUE) for value, color in colored)


def phi_inverse(partition: Partition) -> ColoredPartition:
    """
    Invert `phi` on a partition whose parts all exceed 1.
    """
    if any(part < 2 for part in partition):
        raise ValueError(f"phi is only invertible on partitions with every part above 1: {partition.parts}")
    return ColoredPartition((part // 2, Color.BLUE if part & 1 else Color.RED) for part in partition)


def psi(partition: Partition) -> Partition:
    """
    Remove every part equal to 1.
    """
    return Partition(part for part in partition if part != 1)


def pad_ones(partition: Partition, n: int) -> Partition:
    """
    Add parts equal to 1 until the weight is n.
    """
    if n < partition.weight:
        raise ValueError(f"Cannot pad weight {partition.weight} down to {n}")
    return Partition(partition.parts + (1,) * (n - partition.weight))


# Text forms


def _parse_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"Invalid {what} {token.strip()!r}: not an integer") from None


def parse_partition(text: str) -> Partition:
    """
    Parse a partition from `4,2,1` or from frequency notation `1^2 2^1 4^3`.
    """
    text = text.strip()
    if not text:
        return Partition()

    if "^" in text:
        parts: List[int] = []
        for token in text.split():
            value_text, sep, count_text = token.partition("^")
            if not sep:
                raise ParseError(f"Invalid frequency term {token!r}: expected part^count")
            value = _parse_int(value_text, "part")
            count = _parse_int(count_text, "exponent")
            if value < 1:
                raise ParseError(f"Invalid part {value}: parts must be positive")
            if count < 1:
                raise ParseError(f"Invalid exponent {count} for part {value}: exponents must be positive")
            parts.extend([value] * count)
        return Partition(sorted(parts, reverse=True))

    parts = [_parse_int(token, "part") for token in text.split(",")]
    for part in parts:
        if part < 1:
            raise ParseError(f"Invalid part {part}: parts must be positive")
    for left, right in zip(parts, parts[1:]):
        if left < right:
            raise ParseError(f"Partition parts must be non-increasing: {left} is followed by {right}")
    return Partition(parts)


def parse_composition(text: str) -> Composition:
    """
    Parse a composition from `1|2|3`.
    """
    text = text.strip()
    if not text:
        raise ParseError("Empty composition")

    parts = [_parse_int(token, "part") for token in text.split("|")]
    for part in parts:
        if part < 1:
            raise ParseError(f"Invalid part {part}: parts must be positive")
    return Composition(parts)


def parse_colored_partition(text: str) -> ColoredPartition:
    """
    Parse a colored partition from `2b,1r` (b for blue, r for red).
    """
    text = text.strip()
    if not text:
        return ColoredPartition()

    codes = {code: color for color, code in _COLOR_CODE.items()}
    parts = []
    for token in text.split(","):
        token = token.strip()
        color = codes.get(token[-1:])
        if color is None:
            raise ParseError(f"Invalid colored part {token!r}: expected a trailing b or r")
        value = _parse_int(token[:-1], "part")
        if value < 1:
            raise ParseError(f"Invalid part {value}: parts must be positive")
        parts.append((value, color))
    return ColoredPartition(parts)
