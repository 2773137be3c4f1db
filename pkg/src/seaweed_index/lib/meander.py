"""
Seaweed types, their meanders, and the index of a seaweed.

Vertices are 1-indexed. Within a block of size a starting after `offset` vertices, vertices j and k are joined iff
j + k = 2 * offset + a + 1. Every meander is a disjoint union of cycles and paths (isolated vertices are paths), and
the index is 2C + P - 1.
"""

from enum import Enum
from math import gcd
from typing import FrozenSet, Iterable, List, Tuple, Union

from pydantic.dataclasses import dataclass

from seaweed_index.lib.partition import Composition, ParseError, Partition, parse_composition

Arc = Tuple[int, int]


class WeightMismatchError(ParseError):
    """
    Raised when the top and bottom compositions of a seaweed type have different weights.
    """

    pass


class EmptyMeanderError(ValueError):
    """
    Raised when an index is requested for the empty meander.
    """

    pass


class SeaweedType:
    """
    The type a_1|...|a_m / b_1|...|b_t of a seaweed: two compositions of the same n.
    """

    __slots__ = ("_top", "_bottom")

    def __init__(
        self,
        top: Union[Composition, Iterable[int]],
        bottom: Union[Composition, Iterable[int]],
    ):
        top = top if isinstance(top, Composition) else Composition(top)
        bottom = bottom if isinstance(bottom, Composition) else Composition(bottom)
        if top.weight != bottom.weight:
            raise WeightMismatchError(
                f"Weight mismatch: top {top} has weight {top.weight}, bottom {bottom} has weight {bottom.weight}"
            )
        self._top = top
        self._bottom = bottom

    @classmethod
    def empty(cls) -> "SeaweedType":
        return cls((), ())

    @classmethod
    def maximal_parabolic(cls, top: Union[Partition, Composition, Iterable[int]]) -> "SeaweedType":
        """
        The type top / n, where n is the weight of the top.
        """
        parts = tuple(top)
        return cls(parts, (sum(parts),) if parts else ())

    @property
    def top(self) -> Composition:
        return self._top

    @property
    def bottom(self) -> Composition:
        return self._bottom

    @property
    def n(self) -> int:
        return self._top.weight

    @property
    def is_empty(self) -> bool:
        return self.n == 0

    def flipped(self) -> "SeaweedType":
        """
        Exchange top and bottom.
        """
        return SeaweedType(self._bottom, self._top)

    def __eq__(self, other) -> bool:
        return isinstance(other, SeaweedType) and self._top == other._top and self._bottom == other._bottom

    def __hash__(self) -> int:
        return hash((self._top.parts, self._bottom.parts))

    def __str__(self) -> str:
        return f"{self._top}/{self._bottom}"

    def __repr__(self) -> str:
        return f"SeaweedType({str(self)!r})"


def parse_seaweed_type(text: str) -> SeaweedType:
    """
    Parse a seaweed type from `top/bottom`, parts separated by `|`, e.g. `17|3/10|4|6`.

    Raises:
        ParseError: If either side is malformed. The message names the side.
        WeightMismatchError: If the two sides have different weights.
    """
    sides = text.strip().split("/")
    if len(sides) != 2:
        raise ParseError(f"Invalid seaweed type {text.strip()!r}: expected exactly one '/'")

    compositions = []
    for name, side in zip(("top", "bottom"), sides):
        try:
            compositions.append(parse_composition(side))
        except ParseError as e:
            raise ParseError(f"Invalid {name} composition {side.strip()!r}: {e}") from None

    return SeaweedType(*compositions)


class Meander:
    """
    The meander of a seaweed type: n vertices with top and bottom arc sets.
    """

    __slots__ = ("_n", "_top_arcs", "_bottom_arcs")

    def __init__(self, n: int, top_arcs: Iterable[Arc], bottom_arcs: Iterable[Arc]):
        self._n = n
        self._top_arcs: FrozenSet[Arc] = frozenset(_normalize(arc) for arc in top_arcs)
        self._bottom_arcs: FrozenSet[Arc] = frozenset(_normalize(arc) for arc in bottom_arcs)

    @property
    def n(self) -> int:
        return self._n

    @property
    def top_arcs(self) -> FrozenSet[Arc]:
        return self._top_arcs

    @property
    def bottom_arcs(self) -> FrozenSet[Arc]:
        return self._bottom_arcs

    def degree(self, vertex: int) -> int:
        return sum(vertex in arc for arc in self._top_arcs) + sum(vertex in arc for arc in self._bottom_arcs)

    def degrees(self) -> List[int]:
        """
        Degrees of vertices 1..n, as a list indexed from 0.
        """
        degrees = [0] * self._n
        for arcs in (self._top_arcs, self._bottom_arcs):
            for j, k in arcs:
                degrees[j - 1] += 1
                degrees[k - 1] += 1
        return degrees

    def __repr__(self) -> str:
        return f"Meander(n={self._n}, top={sorted(self._top_arcs)}, bottom={sorted(self._bottom_arcs)})"


def _normalize(arc: Arc) -> Arc:
    j, k = arc
    return (j, k) if j < k else (k, j)


@dataclass(frozen=True)
class ComponentSummary:
    cycles: int
    paths: int

    def to_dict(self) -> dict:
        return {"cycles": self.cycles, "paths": self.paths}


def block_arcs(parts: Iterable[int]) -> List[Arc]:
    """
    Arcs drawn by consecutive blocks of the given sizes. Odd blocks leave their middle vertex unmatched.
    """
    arcs = []
    offset = 0
    for size in parts:
        total = 2 * offset + size + 1
        for j in range(offset + 1, offset + size // 2 + 1):
            arcs.append((j, total - j))
        offset += size
    return arcs


def build_meander(seaweed: SeaweedType) -> Meander:
    """
    Build the meander of a seaweed type.
    """
    return Meander(seaweed.n, block_arcs(seaweed.top), block_arcs(seaweed.bottom))


def _count_components(n: int, arcs: Iterable[Arc]) -> Tuple[int, int]:
    """
    Count (cycles, paths) of the graph on vertices 1..n. A component is a cycle iff all its vertices have degree 2.
    """
    parent = list(range(n + 1))
    degree = [0] * (n + 1)

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for j, k in arcs:
        degree[j] += 1
        degree[k] += 1
        root_j, root_k = find(j), find(k)
        if root_j != root_k:
            parent[root_j] = root_k

    closed = {}
    for v in range(1, n + 1):
        root = find(v)
        closed[root] = closed.get(root, True) and degree[v] == 2

    cycles = sum(closed.values())
    return cycles, len(closed) - cycles


def components(meander: Meander) -> ComponentSummary:
    """
    Count the cycles and paths of a meander. Isolated vertices count as paths.
    """
    cycles, paths = _count_components(meander.n, list(meander.top_arcs) + list(meander.bottom_arcs))
    return ComponentSummary(cycles=cycles, paths=paths)


def _check_nonempty(seaweed: SeaweedType):
    if seaweed.is_empty:
        raise EmptyMeanderError("The index of the empty meander is undefined")


def index_dk(seaweed: SeaweedType) -> int:
    """
    Index of a seaweed from its meander's components: 2C + P - 1.

    Raises:
        EmptyMeanderError: If n = 0.
    """
    _check_nonempty(seaweed)
    arcs = block_arcs(seaweed.top) + block_arcs(seaweed.bottom)
    cycles, paths = _count_components(seaweed.n, arcs)
    return 2 * cycles + paths - 1


def is_frobenius(seaweed: SeaweedType) -> bool:
    """
    Whether a seaweed has index zero.
    """
    return index_dk(seaweed) == 0


def index_pair(top: Iterable[int], bottom: Iterable[int]) -> int:
    """
    Index of the partition (or composition) pair top / bottom.
    """
    return index_dk(SeaweedType(tuple(top), tuple(bottom)))


def _check_positive(**values: int):
    for name, value in values.items():
        if value < 1:
            raise ValueError(f"{name} must be positive, got {value}")


def index_formula_2parts(a: int, b: int) -> int:
    """
    Closed-form index of a|b / a+b.
    """
    _check_positive(a=a, b=b)
    return gcd(a, b) - 1


class ThreePartShape(Enum):
    OVER_N = "a|b|c/n"
    SPLIT = "a|b/c|n-c"


def three_part_type(a: int, b: int, c: int, shape: ThreePartShape) -> SeaweedType:
    """
    The seaweed type a|b|c / a+b+c, or a|b / c|a+b-c.
    """
    _check_positive(a=a, b=b, c=c)
    if shape is ThreePartShape.OVER_N:
        return SeaweedType((a, b, c), (a + b + c,))
    if c >= a + b:
        raise ValueError(f"Shape {shape.value} needs c < a + b, got a={a}, b={b}, c={c}")
    return SeaweedType((a, b), (c, a + b - c))


def index_formula_3parts(a: int, b: int, c: int, shape: ThreePartShape = ThreePartShape.OVER_N) -> int:
    """
    Closed-form index gcd(a + b, b + c) - 1, shared by a|b|c / n and a|b / c|n-c.
    """
    _check_positive(a=a, b=b, c=c)
    if shape is ThreePartShape.SPLIT and c >= a + b:
        raise ValueError(f"Shape {shape.value} needs c < a + b, got a={a}, b={b}, c={c}")
    return gcd(a + b, b + c) - 1
