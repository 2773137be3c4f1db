"""
Winding a meander down to the empty meander.

Each step applies exactly one of five moves, chosen by the first top block a_1 and first bottom block b_1:

    a_1 < b_1            F_v   vertical flip
    a_1 = b_1 = c        C(c)  component elimination
    b_1 < a_1 < 2 b_1    R     rotation contraction
    a_1 = 2 b_1          B     block elimination
    a_1 > 2 b_1          P     pure contraction

Only C(c) changes the index. The eliminated block is a standalone c/c meander with floor(c/2) cycles and c mod 2
paths, so the index is the sum of 2 floor(c/2) + (c mod 2) over all eliminations, minus one.
"""

import re
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from pydantic.dataclasses import dataclass

from seaweed_index.lib.constants import WINDING_STEP_CAP_FACTOR
from seaweed_index.lib.log import LOGGER
from seaweed_index.lib.meander import EmptyMeanderError, SeaweedType, WeightMismatchError


class WindingError(RuntimeError):
    """
    Raised when winding breaks an invariant: the step cap is exceeded, or a requested move does not apply.
    """

    pass


class MoveKind(str, Enum):
    VERTICAL_FLIP = "F_v"
    COMPONENT_ELIMINATION = "C"
    ROTATION_CONTRACTION = "R"
    BLOCK_ELIMINATION = "B"
    PURE_CONTRACTION = "P"
    HORIZONTAL_FLIP = "F_h"


_MOVE_PATTERN = re.compile(r"^(F_v|F_h|R|B|P|C)(?:\((\d+)\))?$")


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    size: Optional[int] = None

    def __post_init__(self):
        if self.kind is MoveKind.COMPONENT_ELIMINATION:
            if self.size is None or self.size < 1:
                raise ValueError("Component elimination must carry a positive block size")
        elif self.size is not None:
            raise ValueError(f"Move {self.kind.value} does not carry a block size")

    @classmethod
    def parse(cls, text: str) -> "Move":
        """
        Parse a move name such as `R`, `F_v` or `C(4)`.
        """
        match = _MOVE_PATTERN.match(text.strip())
        if match is None:
            raise ValueError(f"Unknown move {text!r}")
        kind = MoveKind(match.group(1))
        size = match.group(2)
        return cls(kind=kind, size=int(size) if size is not None else None)

    def __str__(self) -> str:
        if self.kind is MoveKind.COMPONENT_ELIMINATION:
            return f"C({self.size})"
        return self.kind.value


Step = Tuple[Move, SeaweedType]


def contribution(size: int) -> int:
    """
    Index contribution of eliminating a c/c block: two per cycle, one per path.
    """
    return 2 * (size // 2) + (size % 2)


class WindingTrace:
    """
    The full sequence of moves winding a seaweed type down to the empty type.
    """

    def __init__(self, start: SeaweedType, steps: Sequence[Step]):
        self._start = start
        self._steps: Tuple[Step, ...] = tuple(steps)

    @property
    def start(self) -> SeaweedType:
        return self._start

    @property
    def steps(self) -> Tuple[Step, ...]:
        return self._steps

    @property
    def moves(self) -> List[Move]:
        return [move for move, _ in self._steps]

    @property
    def index(self) -> int:
        """
        Index reconstructed from the component eliminations.
        """
        return (
            sum(
                contribution(move.size)
                for move in self.moves
                if move.kind is MoveKind.COMPONENT_ELIMINATION
            )
            - 1
        )

    def __len__(self) -> int:
        return len(self._steps)

    def to_lines(self) -> List[str]:
        return [f"MOVE kind={move} result={result}" for move, result in self._steps]

    def to_records(self) -> List[dict]:
        return [{"kind": str(move), "result": str(result)} for move, result in self._steps]


def _step_cap(seaweed: SeaweedType) -> int:
    return WINDING_STEP_CAP_FACTOR * seaweed.n


def wind_step(seaweed: SeaweedType) -> Step:
    """
    Apply the unique winding-down move that fits the type.

    Raises:
        EmptyMeanderError: If the type is empty.
    """
    if seaweed.is_empty:
        raise EmptyMeanderError("Cannot wind down the empty meander")

    top, bottom = seaweed.top.parts, seaweed.bottom.parts
    a1, b1 = top[0], bottom[0]

    if a1 < b1:
        return Move(kind=MoveKind.VERTICAL_FLIP), SeaweedType(bottom, top)
    if a1 == b1:
        return Move(kind=MoveKind.COMPONENT_ELIMINATION, size=a1), SeaweedType(top[1:], bottom[1:])
    if a1 < 2 * b1:
        return Move(kind=MoveKind.ROTATION_CONTRACTION), SeaweedType((b1,) + top[1:], (2 * b1 - a1,) + bottom[1:])
    if a1 == 2 * b1:
        return Move(kind=MoveKind.BLOCK_ELIMINATION), SeaweedType((b1,) + top[1:], bottom[1:])
    return Move(kind=MoveKind.PURE_CONTRACTION), SeaweedType((a1 - 2 * b1, b1) + top[1:], bottom[1:])


def wind_down(seaweed: SeaweedType) -> WindingTrace:
    """
    Wind a seaweed type down to the empty type.

    Raises:
        EmptyMeanderError: If the type is empty.
        WindingError: If the step cap of 10 n moves is exceeded.
    """
    if seaweed.is_empty:
        raise EmptyMeanderError("Cannot wind down the empty meander")

    cap = _step_cap(seaweed)
    steps: List[Step] = []
    current = seaweed
    while not current.is_empty:
        if len(steps) >= cap:
            raise WindingError(f"Winding {seaweed} exceeded {cap} steps")
        move, current = wind_step(current)
        steps.append((move, current))

    LOGGER.debug(f"Wound {seaweed} down in {len(steps)} steps")
    return WindingTrace(seaweed, steps)


def winding_index(top: Sequence[int], bottom: Sequence[int]) -> int:
    """
    Index of top / bottom by winding down on plain integer stacks, without recording a trace.

    Raises:
        EmptyMeanderError: If n = 0.
        WindingError: If the step cap is exceeded.
    """
    n = sum(top)
    if n == 0:
        raise EmptyMeanderError("The index of the empty meander is undefined")
    if sum(bottom) != n:
        raise WeightMismatchError(f"Weight mismatch: top has weight {n}, bottom has weight {sum(bottom)}")

    # Stacks hold blocks right to left so the first block is at the end
    a = list(reversed(top))
    b = list(reversed(bottom))
    cap = WINDING_STEP_CAP_FACTOR * n
    total = 0
    steps = 0
    while a:
        steps += 1
        if steps > cap:
            raise WindingError(f"Winding {'|'.join(map(str, top))}/{'|'.join(map(str, bottom))} exceeded {cap} steps")

        a1, b1 = a[-1], b[-1]
        if a1 < b1:
            a, b = b, a
        elif a1 == b1:
            a.pop()
            b.pop()
            total += contribution(a1)
        elif a1 < 2 * b1:
            a[-1] = b1
            b[-1] = 2 * b1 - a1
        elif a1 == 2 * b1:
            a[-1] = b1
            b.pop()
        else:
            a[-1] = b1
            a.append(a1 - 2 * b1)
            b.pop()

    return total - 1


def index_via_winding(seaweed: SeaweedType) -> int:
    """
    Index of a seaweed from its winding-down: the sum of component elimination contributions, minus one.
    """
    return winding_index(seaweed.top.parts, seaweed.bottom.parts)


def horizontal_flip(seaweed: SeaweedType) -> SeaweedType:
    """
    Reverse both compositions. Preserves the index.
    """
    return SeaweedType(tuple(reversed(seaweed.top.parts)), tuple(reversed(seaweed.bottom.parts)))


def apply_move(seaweed: SeaweedType, move: Union[Move, MoveKind, str]) -> Step:
    """
    Apply a named move, checking its precondition.

    Raises:
        WindingError: If the move does not apply to the type.
    """
    size = None
    if isinstance(move, Move):
        kind, size = move.kind, move.size
    elif isinstance(move, MoveKind):
        kind = move
    else:
        match = _MOVE_PATTERN.match(move.strip())
        if match is None:
            raise ValueError(f"Unknown move {move!r}")
        kind = MoveKind(match.group(1))
        size = int(match.group(2)) if match.group(2) is not None else None

    if kind is MoveKind.HORIZONTAL_FLIP:
        return Move(kind=kind), horizontal_flip(seaweed)

    if seaweed.is_empty:
        raise WindingError(f"Move {kind.value} does not apply to the empty type")

    applied, result = wind_step(seaweed)
    if applied.kind is not kind or (size is not None and applied.size != size):
        raise WindingError(f"Move {kind.value} does not apply to {seaweed}; the applicable move is {applied}")
    return applied, result


def apply_moves(seaweed: SeaweedType, moves: Iterable[Union[Move, MoveKind, str]]) -> List[Step]:
    """
    Apply a sequence of named moves, checking each precondition.
    """
    steps: List[Step] = []
    current = seaweed
    for move in moves:
        step = apply_move(current, move)
        steps.append(step)
        current = step[1]
    return steps
