import random

import pytest

from seaweed_index.lib.meander import (
    EmptyMeanderError,
    SeaweedType,
    WeightMismatchError,
    build_meander,
    components,
    index_dk,
    parse_seaweed_type,
)
from seaweed_index.lib.winding import (
    Move,
    MoveKind,
    WindingError,
    apply_move,
    apply_moves,
    contribution,
    horizontal_flip,
    index_via_winding,
    wind_down,
    wind_step,
    winding_index,
)

from test_meander import compositions


def random_composition(rng: random.Random, n: int):
    cuts = sorted(rng.sample(range(1, n), rng.randint(0, n - 1)))
    bounds = [0] + cuts + [n]
    return tuple(right - left for left, right in zip(bounds, bounds[1:]))


def test_worked_trace_moves():
    trace = wind_down(parse_seaweed_type("17|3/10|4|6"))
    assert [str(move) for move in trace.moves] == ["R", "P", "C(4)", "F_v", "B", "C(3)"]


def test_worked_trace_intermediate_types():
    trace = wind_down(parse_seaweed_type("17|3/10|4|6"))
    assert [str(result) for _, result in trace.steps] == [
        "10|3/3|4|6",
        "4|3|3/4|6",
        "3|3/6",
        "6/3|3",
        "3/3",
        "/",
    ]
    assert trace.index == 6
    assert index_dk(parse_seaweed_type("17|3/10|4|6")) == 6


def test_trace_lines():
    trace = wind_down(parse_seaweed_type("3/3"))
    assert trace.to_lines() == ["MOVE kind=C(3) result=/"]
    assert trace.index == 2
    assert len(trace) == 1


def test_single_vertex():
    trace = wind_down(parse_seaweed_type("1/1"))
    assert [str(move) for move in trace.moves] == ["C(1)"]
    assert trace.index == 0


def test_wind_step_cases():
    assert str(wind_step(SeaweedType((2, 3), (5,)))[0]) == "F_v"
    assert str(wind_step(SeaweedType((5,), (2, 3)))[1]) == "1|2/3"
    assert str(wind_step(SeaweedType((3, 2), (2, 3)))[1]) == "2|2/1|3"
    assert str(wind_step(SeaweedType((4, 1), (2, 3)))[1]) == "2|1/3"


def test_empty_type_rejected():
    with pytest.raises(EmptyMeanderError):
        wind_down(SeaweedType.empty())
    with pytest.raises(EmptyMeanderError):
        wind_step(SeaweedType.empty())
    with pytest.raises(EmptyMeanderError):
        winding_index((), ())


def test_winding_index_weight_mismatch():
    with pytest.raises(WeightMismatchError):
        winding_index((3, 2), (4,))


def test_contribution_counts_component_weight():
    for size in range(1, 30):
        assert contribution(size) == size


def test_winding_matches_components_exhaustively():
    for n in range(1, 9):
        for top in compositions(n):
            for bottom in compositions(n):
                seaweed = SeaweedType(top, bottom)
                expected = index_dk(seaweed)
                assert index_via_winding(seaweed) == expected
                assert wind_down(seaweed).index == expected


@pytest.mark.slow
def test_winding_matches_components_to_twelve():
    for n in range(9, 13):
        for top in compositions(n):
            for bottom in compositions(n):
                seaweed = SeaweedType(top, bottom)
                assert index_via_winding(seaweed) == index_dk(seaweed)


def test_winding_matches_components_on_random_pairs():
    rng = random.Random(20)
    for _ in range(1000):
        n = rng.randint(1, 60)
        seaweed = SeaweedType(random_composition(rng, n), random_composition(rng, n))
        assert index_via_winding(seaweed) == index_dk(seaweed)


@pytest.mark.slow
def test_winding_matches_components_on_many_random_pairs():
    rng = random.Random(60)
    for _ in range(10_000):
        n = rng.randint(1, 60)
        seaweed = SeaweedType(random_composition(rng, n), random_composition(rng, n))
        assert index_via_winding(seaweed) == index_dk(seaweed)


def test_winding_terminates_within_cap():
    for n in range(1, 41):
        for top in ((n,), (1,) * n, (n - 1, 1) if n > 1 else (1,)):
            seaweed = SeaweedType(top, (n,))
            assert len(wind_down(seaweed)) <= 10 * n


def test_horizontal_flip_preserves_index():
    for n in range(1, 8):
        for top in compositions(n):
            for bottom in compositions(n):
                seaweed = SeaweedType(top, bottom)
                assert index_dk(horizontal_flip(seaweed)) == index_dk(seaweed)


def test_move_parse_and_print():
    assert Move.parse("C(4)") == Move(kind=MoveKind.COMPONENT_ELIMINATION, size=4)
    assert str(Move.parse("F_h")) == "F_h"
    with pytest.raises(ValueError):
        Move.parse("Q")
    with pytest.raises(ValueError):
        Move(kind=MoveKind.COMPONENT_ELIMINATION)
    with pytest.raises(ValueError):
        Move(kind=MoveKind.PURE_CONTRACTION, size=2)


def test_apply_moves_replays_a_family_analysis():
    steps = apply_moves(parse_seaweed_type("4|4|2|1/11"), ["F_v", "P", "F_h", "P"])
    assert [str(move) for move, _ in steps] == ["F_v", "P", "F_h", "P"]
    assert str(steps[-1][1]) == "2|1|3/2|4"


def test_apply_move_checks_precondition():
    with pytest.raises(WindingError):
        apply_move(parse_seaweed_type("4|4|2|1/11"), "P")
    with pytest.raises(WindingError):
        apply_move(parse_seaweed_type("3/3"), "C(2)")
    move, result = apply_move(parse_seaweed_type("3/3"), "C")
    assert str(move) == "C(3)"
    assert result.is_empty


def test_apply_move_on_empty_type():
    assert apply_move(SeaweedType.empty(), MoveKind.HORIZONTAL_FLIP)[1].is_empty
    with pytest.raises(WindingError):
        apply_move(SeaweedType.empty(), MoveKind.ROTATION_CONTRACTION)


def component_counts(seaweed: SeaweedType):
    if seaweed.is_empty:
        return 0, 0
    summary = components(build_meander(seaweed))
    return summary.cycles, summary.paths


def check_step_invariants(seaweed: SeaweedType):
    move, result = wind_step(seaweed)
    if move.kind is MoveKind.COMPONENT_ELIMINATION:
        # A c/c block splits off c // 2 two-cycles and, for odd c, one isolated vertex
        cycles, paths = component_counts(seaweed)
        rest_cycles, rest_paths = component_counts(result)
        assert (cycles - rest_cycles, paths - rest_paths) == (move.size // 2, move.size % 2)
    else:
        assert index_dk(result) == index_dk(seaweed)


def test_moves_keep_the_index_or_shed_one_block():
    for n in range(1, 9):
        for top in compositions(n):
            for bottom in compositions(n):
                check_step_invariants(SeaweedType(top, bottom))


@pytest.mark.slow
def test_moves_keep_the_index_or_shed_one_block_to_twelve():
    for n in range(9, 13):
        for top in compositions(n):
            for bottom in compositions(n):
                check_step_invariants(SeaweedType(top, bottom))


def test_winding_terminates_within_cap_exhaustively():
    for n in range(1, 9):
        for top in compositions(n):
            for bottom in compositions(n):
                assert len(wind_down(SeaweedType(top, bottom))) <= 10 * n


@pytest.mark.slow
def test_winding_terminates_within_cap_to_fourteen():
    for n in range(9, 15):
        bottoms = list(compositions(n)) if n <= 11 else [(n,), (1,) * n, (n - 1, 1), (1, n - 1)]
        for top in compositions(n):
            for bottom in bottoms:
                assert len(wind_down(SeaweedType(top, bottom))) <= 10 * n
