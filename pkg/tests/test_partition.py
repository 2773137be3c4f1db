import pytest

from seaweed_index.lib.partition import (
    Color,
    ColoredPartition,
    Composition,
    ParseError,
    Partition,
    bounded_partition_tuples,
    conjugate,
    enumerate_bounded_partitions,
    enumerate_colored_partitions,
    enumerate_partitions,
    odd_partition_tuples,
    pad_ones,
    parse_colored_partition,
    parse_composition,
    parse_partition,
    partition_tuples,
    phi,
    phi_inverse,
    psi,
    reverse,
)


def test_enumerate_partitions_of_four_in_reverse_lex_order():
    assert [p.parts for p in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumerate_zero_gives_empty_partition():
    assert list(enumerate_partitions(0)) == [Partition()]


def test_enumerate_negative_rejected():
    with pytest.raises(ValueError):
        list(enumerate_partitions(-1))


def test_partition_counts(partition_counts):
    for n, expected in enumerate(partition_counts):
        partitions = list(partition_tuples(n))
        assert len(partitions) == expected
        assert len(set(partitions)) == expected
        assert all(sum(parts) == n for parts in partitions)


def test_enumeration_is_strictly_decreasing():
    partitions = list(partition_tuples(12))
    assert all(left > right for left, right in zip(partitions, partitions[1:]))


def test_max_part_bound():
    assert [p.parts for p in enumerate_partitions(5, max_part=2)] == [(2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]


def test_bounded_partitions_match_filtered_enumeration():
    for n in range(0, 19):
        for d in range(1, 9):
            for odd in (None, 0, 1, 2):
                expected = [
                    parts
                    for parts in partition_tuples(n, d)
                    if odd is None or sum(part & 1 for part in parts) <= odd
                ]
                assert list(bounded_partition_tuples(n, d, odd)) == expected


def test_odd_partitions_match_filtered_enumeration():
    for n in range(0, 21):
        expected = [parts for parts in partition_tuples(n) if all(part & 1 for part in parts)]
        assert list(odd_partition_tuples(n)) == expected


def test_odd_partition_counts():
    # Equinumerous with partitions into distinct parts
    for n, expected in [(30, 296), (40, 1113), (50, 3658), (60, 10880)]:
        assert sum(1 for _ in odd_partition_tuples(n)) == expected


def test_odd_partitions_negative_rejected():
    with pytest.raises(ValueError):
        list(odd_partition_tuples(-2))


def test_enumerate_bounded_partitions_yields_partitions():
    assert list(enumerate_bounded_partitions(6, 3, 0)) == [Partition((2, 2, 2))]


def test_partition_rejects_increasing_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_partition_rejects_non_positive_parts():
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_partition_views():
    partition = Partition((4, 2, 2, 2, 1))
    assert partition.weight == 11
    assert partition.frequencies == {1: 1, 2: 3, 4: 1}
    assert partition.frequency_notation() == "1^1 2^3 4^1"
    assert partition.arcs == 5
    assert partition.odd_parts == 1
    assert str(partition) == "4,2,2,2,1"


def test_conjugate_examples():
    assert conjugate(Partition((3, 1))) == Partition((2, 1, 1))
    assert conjugate(Partition((2, 1))) == Partition((2, 1))
    assert conjugate(Partition()) == Partition()


def test_conjugation_is_an_involution():
    for n in range(0, 31):
        for partition in enumerate_partitions(n):
            assert conjugate(conjugate(partition)) == partition


def test_self_conjugate_view():
    assert Partition((3, 1, 1)).is_self_conjugate
    assert not Partition((3, 1)).is_self_conjugate


def test_reverse():
    assert reverse(Partition((3, 2, 1))) == Composition((1, 2, 3))
    assert str(reverse(Partition((3, 2, 1)))) == "1|2|3"


def test_phi_maps_blue_to_odd_and_red_to_even():
    colored = ColoredPartition([(2, Color.BLUE), (1, Color.RED)])
    assert phi(colored) == Partition((5, 2))
    assert phi(ColoredPartition()) == Partition()


def test_phi_inverse_round_trip():
    for i in range(0, 7):
        for colored in enumerate_colored_partitions(i):
            assert phi_inverse(phi(colored)) == colored


def test_phi_inverse_rejects_ones():
    with pytest.raises(ValueError):
        phi_inverse(Partition((3, 1)))


def test_psi_and_pad_ones():
    assert psi(Partition((5, 2, 1, 1))) == Partition((5, 2))
    assert psi(Partition((1, 1, 1))) == Partition()
    assert pad_ones(Partition((5, 2)), 9) == Partition((5, 2, 1, 1))
    with pytest.raises(ValueError):
        pad_ones(Partition((5, 2)), 6)


def test_colored_partitions_of_two():
    colored = [str(c) for c in enumerate_colored_partitions(2)]
    assert colored == ["2b", "2r", "1b,1b", "1b,1r", "1r,1r"]


def test_colored_partition_counts():
    # Coefficients of the product over m of (1 - x^m)^-2
    expected = [1, 2, 5, 10, 20, 36, 65, 110]
    assert [sum(1 for _ in enumerate_colored_partitions(i)) for i in range(8)] == expected


def test_colored_partition_canonical_order():
    colored = ColoredPartition([(1, Color.RED), (2, Color.RED), (1, Color.BLUE)])
    assert str(colored) == "2r,1b,1r"
    assert colored.weight == 4


def test_parse_partition_forms():
    assert parse_partition("4,2,1") == Partition((4, 2, 1))
    assert parse_partition("1^2 2^1 4^3") == Partition((4, 4, 4, 2, 1, 1))
    assert parse_partition("") == Partition()


@pytest.mark.parametrize("text", ["1,2", "3,x", "2,0", "1^0", "2^-1", "2^"])
def test_parse_partition_rejects(text):
    with pytest.raises(ParseError):
        parse_partition(text)


def test_parse_composition():
    assert parse_composition("1|2|3") == Composition((1, 2, 3))
    with pytest.raises(ParseError):
        parse_composition("")
    with pytest.raises(ParseError):
        parse_composition("1||2")


def test_parse_colored_partition():
    assert parse_colored_partition("2b,1r") == ColoredPartition([(2, Color.BLUE), (1, Color.RED)])
    with pytest.raises(ParseError):
        parse_colored_partition("2g")
