import pytest

from seaweed_index.__main__ import main

# Counts of partitions of n by their all-ones index, index values 0..9
TABLE_1 = {
    1: [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    2: [1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    3: [0, 2, 1, 0, 0, 0, 0, 0, 0, 0],
    4: [0, 2, 2, 1, 0, 0, 0, 0, 0, 0],
    5: [0, 0, 4, 2, 1, 0, 0, 0, 0, 0],
    6: [0, 0, 3, 5, 2, 1, 0, 0, 0, 0],
    7: [0, 0, 0, 7, 5, 2, 1, 0, 0, 0],
    8: [0, 0, 0, 5, 9, 5, 2, 1, 0, 0],
    9: [0, 0, 0, 0, 12, 10, 5, 2, 1, 0],
    10: [0, 0, 0, 0, 7, 17, 10, 5, 2, 1],
}

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627]


@pytest.fixture
def table_1():
    return TABLE_1


@pytest.fixture
def partition_counts():
    """
    p(n) for n = 0..20.
    """
    return PARTITION_COUNTS


@pytest.fixture
def run_cli(capsys):
    """
    Run the command line with the given arguments. Returns (exit code, standard output).
    """

    def run(*argv: str):
        code = main(list(argv))
        return code, capsys.readouterr().out

    return run
