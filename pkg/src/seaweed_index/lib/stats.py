"""
Partition statistics built on the index of a seaweed.

Two statistics come from pairing a partition with a natural bottom composition:

    ind_ones(λ)   = ind(λ_1|...|λ_m / 1|...|1)
    ind_maxpar(λ) = ind(λ_1|...|λ_m / w(λ))

A partition is Frobenius when ind_maxpar is zero.
"""

from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import NonNegativeInt, PositiveInt
from pydantic.dataclasses import dataclass

from seaweed_index.lib.constants import (
    BREAKDOWN_M_DEFAULT,
    CLAIMED_PERIODS,
    EXAMPLE_TAILS,
    MIN_REPEATS_DEFAULT,
    STABILIZATION_WINDOW_TAIL,
    THEOREM_TAILS,
)
from seaweed_index.lib.log import LOGGER
from seaweed_index.lib.meander import EmptyMeanderError, SeaweedType, index_dk
from seaweed_index.lib.partition import (
    Partition,
    bounded_partition_tuples,
    conjugate,
    enumerate_colored_partitions,
    enumerate_partitions,
    odd_partition_tuples,
    pad_ones,
    phi,
    psi,
    reverse,
)
from seaweed_index.lib.series import a300574_gf, two_colored_gf
from seaweed_index.lib.util import checked_count, ordered_map
from seaweed_index.lib.winding import winding_index


class VerificationMismatch(Exception):
    """
    Raised when a computed value contradicts a stated claim.
    """

    pass


class NonStabilizationError(VerificationMismatch):
    """
    Raised when c^i_n is not constant over its stabilization window.
    """

    pass


# Index statistics


def _check_nonempty(partition: Partition):
    if partition.weight == 0:
        raise EmptyMeanderError("Index statistics are undefined for the empty partition")


def ind_ones(partition: Partition) -> int:
    """
    ind(λ / 1^n). The bottom has no arcs, so the meander is n vertices minus one per top arc, all paths.
    """
    _check_nonempty(partition)
    return partition.weight - 1 - partition.arcs


def _ind_maxpar(parts: Tuple[int, ...]) -> int:
    return winding_index(parts, (sum(parts),))


def ind_maxpar(partition: Partition) -> int:
    """
    ind(λ / n), computed by winding down.
    """
    _check_nonempty(partition)
    return _ind_maxpar(partition.parts)


# All-ones statistic


@lru_cache(maxsize=None)
def ones_histogram(n: int) -> Tuple[int, ...]:
    """
    Number of partitions of n with ind_ones equal to 0, 1, ..., n - 1.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    histogram = [0] * n
    for partition in enumerate_partitions(n):
        histogram[ind_ones(partition)] += 1
    return tuple(histogram)


def c_value(n: int, i: int) -> int:
    """
    c^i_n: the number of partitions of n with ind_ones equal to n - i.
    """
    index = n - i
    if not 0 <= index < n:
        return 0
    return ones_histogram(n)[index]


class OnesTable:
    """
    Counts of partitions by their all-ones index. Row n, column i counts λ ⊢ n with ind_ones(λ) = i.
    """

    def __init__(self, n_max: int, i_max: int, histograms: Dict[int, Sequence[int]]):
        self._n_max = n_max
        self._i_max = i_max
        self._histograms = {n: tuple(histogram) for n, histogram in histograms.items()}

        self._cells = np.zeros((n_max, i_max), dtype=np.int64)
        for n in range(1, n_max + 1):
            for i, count in enumerate(self._histograms[n][:i_max]):
                self._cells[n - 1, i] = checked_count(count)

    @property
    def n_max(self) -> int:
        return self._n_max

    @property
    def i_max(self) -> int:
        return self._i_max

    @property
    def cells(self) -> np.ndarray:
        return self._cells.copy()

    def cell(self, n: int, i: int) -> int:
        return int(self._cells[n - 1, i])

    def row(self, n: int) -> List[int]:
        return [int(count) for count in self._cells[n - 1]]

    def c(self, n: int, i: int) -> int:
        """
        c^i_n, read along the anti-diagonal: the count at index n - i.
        """
        index = n - i
        if not 0 <= index < n:
            return 0
        return self._histograms[n][index]

    def header(self) -> List[str]:
        return ["n"] + [f"i={i}" for i in range(self._i_max)]

    def rows(self) -> List[List[int]]:
        return [[n] + self.row(n) for n in range(1, self._n_max + 1)]


def ones_table(n_max: int, i_max: int, jobs: int = 1) -> OnesTable:
    """
    Tabulate the all-ones index over every partition of n = 1..n_max, for index values 0..i_max - 1.
    """
    if n_max < 1 or i_max < 1:
        raise ValueError(f"n_max and i_max must be positive, got {n_max} and {i_max}")
    histograms = ordered_map(ones_histogram, range(1, n_max + 1), jobs=jobs)
    return OnesTable(n_max, i_max, dict(zip(range(1, n_max + 1), histograms)))


def stabilization_window(i: int, tail: int = STABILIZATION_WINDOW_TAIL) -> range:
    """
    The weights n in [3i - 3, 3i + tail] over which c^i_n must be constant (n >= 1).
    """
    return range(max(3 * i - 3, 1), 3 * i + tail + 1)


def stabilized_c(i: int, tail: int = STABILIZATION_WINDOW_TAIL) -> int:
    """
    The eventual value c^i of c^i_n, checked to be constant over the stabilization window.

    Raises:
        NonStabilizationError: If c^i_n varies over the window.
    """
    if i < 1:
        raise ValueError(f"i must be positive, got {i}")

    window = stabilization_window(i, tail)
    values = [c_value(n, i) for n in window]
    if len(set(values)) != 1:
        raise NonStabilizationError(f"c^{i}_n is not constant for n in [{window.start}, {window.stop - 1}]: {values}")
    return values[0]


def bijection_holds(i: int, n: int) -> bool:
    """
    Check that padding phi-images of colored partitions of i - 1 with ones gives exactly the partitions of n with
    i - 1 arcs, and that psi undoes the padding.
    """
    if n < max(3 * i - 3, 1):
        raise ValueError(f"The bijection needs n >= 3i - 3, got i={i}, n={n}")

    images = {phi(colored) for colored in enumerate_colored_partitions(i - 1)}
    fiber = [partition for partition in enumerate_partitions(n) if partition.arcs == i - 1]
    return (
        len(fiber) == len(images)
        and {psi(partition) for partition in fiber} == images
        and {pad_ones(image, n) for image in images} == set(fiber)
    )


@dataclass(frozen=True)
class StabilizationRow:
    i: PositiveInt
    stabilized: NonNegativeInt
    colored: NonNegativeInt
    coefficient: NonNegativeInt
    bijection: Optional[bool] = None

    @property
    def match(self) -> bool:
        return self.stabilized == self.colored == self.coefficient and self.bijection is not False

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "stabilized": self.stabilized,
            "colored": self.colored,
            "coefficient": self.coefficient,
            "bijection": self.bijection,
            "match": self.match,
        }


def stabilization_report(i_max: int, bijection_i_max: int = 6) -> List[StabilizationRow]:
    """
    For i = 1..i_max, compare c^i with the number of two-colored partitions of i - 1, both by enumeration and from
    the generating function. For i up to `bijection_i_max`, also check the phi/psi bijection over [3i - 3, 3i].
    """
    series = two_colored_gf(max(i_max - 1, 0))
    rows = []
    for i in range(1, i_max + 1):
        bijection = None
        if i <= bijection_i_max:
            bijection = all(bijection_holds(i, n) for n in range(max(3 * i - 3, 1), 3 * i + 1))
        rows.append(
            StabilizationRow(
                i=i,
                stabilized=stabilized_c(i),
                colored=sum(1 for _ in enumerate_colored_partitions(i - 1)),
                coefficient=series[i - 1],
                bijection=bijection,
            )
        )
        LOGGER.debug(f"Stabilization row {rows[-1]}")
    return rows


# Frobenius partitions with bounded parts


def _balanced_split(parts: Sequence[int]) -> bool:
    # Two pointers: prefix sums grow with i, suffix sums grow as j falls
    m = len(parts)
    if m < 3:
        return False
    i, j = 0, m - 1
    prefix, suffix = parts[0], parts[m - 1]
    while i < j - 1:
        if prefix == suffix:
            return True
        if prefix < suffix:
            i += 1
            prefix += parts[i]
        else:
            j -= 1
            suffix += parts[j]
    return False


def lemma_sum_applies(partition: Partition) -> bool:
    """
    Whether some prefix a_1..a_i balances some suffix a_j..a_m with i < j - 1. Such partitions are not Frobenius.
    """
    return _balanced_split(partition.parts)


def lemma_odd_applies(partition: Partition) -> bool:
    """
    Whether the partition has more than two odd parts. Such partitions are not Frobenius.
    """
    return partition.odd_parts > 2


def _frobenius_tuples(n: int, d: int, prune: bool = True) -> Iterator[Tuple[int, ...]]:
    candidates = bounded_partition_tuples(n, d, 2 if prune else None)
    for parts in candidates:
        if prune and _balanced_split(parts):
            continue
        if _ind_maxpar(parts) == 0:
            yield parts


def frobenius_partitions(n: int, d: int, prune: bool = True) -> Iterator[Partition]:
    """
    The Frobenius partitions of n with every part at most d, in reverse lexicographic order.

    With `prune`, partitions rejected by the odd-parts and balanced-split filters are never indexed.
    """
    if n < 1 or d < 1:
        raise ValueError(f"n and d must be positive, got n={n}, d={d}")
    return (Partition(parts) for parts in _frobenius_tuples(n, d, prune))


@dataclass(frozen=True)
class FrobeniusCount:
    n: PositiveInt
    d: PositiveInt
    count: NonNegativeInt

    def to_dict(self) -> dict:
        return {"n": self.n, "d": self.d, "count": self.count}


def frobenius_count(n: int, d: int, prune: bool = True) -> FrobeniusCount:
    """
    |P(n, d)|: the number of Frobenius partitions of n with every part at most d.
    """
    if n < 1 or d < 1:
        raise ValueError(f"n and d must be positive, got n={n}, d={d}")
    count = sum(1 for _ in _frobenius_tuples(n, d, prune))
    return FrobeniusCount(n=n, d=d, count=checked_count(count))


def _frobenius_count_job(args: Tuple[int, int]) -> FrobeniusCount:
    n, d = args
    return frobenius_count(n, d)


def frobenius_counts(d: int, n_max: int, jobs: int = 1) -> List[FrobeniusCount]:
    """
    |P(n, d)| for n = 1..n_max, in n order.
    """
    LOGGER.debug(f"Counting Frobenius partitions for d={d}, n <= {n_max}")
    return ordered_map(_frobenius_count_job, [(n, d) for n in range(1, n_max + 1)], jobs=jobs)


# Periodicity


@dataclass(frozen=True)
class PeriodReport:
    onset: PositiveInt
    period: PositiveInt
    values: List[int]
    verified_up_to: PositiveInt
    d: Optional[PositiveInt] = None
    claimed_period: Optional[PositiveInt] = None

    @property
    def discrepancy(self) -> bool:
        return self.claimed_period is not None and self.claimed_period != self.period

    def value_at(self, n: int) -> int:
        if n < self.onset:
            raise ValueError(f"n={n} precedes the periodic regime starting at {self.onset}")
        return self.values[(n - self.onset) % self.period]

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "onset": self.onset,
            "period": self.period,
            "values": list(self.values),
            "verified_up_to": self.verified_up_to,
            "claimed_period": self.claimed_period,
            "discrepancy": self.discrepancy,
        }


def detect_period(
    values: Sequence[int],
    start: int = 1,
    min_repeats: int = MIN_REPEATS_DEFAULT,
    d: Optional[int] = None,
) -> Optional[PeriodReport]:
    """
    Find the smallest period of an eventually periodic tail, with the earliest onset for that period.

    Args:
        values: Values for n = start, start + 1, ...
        start: The n of the first value.
        min_repeats: Full repetitions the periodic tail must show.
        d: Optional part bound, carried into the report.

    Returns:
        The report, or None if no period repeats at least `min_repeats` times.
    """
    if min_repeats < 1:
        raise ValueError(f"min_repeats must be positive, got {min_repeats}")

    length = len(values)
    for period in range(1, length // min_repeats + 1):
        # Walk back from the end while values agree with the value one period later
        k = length - period - 1
        while k >= 0 and values[k] == values[k + period]:
            k -= 1
        onset_index = k + 1
        if length - onset_index >= min_repeats * period:
            return PeriodReport(
                onset=start + onset_index,
                period=period,
                values=list(values[onset_index : onset_index + period]),
                verified_up_to=start + length - 1,
                d=d,
                claimed_period=CLAIMED_PERIODS.get(d) if d is not None else None,
            )
    return None


def frobenius_period(
    counts: Sequence[FrobeniusCount], min_repeats: int = MIN_REPEATS_DEFAULT
) -> Optional[PeriodReport]:
    """
    Detect the eventual period of consecutive counts |P(n, d)| for a single d.
    """
    if not counts:
        return None
    d, n_max = counts[0].d, counts[-1].n
    report = detect_period([count.count for count in counts], start=counts[0].n, min_repeats=min_repeats, d=d)
    if report is None:
        LOGGER.warning(f"No period with {min_repeats} repetitions found for d={d} up to n={n_max}")
    elif report.discrepancy:
        LOGGER.warning(f"d={d}: detected period {report.period}, stated period {report.claimed_period}")
    return report


def claimed_tail(d: int) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """
    The stated (onset, values) of the periodic tail of |P(n, d)|, if any.
    """
    return THEOREM_TAILS.get(d) or EXAMPLE_TAILS.get(d)


def tail_mismatches(counts: Sequence[FrobeniusCount], d: int) -> List[Tuple[int, int, int]]:
    """
    (n, expected, counted) for every count in the stated periodic regime of d that disagrees with it.
    """
    tail = claimed_tail(d)
    if tail is None:
        return []
    onset, pattern = tail
    return [
        (count.n, pattern[(count.n - onset) % len(pattern)], count.count)
        for count in counts
        if count.n >= onset and count.count != pattern[(count.n - onset) % len(pattern)]
    ]


def theorem_residues(d: int, n_max: int, jobs: int = 1) -> List[Tuple[int, int, int]]:
    """
    Check |P(n, d)| against the proven residue pattern for d <= 4, up to n_max. Returns the mismatches.
    """
    if d not in THEOREM_TAILS:
        raise ValueError(f"Residue patterns are known for d in {sorted(THEOREM_TAILS)}, got {d}")
    return tail_mismatches(frobenius_counts(d, n_max, jobs=jobs), d)


@dataclass(frozen=True)
class BreakdownRow:
    m: PositiveInt
    n: PositiveInt
    count: NonNegativeInt
    witnesses: List[str]
    witness_indices: List[int]

    @property
    def witnesses_frobenius(self) -> bool:
        return all(index == 0 for index in self.witness_indices)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "count": self.count,
            "witnesses": list(self.witnesses),
            "witness_indices": list(self.witness_indices),
            "witnesses_frobenius": self.witnesses_frobenius,
        }


def breakdown_witness(m: int, k: int) -> Partition:
    """
    The partition 1^1 4^(2(m - k)) 8^k of 8m + 1.
    """
    return Partition((8,) * k + (4,) * (2 * (m - k)) + (1,))


def frobenius_breakdown(m_values: Sequence[int] = BREAKDOWN_M_DEFAULT) -> List[BreakdownRow]:
    """
    |P(8m + 1, 8)| along the given m, with the index of every witness 1^1 4^(2(m - k)) 8^k, k = 0..m.
    """
    rows = []
    for m in m_values:
        n = 8 * m + 1
        witnesses = [breakdown_witness(m, k) for k in range(m + 1)]
        rows.append(
            BreakdownRow(
                m=m,
                n=n,
                count=frobenius_count(n, 8).count,
                witnesses=[witness.frequency_notation() for witness in witnesses],
                witness_indices=[ind_maxpar(witness) for witness in witnesses],
            )
        )
    return rows


def breakdown_holds(rows: Sequence[BreakdownRow]) -> bool:
    """
    Whether the counts strictly increase over at least two rows and every witness is Frobenius.
    """
    increasing = all(left.count < right.count for left, right in zip(rows, rows[1:]))
    return len(rows) >= 2 and increasing and all(row.witnesses_frobenius for row in rows)


# Reverse and conjugate pairings


def divisor_count(n: int) -> int:
    """
    d(n), the number of positive divisors of n.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    count = 0
    k = 1
    while k * k <= n:
        if n % k == 0:
            count += 1 if k * k == n else 2
        k += 1
    return count


def self_conjugate_count(n: int) -> int:
    """
    Number of partitions of n fixed by conjugation, by direct scan.
    """
    return sum(1 for partition in enumerate_partitions(n) if conjugate(partition) == partition)


def rev_statistic(n: int) -> int:
    """
    |{λ ⊢ n : ind(λ / Rev(λ)) = n - 1}|.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return sum(
        1
        for partition in enumerate_partitions(n)
        if index_dk(SeaweedType(partition.parts, reverse(partition))) == n - 1
    )


def conj_statistic(n: int) -> int:
    """
    |{λ ⊢ n : ind(λ / λ^C) = n - 1}|.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return sum(
        1
        for partition in enumerate_partitions(n)
        if index_dk(SeaweedType(partition.parts, conjugate(partition).parts)) == n - 1
    )


STATISTICS = {
    "rev": (rev_statistic, divisor_count),
    "conjugate": (conj_statistic, lambda n: 2 * self_conjugate_count(n)),
}

# Claims the literal statistic does not reproduce. The conjugate pairing
# counts one partition per self-conjugate partition, half the stated value.
DISPUTED_CLAIMS = frozenset({"conjugate"})


@dataclass(frozen=True)
class StatRow:
    kind: str
    n: PositiveInt
    count: NonNegativeInt
    claimed: NonNegativeInt
    disputed: bool = False

    @property
    def match(self) -> bool:
        return self.count == self.claimed

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "count": self.count,
            "claimed": self.claimed,
            "disputed": self.disputed,
            "match": self.match,
        }


def _stat_job(args: Tuple[str, int]) -> StatRow:
    kind, n = args
    statistic, claimed = STATISTICS[kind]
    return StatRow(kind=kind, n=n, count=statistic(n), claimed=claimed(n), disputed=kind in DISPUTED_CLAIMS)


def stat_rows(kind: str, n_max: int, jobs: int = 1) -> List[StatRow]:
    """
    The rev or conjugate statistic for n = 1..n_max, next to its claimed closed form.

    Rows of a statistic in DISPUTED_CLAIMS carry disputed=True; their mismatches are expected.
    """
    if kind not in STATISTICS:
        raise ValueError(f"Unknown statistic {kind!r}, expected one of {sorted(STATISTICS)}")
    rows = ordered_map(_stat_job, [(kind, n) for n in range(1, n_max + 1)], jobs=jobs)
    if kind in DISPUTED_CLAIMS:
        LOGGER.warning(f"The closed form for the {kind} statistic is known not to hold; mismatches are reported as-is")
    return rows


# Parity of the maximal parabolic index over odd-part partitions


@dataclass(frozen=True)
class ParityTally:
    n: PositiveInt
    even_count: NonNegativeInt
    odd_count: NonNegativeInt

    @property
    def signed_difference(self) -> int:
        return self.even_count - self.odd_count

    @property
    def difference(self) -> int:
        return abs(self.signed_difference)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "even_count": self.even_count,
            "odd_count": self.odd_count,
            "signed_difference": self.signed_difference,
        }


def conjecture_tally(n: int) -> ParityTally:
    """
    Split the odd-part partitions of n by the parity of ind_maxpar.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    even = odd = 0
    for parts in odd_partition_tuples(n):
        if _ind_maxpar(parts) & 1:
            odd += 1
        else:
            even += 1
    return ParityTally(n=n, even_count=checked_count(even), odd_count=checked_count(odd))


@dataclass(frozen=True)
class ConjectureRow:
    tally: ParityTally
    coefficient: int

    @property
    def match(self) -> bool:
        return self.tally.difference == self.coefficient

    def to_dict(self) -> dict:
        return {
            **self.tally.to_dict(),
            "difference": self.tally.difference,
            "coefficient": self.coefficient,
            "match": self.match,
        }


def conjecture_rows(n_max: int, jobs: int = 1) -> List[ConjectureRow]:
    """
    |e_n - o_n| against the coefficient of q^n in the product over k of 1 / (1 + (-1)^k q^(2k - 1)), n = 1..n_max.
    """
    series = a300574_gf(n_max)
    tallies = ordered_map(conjecture_tally, range(1, n_max + 1), jobs=jobs)
    rows = [ConjectureRow(tally=tally, coefficient=series[tally.n]) for tally in tallies]
    for row in rows:
        if row.coefficient < 0:
            LOGGER.warning(f"Negative product coefficient at n={row.tally.n}: {row.coefficient}")
    return rows
