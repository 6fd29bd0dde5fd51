"""Robinson-Schensted insertion and the brute-force right-cell oracle.

Row insertion of the one-line word of a permutation produces a pair of
standard Young tableaux of a common shape: the insertion tableau records the
bumped values, the recording tableau the order in which cells were created.
Under this package's right-action convention, two permutations lie in the
same right cell exactly when their *recording* tableaux agree; the choice of
component is pinned empirically by the calibration suite in the tests, which
checks both candidates against the diagram-admissibility criterion over
whole symmetric groups and finds that exactly one survives.

Shape utilities for compositions and partitions (conjugation, dominance,
enumeration) also live here.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from typing import Iterator

from .permutations import Permutation, check_enumeration_guard, symmetric_group


@dataclass(frozen=True, slots=True)
class StandardYoungTableau:
    """Rows of a standard Young tableau: entries 1..n, rows and columns
    strictly increasing, row lengths weakly decreasing.

    >>> StandardYoungTableau(((1, 3), (2,))).shape
    (2, 1)
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        entries = [v for row in rows for v in row]
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries are not exactly 1..n: {rows!r}")
        lengths = [len(row) for row in rows]
        if any(b > a for a, b in zip(lengths, lengths[1:])) or 0 in lengths:
            raise ValueError(f"row lengths must be weakly decreasing: {rows!r}")
        for row in rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"rows must increase: {rows!r}")
        for upper, lower in zip(rows, rows[1:]):
            if any(upper[k] >= lower[k] for k in range(len(lower))):
                raise ValueError(f"columns must increase: {rows!r}")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)


def rs_pair(x: Permutation) -> tuple[StandardYoungTableau, StandardYoungTableau]:
    """Insertion and recording tableaux of the one-line word of x.

    >>> p, q = rs_pair(Permutation((3, 1, 2)))
    >>> p.rows, q.rows
    (((1, 2), (3,)), ((1, 3), (2,)))
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, value in enumerate(x.images, start=1):
        carried = value
        for p_row, q_row in zip(p_rows, q_rows):
            pos = bisect.bisect_left(p_row, carried)
            if pos == len(p_row):
                p_row.append(carried)
                q_row.append(step)
                break
            p_row[pos], carried = carried, p_row[pos]
        else:
            p_rows.append([carried])
            q_rows.append([step])
    return (
        StandardYoungTableau(tuple(tuple(row) for row in p_rows)),
        StandardYoungTableau(tuple(tuple(row) for row in q_rows)),
    )


def insertion_tableau(x: Permutation) -> StandardYoungTableau:
    return rs_pair(x)[0]


def recording_tableau(x: Permutation) -> StandardYoungTableau:
    return rs_pair(x)[1]


# The tableau component whose equality detects right-cell membership under
# this package's conventions.  Pinned by the calibration tests; see the
# module docstring.
RIGHT_CELL_COMPONENT = "recording"


def insertion_equivalent(x: Permutation, y: Permutation) -> bool:
    """Whether x and y share their insertion tableau."""
    if x.degree != y.degree:
        raise ValueError(f"degree mismatch: {x.degree} != {y.degree}")
    return insertion_tableau(x) == insertion_tableau(y)


def recording_equivalent(x: Permutation, y: Permutation) -> bool:
    """Whether x and y share their recording tableau."""
    if x.degree != y.degree:
        raise ValueError(f"degree mismatch: {x.degree} != {y.degree}")
    return recording_tableau(x) == recording_tableau(y)


def right_equivalent(x: Permutation, y: Permutation) -> bool:
    """Whether x and y lie in the same right cell.

    >>> right_equivalent(Permutation((2, 1, 3)), Permutation((3, 1, 2)))
    True
    >>> right_equivalent(Permutation((2, 1, 3)), Permutation((1, 3, 2)))
    False
    """
    return recording_equivalent(x, y)


def right_cell_of(w: Permutation, limit: int | None = None) -> set[Permutation]:
    """All elements of S_n right-equivalent to w, by full enumeration.

    Subject to the enumeration guard; pass an explicit limit to override.
    """
    check_enumeration_guard(w.degree, limit)
    target = recording_tableau(w)
    return {y for y in symmetric_group(w.degree) if recording_tableau(y) == target}


# ---------------------------------------------------------------------------
# compositions and partitions, as plain tuples of positive parts


def is_partition(parts: tuple[int, ...]) -> bool:
    return all(a >= b for a, b in zip(parts, parts[1:])) and all(
        p > 0 for p in parts
    )


def conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugate partition of a composition: entry k counts parts >= k.

    >>> conjugate((2, 1, 1, 2))
    (4, 2)
    >>> conjugate((3, 2))
    (2, 2, 1)
    """
    if not parts:
        return ()
    return tuple(
        sum(1 for p in parts if p >= k) for k in range(1, max(parts) + 1)
    )


def dominates(upper: tuple[int, ...], lower: tuple[int, ...]) -> bool:
    """Dominance order on partitions of the same total: every prefix sum of
    upper is at least the matching prefix sum of lower.

    >>> dominates((3, 1), (2, 2))
    True
    >>> dominates((2, 2), (3, 1))
    False
    """
    if sum(upper) != sum(lower):
        raise ValueError(f"totals differ: {upper!r} vs {lower!r}")
    acc_u = acc_l = 0
    for k in range(max(len(upper), len(lower))):
        acc_u += upper[k] if k < len(upper) else 0
        acc_l += lower[k] if k < len(lower) else 0
        if acc_u < acc_l:
            return False
    return True


def compositions_of(n: int) -> Iterator[tuple[int, ...]]:
    """All compositions of n (ordered tuples of positive parts).

    >>> list(compositions_of(3))
    [(3,), (1, 2), (2, 1), (1, 1, 1)]
    """
    if n == 0:
        yield ()
        return
    for cuts in itertools.chain.from_iterable(
        itertools.combinations(range(1, n), k) for k in range(n)
    ):
        bounds = (0,) + cuts + (n,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def partitions_of(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n, largest part first within each, in the order
    induced by compositions_of."""
    for comp in compositions_of(n):
        if is_partition(comp):
            yield comp
