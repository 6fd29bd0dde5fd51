"""Diagrams of nodes in the plane, their fillings, and their permutations.

A diagram is a non-empty finite set of nodes ``(row, column)``, 1-based,
rows numbered top to bottom and columns left to right.  Diagrams here are
principal: constructors re-index rows and columns so that the used indices
are exactly ``1..max`` with no gaps, and equality is node-set equality after
that normalization.

The row filling ``t^D`` numbers the nodes row by row, the column filling
``t_D`` column by column; the diagram permutation ``w_D`` carries the row
filling to the column filling.  Prefixes of ``w_D`` correspond to standard
fillings of ``D``, which drives everything else in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .permutations import (
    Permutation,
    VerificationError,
    composition_generators,
    is_coset_rep,
    prefix_closure,
)

Node = tuple[int, int]


@dataclass(frozen=True, slots=True)
class Diagram:
    """A principal diagram: a normalized, non-empty set of (row, col) nodes.

    >>> Diagram({(2, 5), (2, 7), (4, 5)}).sorted_nodes
    ((1, 1), (1, 2), (2, 1))
    """

    nodes: frozenset[Node]

    def __post_init__(self) -> None:
        raw = {(int(a), int(b)) for a, b in self.nodes}
        if not raw:
            raise ValueError("a diagram needs at least one node")
        row_rank = {a: k for k, a in enumerate(sorted({a for a, _ in raw}), 1)}
        col_rank = {b: k for k, b in enumerate(sorted({b for _, b in raw}), 1)}
        normalized = frozenset((row_rank[a], col_rank[b]) for a, b in raw)
        object.__setattr__(self, "nodes", normalized)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> Diagram:
        """Build from per-row column index sets, top row first.

        >>> Diagram.from_rows([(1, 2), (2,)]).sorted_nodes
        ((1, 1), (1, 2), (2, 2))
        """
        return cls(
            frozenset(
                (a, b) for a, cols in enumerate(rows, 1) for b in cols
            )
        )

    def __repr__(self) -> str:
        return f"Diagram.from_rows({list(self.rows())!r})"

    @property
    def size(self) -> int:
        return len(self.nodes)

    @property
    def sorted_nodes(self) -> tuple[Node, ...]:
        """Nodes in row-major order (the order of the row filling)."""
        return tuple(sorted(self.nodes))

    @property
    def row_count(self) -> int:
        return max(a for a, _ in self.nodes)

    @property
    def column_count(self) -> int:
        return max(b for _, b in self.nodes)

    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Column indices on each row, top to bottom.

        >>> Diagram({(1, 1), (1, 2), (2, 1)}).rows()
        ((1, 2), (1,))
        """
        out: list[list[int]] = [[] for _ in range(self.row_count)]
        for a, b in self.sorted_nodes:
            out[a - 1].append(b)
        return tuple(tuple(row) for row in out)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        """Row indices on each column, left to right."""
        out: list[list[int]] = [[] for _ in range(self.column_count)]
        for a, b in sorted(self.nodes, key=lambda node: (node[1], node[0])):
            out[b - 1].append(a)
        return tuple(tuple(col) for col in out)

    def row_composition(self) -> tuple[int, ...]:
        """Number of nodes on each row."""
        return tuple(len(row) for row in self.rows())

    def column_composition(self) -> tuple[int, ...]:
        """Number of nodes on each column."""
        return tuple(len(col) for col in self.columns())

    def column_lengths(self) -> tuple[int, ...]:
        """Alias of column_composition: the tuple of column lengths."""
        return self.column_composition()

    def render(self, node_char: str = "×", empty_char: str = "·") -> str:
        """ASCII-art rows, one diagram row per line.

        >>> print(Diagram({(1, 2), (2, 1)}).render(node_char="x", empty_char="."))
        . x
        x .
        """
        width = self.column_count
        lines = []
        for row in self.rows():
            cells = [node_char if b in row else empty_char for b in range(1, width + 1)]
            lines.append(" ".join(cells))
        return "\n".join(lines)


def young_diagram(parts: tuple[int, ...]) -> Diagram:
    """The diagram with parts[k] left-packed nodes on row k+1.

    >>> young_diagram((2, 2)).sorted_nodes
    ((1, 1), (1, 2), (2, 1), (2, 2))
    """
    if not parts or min(parts) < 1:
        raise ValueError(f"parts must be positive: {parts!r}")
    return Diagram.from_rows([range(1, p + 1) for p in parts])


@dataclass(frozen=True, slots=True)
class DiagramTableau:
    """A filling of a diagram with 1..n; values follow row-major node order.

    ``values[k]`` is the entry at ``diagram.sorted_nodes[k]``.
    """

    diagram: Diagram
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if sorted(values) != list(range(1, self.diagram.size + 1)):
            raise ValueError(f"entries are not a bijection onto 1..n: {values!r}")

    def entry(self, node: Node) -> int:
        return self.values[self.diagram.sorted_nodes.index(node)]

    def acted_by(self, x: Permutation) -> DiagramTableau:
        """Replace every entry k by x(k)."""
        if x.degree != self.diagram.size:
            raise ValueError(f"degree mismatch: {x.degree} != {self.diagram.size}")
        return DiagramTableau(self.diagram, tuple(x(v) for v in self.values))


def row_filling(D: Diagram) -> DiagramTableau:
    """The filling by rows, top to bottom and left to right."""
    return DiagramTableau(D, tuple(range(1, D.size + 1)))


def column_filling(D: Diagram) -> DiagramTableau:
    """The filling by columns, left to right and top to bottom."""
    by_cols = sorted(D.nodes, key=lambda node: (node[1], node[0]))
    entry = {node: k for k, node in enumerate(by_cols, 1)}
    return DiagramTableau(D, tuple(entry[node] for node in D.sorted_nodes))


def w_of_diagram(D: Diagram) -> Permutation:
    """The permutation carrying the row filling to the column filling.

    >>> w_of_diagram(young_diagram((2, 2))).images
    (1, 3, 2, 4)
    """
    return Permutation(column_filling(D).values)


def is_standard(t: DiagramTableau) -> bool:
    """Whether entries increase weakly along the componentwise node order."""
    nodes = t.diagram.sorted_nodes
    for k, (a1, b1) in enumerate(nodes):
        for l, (a2, b2) in enumerate(nodes):
            if a1 <= a2 and b1 <= b2 and t.values[k] > t.values[l]:
                return False
    return True


def standard_tableaux(D: Diagram) -> Iterator[DiagramTableau]:
    """All standard fillings of D, enumerated deterministically.

    A standard filling assigns 1..n respecting the componentwise order on
    nodes, so the fillings are the linear extensions of that partial order.
    """
    nodes = D.sorted_nodes
    index = {node: k for k, node in enumerate(nodes)}
    below = {
        node: [
            other
            for other in nodes
            if other != node and other[0] <= node[0] and other[1] <= node[1]
        ]
        for node in nodes
    }
    values = [0] * len(nodes)

    def grow(step: int, remaining: set[Node]) -> Iterator[DiagramTableau]:
        if not remaining:
            yield DiagramTableau(D, tuple(values))
            return
        for node in sorted(remaining):
            if any(other in remaining for other in below[node]):
                continue
            values[index[node]] = step
            yield from grow(step + 1, remaining - {node})

    return grow(1, set(nodes))


def prefix_tableau_bijection(
    D: Diagram,
) -> tuple[tuple[Permutation, ...], tuple[DiagramTableau, ...]]:
    """The prefixes of w_D alongside the standard fillings of D.

    Acting on the row filling by a prefix of w_D gives a standard filling,
    and every standard filling arises exactly once this way; the function
    verifies this correspondence and returns both families.
    """
    base = row_filling(D)
    prefixes = sorted(prefix_closure([w_of_diagram(D)]), key=lambda x: x.sort_key)
    tableaux = tuple(standard_tableaux(D))
    images = {base.acted_by(u) for u in prefixes}
    if len(images) != len(prefixes) or images != set(tableaux):
        raise VerificationError(
            f"prefixes of w_D do not match the standard fillings for {D!r}"
        )
    return tuple(prefixes), tableaux


def is_special(D: Diagram) -> bool:
    """Whether D is a Young diagram with rows and columns shuffled.

    Decided by sorting rows and columns by length, stably, and comparing
    with the Young diagram of the sorted row composition.

    >>> is_special(Diagram({(1, 1), (2, 1), (2, 2)}))
    True
    >>> is_special(Diagram({(1, 2), (2, 1)}))
    False
    """
    parts = D.row_composition()
    target = tuple(sorted(parts, reverse=True))
    row_order = sorted(range(1, D.row_count + 1), key=lambda a: -parts[a - 1])
    cols = D.column_composition()
    col_order = sorted(range(1, D.column_count + 1), key=lambda b: -cols[b - 1])
    row_rank = {a: k for k, a in enumerate(row_order, 1)}
    col_rank = {b: k for k, b in enumerate(col_order, 1)}
    shuffled = frozenset((row_rank[a], col_rank[b]) for a, b in D.nodes)
    return shuffled == young_diagram(target).nodes


def min_column_diagram(d: Permutation, parts: tuple[int, ...]) -> Diagram:
    """The unique diagram with row sizes ``parts`` and diagram permutation
    ``d`` that has the fewest columns.

    Walk the nodes in column-filling order (the k-th node visited is the one
    holding k in the column filling, which sits on the row holding the
    preimage of k under d in the row filling).  A column must carry strictly
    increasing rows, so a new column starts exactly when the row sequence
    fails to climb; starting one any later is impossible and any earlier is
    wasteful, which forces both minimality and uniqueness.

    >>> from .permutations import identity
    >>> min_column_diagram(identity(4), (2, 2)).sorted_nodes
    ((1, 1), (1, 2), (2, 2), (2, 3))
    """
    n = sum(parts)
    if d.degree != n:
        raise ValueError(f"degree {d.degree} does not match composition total {n}")
    if not is_coset_rep(d, composition_generators(parts)):
        raise ValueError(
            f"{d!r} is not a distinguished coset representative for {parts!r}"
        )
    row_of = [a for a, p in enumerate(parts, 1) for _ in range(p)]
    d_inv = d.inverse()
    nodes = []
    column = 0
    previous_row = 0
    for k in range(1, n + 1):
        row = row_of[d_inv(k) - 1]
        if row <= previous_row or column == 0:
            column += 1
        nodes.append((row, column))
        previous_row = row
    return Diagram(frozenset(nodes))


def rotate_180(D: Diagram) -> Diagram:
    """The diagram rotated through a half turn.

    >>> rotate_180(Diagram({(1, 1), (1, 2), (2, 1)})).sorted_nodes
    ((1, 2), (2, 1), (2, 2))
    """
    r, c = D.row_count, D.column_count
    return Diagram(frozenset((r + 1 - a, c + 1 - b) for a, b in D.nodes))


def psi_append(D: Diagram) -> Diagram:
    """Append a single-node row below D, at the least column index keeping
    the diagram admissible.

    The new node lands at (r+1, c) for the least workable c, trying columns
    in ascending order.  At each c the node may join the existing column c,
    or sit in a fresh column inserted there (old columns from c onward shift
    right one place); joining is preferred when both work.  Inputs from a
    rim always admit some placement; other inputs may not, in which case
    this raises.
    """
    from .paths import is_admissible  # deferred: paths builds on this module

    r, m = D.row_count, D.column_count
    for c in range(1, m + 2):
        shared = Diagram(D.nodes | {(r + 1, c)}) if c <= m else None
        fresh = Diagram(
            frozenset((a, b + 1 if b >= c else b) for a, b in D.nodes)
            | {(r + 1, c)}
        )
        for candidate in (shared, fresh):
            if candidate is not None and is_admissible(candidate):
                return candidate
    raise ValueError(f"no admissible single-node row extension of {D!r}")


def hat_diagram(D: Diagram) -> Diagram:
    """Shift D one column right and hang a lone node on a new bottom row.

    >>> hat_diagram(Diagram({(1, 1)})).sorted_nodes
    ((1, 2), (2, 1))
    """
    r = D.row_count
    return Diagram(
        frozenset((a, b + 1) for a, b in D.nodes) | {(r + 1, 1)}
    )
