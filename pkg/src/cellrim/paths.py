"""Disjoint path families in diagrams and their form classification.

A path steps strictly down the rows of a diagram without ever moving
left: consecutive nodes (a, b), (a', b') satisfy a < a' and b <= b'.  A
k-path is a sequence of k pairwise disjoint paths, and it is ordered
when for constituents listed earlier and later, any node of the earlier
one lying weakly above a node of the later one is strictly to its left.

The subsequence type of a diagram records, for each k, how many extra
nodes a best k-path covers beyond a best (k-1)-path.  A diagram whose
subsequence type is the conjugate of its row sizes is admissible; these
are exactly the diagrams this package feeds to the form classifier.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Iterator

from .diagrams import Diagram, Node
from .permutations import VerificationError
from .tableaux import conjugate


def _is_path(nodes: tuple[Node, ...]) -> bool:
    return all(
        a < a2 and b <= b2 for (a, b), (a2, b2) in zip(nodes, nodes[1:])
    )


@dataclass(frozen=True, slots=True)
class KPath:
    """A sequence of pairwise disjoint paths inside a host diagram.

    >>> from .diagrams import young_diagram
    >>> pi = KPath(young_diagram((2, 2)), (((1, 1), (2, 1)), ((1, 2), (2, 2))))
    >>> pi.size, pi.lengths(), pi.path_type()
    (4, (2, 2), (2, 2))
    """

    diagram: Diagram
    constituents: tuple[tuple[Node, ...], ...]

    def __post_init__(self) -> None:
        constituents = tuple(tuple(c) for c in self.constituents)
        object.__setattr__(self, "constituents", constituents)
        seen: set[Node] = set()
        for nodes in constituents:
            if not nodes:
                raise ValueError("constituent paths must be non-empty")
            if not _is_path(nodes):
                raise ValueError(f"not a path: {nodes}")
            if not self.diagram.nodes.issuperset(nodes):
                raise ValueError(f"nodes outside the diagram: {nodes}")
            if seen.intersection(nodes):
                raise ValueError("constituent paths must be disjoint")
            seen.update(nodes)

    @property
    def k(self) -> int:
        return len(self.constituents)

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.constituents)

    @property
    def support(self) -> frozenset[Node]:
        return frozenset(n for c in self.constituents for n in c)

    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.constituents)

    def path_type(self) -> tuple[int, ...]:
        """Constituent lengths sorted non-increasingly, a partition."""
        return tuple(sorted(self.lengths(), reverse=True))


class FormClass(enum.Enum):
    """Outcome of classifying a full-support ordered path family."""

    A = "A"
    B = "B"
    NEITHER = "neither"


def _precedes_ok(earlier: tuple[Node, ...], later: tuple[Node, ...]) -> bool:
    """Whether the pair condition for orderedness holds in this order."""
    return all(
        b < b2 for a, b in earlier for a2, b2 in later if a <= a2
    )


def is_ordered(pi: KPath) -> bool:
    """Whether every earlier constituent stays strictly left of every
    later one wherever their rows weakly agree.

    >>> from .diagrams import Diagram
    >>> D = Diagram.from_rows([(1, 2)])
    >>> is_ordered(KPath(D, (((1, 2),), ((1, 1),))))
    False
    >>> is_ordered(KPath(D, (((1, 1),), ((1, 2),))))
    True
    """
    cs = pi.constituents
    return all(
        _precedes_ok(cs[j], cs[j2])
        for j in range(len(cs))
        for j2 in range(j + 1, len(cs))
    )


def subsequence_type(D: Diagram) -> tuple[int, ...]:
    """The partition whose k-th prefix sum is the maximum size of a
    k-path in the diagram.

    Computed as a unit-capacity minimum-cost flow over the node poset
    ((a, b) precedes (a', b') iff a < a' and b <= b'): each successive
    augmentation adds one constituent and its cost is the negated gain
    in covered nodes, so the gains are automatically non-increasing.

    >>> from .diagrams import young_diagram, Diagram
    >>> subsequence_type(young_diagram((3,)))
    (1, 1, 1)
    >>> subsequence_type(Diagram.from_rows([(1,), (1,), (1,)]))
    (3,)
    >>> subsequence_type(young_diagram((2, 2)))
    (2, 2)
    """
    nodes = D.sorted_nodes
    n = len(nodes)
    source, sink = 2 * n, 2 * n + 1
    residual: dict[tuple[int, int], int] = {}
    cost: dict[tuple[int, int], int] = {}
    neighbours: dict[int, list[int]] = defaultdict(list)

    def add_arc(x: int, y: int, c: int) -> None:
        residual[x, y] = 1
        residual[y, x] = 0
        cost[x, y] = c
        cost[y, x] = -c
        neighbours[x].append(y)
        neighbours[y].append(x)

    for i in range(n):
        add_arc(source, i, 0)
        add_arc(i, n + i, -1)
        add_arc(n + i, sink, 0)
    for i, (a, b) in enumerate(nodes):
        for j, (a2, b2) in enumerate(nodes):
            if a < a2 and b <= b2:
                add_arc(n + i, j, 0)

    parts = []
    while True:
        dist = {source: 0}
        parent: dict[int, int] = {}
        for _ in range(2 * n + 2):
            changed = False
            for x in list(dist):
                for y in neighbours[x]:
                    if residual[x, y] > 0:
                        d = dist[x] + cost[x, y]
                        if d < dist.get(y, d + 1):
                            dist[y] = d
                            parent[y] = x
                            changed = True
            if not changed:
                break
        if dist.get(sink, 0) >= 0:
            return tuple(parts)
        parts.append(-dist[sink])
        y = sink
        while y != source:
            x = parent[y]
            residual[x, y] -= 1
            residual[y, x] += 1
            y = x


def is_admissible(D: Diagram) -> bool:
    """Whether the subsequence type equals the conjugate of the row
    sizes, the largest type allowed.

    >>> from .diagrams import Diagram, young_diagram
    >>> is_admissible(young_diagram((3, 1)))
    True
    >>> is_admissible(Diagram(frozenset({(1, 2), (2, 1)})))
    False
    """
    return subsequence_type(D) == conjugate(D.row_composition())


def _chains_within(
    D: Diagram, allowed: frozenset[Node], lengths: frozenset[int]
) -> list[tuple[Node, ...]]:
    """All paths of the requested lengths using only allowed nodes."""
    found: list[tuple[Node, ...]] = []
    ordered_nodes = sorted(allowed)

    def grow(chain: list[Node]) -> None:
        if len(chain) in lengths:
            found.append(tuple(chain))
        a, b = chain[-1]
        for node in ordered_nodes:
            if node[0] > a and node[1] >= b:
                chain.append(node)
                grow(chain)
                chain.pop()

    for start in ordered_nodes:
        grow([start])
    return found


def _length_sequences(
    total: int, slots: int, cap: int
) -> Iterator[tuple[int, ...]]:
    """Sequences of the given many lengths summing to total, each between
    1 and cap, in decreasing lexicographic order."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(cap, total - slots + 1), 0, -1):
        for rest in _length_sequences(total - first, slots - 1, cap):
            yield (first,) + rest


def order_equivalent(pi: KPath) -> KPath:
    """An ordered path family with the same support.

    The constituent count is the least possible for the support; subject
    to that, the tuple of listed lengths is lexicographically maximal,
    and the flattened node sequence breaks remaining ties, least first.
    The result is a canonical form: applying the function twice gives
    the same family as applying it once.
    """
    support = pi.support
    row_counts = defaultdict(int)
    for a, _ in support:
        row_counts[a] += 1
    all_lengths = frozenset(range(1, pi.diagram.row_count + 1))
    by_length: dict[int, list[tuple[Node, ...]]] = defaultdict(list)
    for chain in sorted(_chains_within(pi.diagram, support, all_lengths)):
        by_length[len(chain)].append(chain)

    def cover(prefix: list[tuple[Node, ...]], remaining: frozenset[Node],
              lengths: tuple[int, ...]) -> tuple[tuple[Node, ...], ...] | None:
        if not lengths:
            return tuple(prefix) if not remaining else None
        for chain in by_length[lengths[0]]:
            if not remaining.issuperset(chain):
                continue
            if not all(_precedes_ok(c, chain) for c in prefix):
                continue
            prefix.append(chain)
            full = cover(prefix, remaining.difference(chain), lengths[1:])
            if full is not None:
                return full
            prefix.pop()
        return None

    cap = max(by_length, default=0)
    for k in range(max(row_counts.values()), len(support) + 1):
        for lengths in _length_sequences(len(support), k, cap):
            full = cover([], support, lengths)
            if full is not None:
                return KPath(pi.diagram, full)
    raise VerificationError("no ordered family covers the support")


def family_with_lengths(
    D: Diagram, lengths: tuple[int, ...]
) -> KPath | None:
    """A disjoint chain family in D with exactly the given lengths.

    Orderedness is not required, only disjointness; None when no such
    family exists.  With lengths summing to the node count this decides
    whether the diagram is covered by a family of that type.

    >>> D = Diagram({(1, 1), (2, 1), (1, 2)})
    >>> family_with_lengths(D, (2, 1)).path_type()
    (2, 1)
    >>> family_with_lengths(D, (3,)) is None
    True
    """
    want = tuple(sorted(lengths, reverse=True))
    if not want or min(want) < 1:
        raise ValueError(f"lengths must be positive, got {lengths}")
    by_length: dict[int, list[tuple[Node, ...]]] = defaultdict(list)
    for chain in sorted(_chains_within(D, D.nodes, frozenset(want))):
        by_length[len(chain)].append(chain)

    def search(
        remaining: frozenset[Node], todo: tuple[int, ...]
    ) -> tuple[tuple[Node, ...], ...] | None:
        if not todo:
            return ()
        for chain in by_length[todo[0]]:
            if remaining.issuperset(chain):
                rest = search(remaining.difference(chain), todo[1:])
                if rest is not None:
                    return (chain,) + rest
        return None

    found = search(frozenset(D.nodes), want)
    return None if found is None else KPath(D, found)


def insert_singletons(pi: KPath, extra: Iterable[Node]) -> KPath:
    """Insert each extra node as a one-node constituent, placing it in
    the sequence so the result stays ordered.

    The relative order of the original constituents is kept.  A node
    that cannot be placed on either side of some constituent (it sits
    between two of the constituent's rows in the same column) makes the
    insertion impossible; the error names the offending column.
    """
    if not is_ordered(pi):
        raise ValueError("can only insert into an ordered family")
    singles = sorted(set(extra))
    if not pi.diagram.nodes.issuperset(singles):
        raise ValueError("extra nodes must lie in the diagram")
    if pi.support.intersection(singles):
        raise ValueError("extra nodes must avoid the existing support")

    items: list[tuple[Node, ...]] = list(pi.constituents)
    items.extend((node,) for node in singles)
    original = len(pi.constituents)
    must_precede: dict[int, set[int]] = {i: set() for i in range(len(items))}
    for i in range(1, original):
        must_precede[i].add(i - 1)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if i < original and j < original:
                continue
            i_first = _precedes_ok(items[i], items[j])
            j_first = _precedes_ok(items[j], items[i])
            if i_first and not j_first:
                must_precede[j].add(i)
            elif j_first and not i_first:
                must_precede[i].add(j)
            elif not i_first and not j_first:
                column = items[j][0][1] if j >= original else items[i][0][1]
                raise ValueError(
                    f"node in column {column} straddles a constituent"
                )

    placed: list[tuple[Node, ...]] = []
    done: set[int] = set()
    while len(done) < len(items):
        ready = [
            i for i in range(len(items))
            if i not in done and must_precede[i] <= done
        ]
        if not ready:
            raise VerificationError("insertion constraints form a cycle")
        pick = min(ready, key=lambda i: items[i])
        placed.append(items[pick])
        done.add(pick)
    result = KPath(pi.diagram, tuple(placed))
    if not is_ordered(result):
        raise VerificationError("inserted family is not ordered")
    return result


def _stu_parts(parts: tuple[int, ...]) -> tuple[int, int, int]:
    """The sorted head (s, t, u) of a composition (x, y, z, 1)."""
    if len(parts) != 4 or parts[3] != 1:
        raise ValueError(
            "row sizes must be three parts followed by a single 1, got "
            f"{parts}"
        )
    s, t, u = sorted(parts[:3], reverse=True)
    return s, t, u


def _length_profile(pi: KPath) -> tuple[int, int, int, int]:
    z = [0, 0, 0, 0]
    for c in pi.constituents:
        if len(c) > 4:
            raise ValueError("constituent longer than four nodes")
        z[len(c) - 1] += 1
    return tuple(z)


def classify_form(pi: KPath, s: int, t: int, u: int) -> FormClass:
    """Classify a full ordered family by its constituent length profile.

    The input must be an ordered s-constituent family covering s+t+u+1
    nodes.  Form A has s-t singletons, t-u pairs, u-1 triples and one
    quadruple; form B has s-t singletons, t-u-1 pairs and u+1 triples.
    Each profile forces t of the constituents to cover 2t+u+1 nodes.
    """
    if pi.k != s or pi.size != s + t + u + 1:
        raise ValueError(
            f"expected {s} constituents covering {s + t + u + 1} nodes, "
            f"got {pi.k} covering {pi.size}"
        )
    if not is_ordered(pi):
        raise ValueError("family is not ordered")
    z = _length_profile(pi)
    if z == (s - t, t - u, u - 1, 1):
        return FormClass.A
    if z == (s - t, t - u - 1, u + 1, 0):
        return FormClass.B
    return FormClass.NEITHER


def _check_core_equations(z: tuple[int, int, int, int], t: int, u: int) -> None:
    """Counting identities every maximal ordered t-subfamily satisfies."""
    z1, z2, z3, z4 = z
    checks = (
        z1 + z2 + z3 + z4 == t,
        z1 + 2 * z2 + 3 * z3 + 4 * z4 == 2 * t + u + 1,
        z2 + 2 * z3 + 3 * z4 == t + u + 1,
        3 * z1 + 2 * z2 + z3 == 2 * t - u - 1,
    )
    if not all(checks):
        raise VerificationError(f"core profile {z} violates the count identities")


def _ordered_cores(
    D: Diagram, length_counts: dict[int, int]
) -> Iterator[tuple[tuple[Node, ...], ...]]:
    """Ordered families with the prescribed multiset of lengths, in
    lexicographic order of their flattened node sequences."""
    wanted = frozenset(k for k, v in length_counts.items() if v > 0)
    chains = sorted(_chains_within(D, D.nodes, wanted))
    total = sum(length_counts.values())

    def extend(
        prefix: list[tuple[Node, ...]],
        used: frozenset[Node],
        counts: dict[int, int],
    ) -> Iterator[tuple[tuple[Node, ...], ...]]:
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for chain in chains:
            if counts[len(chain)] == 0 or used.intersection(chain):
                continue
            if not all(_precedes_ok(c, chain) for c in prefix):
                continue
            counts[len(chain)] -= 1
            prefix.append(chain)
            yield from extend(prefix, used.union(chain), counts)
            prefix.pop()
            counts[len(chain)] += 1

    yield from extend([], frozenset(), dict(length_counts))


def _check_row_distribution(
    pi: KPath, s: int, t: int, u: int, form: FormClass
) -> None:
    """Each constituent length is confined to rows of specific sizes."""
    sizes = pi.diagram.row_composition()
    by_length: dict[int, list[tuple[Node, ...]]] = defaultdict(list)
    for c in pi.constituents:
        by_length[len(c)].append(c)
    if by_length[1]:
        good = s > t and all(
            sizes[a - 1] == s for c in by_length[1] for a, _ in c
        )
        if not good:
            raise VerificationError("singletons stray from the longest rows")
    if by_length[2]:
        good = t > u and all(
            sizes[a - 1] in (s, t) for c in by_length[2] for a, _ in c
        )
        if not good:
            raise VerificationError("pairs stray from the two longest rows")
    touching_last = [
        c for c in by_length[3] if any(a == 4 for a, _ in c)
    ]
    rest = [c for c in by_length[3] if c not in touching_last]
    if not all(a <= 3 for c in rest for a, _ in c):
        raise VerificationError("a triple strays below the third row")
    if form is FormClass.A and touching_last:
        raise VerificationError("form A admits no triple on the fourth row")
    if form is FormClass.B:
        if len(touching_last) != 1:
            raise VerificationError("form B needs one triple on the fourth row")
        others = sorted(
            sizes[a - 1] for a, _ in touching_last[0] if a != 4
        )
        if others != sorted((s, t)):
            raise VerificationError(
                "the fourth-row triple must cross the two longest rows"
            )


def find_form_path(D: Diagram) -> tuple[KPath, FormClass]:
    """A full-support ordered family of one of the two forms.

    Searches for form A before form B, so whenever a form-A family
    exists it is the one returned.  The search builds a maximal ordered
    t-constituent core with no singletons and then inserts the leftover
    nodes one by one; the first hit in lexicographic order wins.
    """
    s, t, u = _stu_parts(D.row_composition())
    if not is_admissible(D):
        raise ValueError("only admissible diagrams carry form families")
    plans = [(FormClass.A, {1: 0, 2: t - u, 3: u - 1, 4: 1})]
    if t > u:
        plans.append((FormClass.B, {1: 0, 2: t - u - 1, 3: u + 1, 4: 0}))
    for form, counts in plans:
        for core in _ordered_cores(D, counts):
            profile = _length_profile(KPath(D, core))
            _check_core_equations(profile, t, u)
            covered = frozenset(n for c in core for n in c)
            try:
                pi = insert_singletons(
                    KPath(D, core), sorted(D.nodes - covered)
                )
            except ValueError:
                continue
            if classify_form(pi, s, t, u) is not form:
                raise VerificationError("extension changed the form profile")
            _check_row_distribution(pi, s, t, u, form)
            return pi, form
    raise VerificationError("admissible diagram yielded no form family")


def straighten(pi: KPath) -> Diagram:
    """Slide each constituent into its own column, keeping rows.

    The family must cover its host diagram.  Constituent j contributes
    nodes (a, j) for each of its rows a; an ordered input makes the row
    filling of the host a standard filling of the result, and a form-A
    input makes the result special.
    """
    if pi.support != pi.diagram.nodes:
        raise ValueError("family must cover the whole diagram")
    return Diagram(
        frozenset(
            (a, j)
            for j, chain in enumerate(pi.constituents, start=1)
            for a, _ in chain
        )
    )
