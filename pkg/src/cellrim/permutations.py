"""Permutations of {1, .., n} acting on the right, with inversion bitmasks.

Conventions used throughout the package:

- Points and generator indices are 1-based.  ``x(k)`` is the image of the
  point ``k`` under ``x``, and ``x.images[k - 1] == x(k)``.
- Products compose left to right: ``(x * y)(k) == y(x(k))``.
- ``simple(i, n)`` is the basic transposition swapping ``i`` and ``i + 1``,
  for ``1 <= i <= n - 1``.  A word ``[i1, ..., il]`` spells the product
  ``s_i1 * s_i2 * ... * s_il``.
- The inversion set of ``x`` is ``{(i, j) : i < j and x(i) > x(j)}``.  It is
  stored as a bitmask over all pairs ``(1,2), (1,3), ..., (n-1,n)`` listed in
  lexicographic order, so subset tests between inversion sets are single
  integer operations.
- ``p`` is a *prefix* of ``x`` when some reduced word of ``x`` starts with a
  reduced word of ``p``; equivalently, when the inversion set of ``p`` is
  contained in the inversion set of ``x``.  Prefix order is the right weak
  order on the group.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import cache
from typing import Iterable, Iterator

DEFAULT_MAX_DEGREE = 9


class GuardExceeded(RuntimeError):
    """A group-wide enumeration was requested above the configured bound."""


class VerificationError(RuntimeError):
    """A cross-check between two independent computation routes failed."""


def enumeration_limit(explicit: int | None = None) -> int:
    """The active bound on group-wide enumeration degree.

    Precedence: explicit argument, then the CELLRIM_MAX_N environment
    variable, then the package default.
    """
    if explicit is not None:
        return explicit
    env = os.environ.get("CELLRIM_MAX_N")
    return int(env) if env else DEFAULT_MAX_DEGREE


def check_enumeration_guard(n: int, explicit: int | None = None) -> None:
    limit = enumeration_limit(explicit)
    if n > limit:
        raise GuardExceeded(
            f"degree {n} exceeds the enumeration bound {limit}; raise it via "
            "an explicit limit argument or the CELLRIM_MAX_N environment "
            "variable if the run time is acceptable"
        )


@cache
def positive_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """All pairs (i, j) with 1 <= i < j <= n, in lexicographic order.

    >>> positive_pairs(3)
    ((1, 2), (1, 3), (2, 3))
    """
    return tuple((i, j) for i in range(1, n) for j in range(i + 1, n + 1))


@cache
def _pair_bits(n: int) -> dict[tuple[int, int], int]:
    return {pair: 1 << k for k, pair in enumerate(positive_pairs(n))}


@dataclass(frozen=True, slots=True)
class InversionSet:
    """A set of pairs (i, j), i < j, of points of S_n, stored as a bitmask.

    Equality and subset tests require equal degrees.
    """

    degree: int
    mask: int

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> InversionSet:
        bits = _pair_bits(n)
        mask = 0
        for pair in pairs:
            mask |= bits[tuple(pair)]
        return cls(n, mask)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """The pairs in lexicographic order.

        >>> InversionSet.from_pairs(3, [(2, 3), (1, 2)]).pairs()
        ((1, 2), (2, 3))
        """
        return tuple(
            pair
            for k, pair in enumerate(positive_pairs(self.degree))
            if self.mask >> k & 1
        )

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return bool(self.mask & _pair_bits(self.degree).get(tuple(pair), 0))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def _check(self, other: InversionSet) -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")

    def issubset(self, other: InversionSet) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: InversionSet) -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def union(self, other: InversionSet) -> InversionSet:
        self._check(other)
        return InversionSet(self.degree, self.mask | other.mask)

    def difference(self, other: InversionSet) -> InversionSet:
        self._check(other)
        return InversionSet(self.degree, self.mask & ~other.mask)

    def acted_by(self, x: Permutation) -> InversionSet:
        """Apply x to both members of every pair, reordering increasingly.

        >>> InversionSet.from_pairs(3, [(2, 3)]).acted_by(simple(1, 3)).pairs()
        ((1, 3),)
        """
        if x.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {x.degree}")
        moved = []
        for i, j in self.pairs():
            a, b = x(i), x(j)
            moved.append((a, b) if a < b else (b, a))
        return InversionSet.from_pairs(self.degree, moved)


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of {1, .., n} in one-line notation.

    >>> x = Permutation((2, 3, 1))
    >>> x(1), x(3)
    (2, 1)
    >>> x.length
    2
    >>> (x * x).images
    (3, 1, 2)
    """

    images: tuple[int, ...]
    mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        images = tuple(self.images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {images!r}")
        mask = 0
        for k, (i, j) in enumerate(positive_pairs(n)):
            if images[i - 1] > images[j - 1]:
                mask |= 1 << k
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "mask", mask)

    def __repr__(self) -> str:
        return f"Permutation({self.images!r})"

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def length(self) -> int:
        """Coxeter length: the number of inversions."""
        return self.mask.bit_count()

    @property
    def is_identity(self) -> bool:
        return self.mask == 0

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical ordering key: by length, then one-line notation."""
        return (self.length, self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for k, v in enumerate(self.images):
            inv[v - 1] = k + 1
        return Permutation(tuple(inv))

    def inversions(self) -> InversionSet:
        return InversionSet(self.degree, self.mask)

    def right_descents(self) -> tuple[int, ...]:
        """Generator indices i with length(x * s_i) < length(x)."""
        position = {v: k for k, v in enumerate(self.images)}
        return tuple(
            i for i in range(1, self.degree) if position[i] > position[i + 1]
        )

    def left_descents(self) -> tuple[int, ...]:
        """Generator indices i with length(s_i * x) < length(x)."""
        return tuple(
            i for i in range(1, self.degree) if self.images[i - 1] > self.images[i]
        )

    def embedded(self, m: int) -> Permutation:
        """The same permutation inside S_m, fixing the new points.

        >>> Permutation((2, 1)).embedded(4).images
        (2, 1, 3, 4)
        """
        if m < self.degree:
            raise ValueError(f"cannot embed degree {self.degree} into S_{m}")
        return Permutation(self.images + tuple(range(self.degree + 1, m + 1)))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


@cache
def simple(i: int, n: int) -> Permutation:
    """The basic transposition (i, i+1) in S_n."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for S_{n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def from_word(n: int, word: Iterable[int]) -> Permutation:
    """The product of the basic transpositions named by the word.

    >>> from_word(3, [2, 1]).images
    (2, 3, 1)
    """
    x = identity(n)
    for i in word:
        x = x * simple(i, n)
    return x


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation, the longest element of S_n."""
    return Permutation(tuple(range(n, 0, -1)))


def symmetric_group(n: int) -> Iterator[Permutation]:
    """All of S_n, in lexicographic order of one-line notation."""
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def inversion_set(x: Permutation) -> InversionSet:
    """The inversion set of x as an InversionSet.

    >>> inversion_set(from_word(3, [1, 2])).pairs()
    ((1, 2), (1, 3))
    """
    return x.inversions()


def is_prefix(candidate: Permutation, x: Permutation) -> bool:
    """Whether candidate is a prefix of x in the right weak order.

    >>> is_prefix(simple(2, 3), from_word(3, [2, 1]))
    True
    >>> is_prefix(simple(2, 3), from_word(3, [1, 2]))
    False
    """
    if candidate.degree != x.degree:
        raise ValueError(f"degree mismatch: {candidate.degree} != {x.degree}")
    return candidate.mask & ~x.mask == 0


def reduced_word(x: Permutation) -> tuple[int, ...]:
    """The lexicographically smallest reduced word for x.

    Greedy: the first letter of any reduced word must be a left descent, so
    repeatedly peel off the smallest one.

    >>> reduced_word(from_word(3, [2, 1]))
    (2, 1)
    >>> reduced_word(longest_element(3))
    (1, 2, 1)
    """
    images = list(x.images)
    word = []
    while True:
        for i in range(len(images) - 1):
            if images[i] > images[i + 1]:
                word.append(i + 1)
                images[i], images[i + 1] = images[i + 1], images[i]
                break
        else:
            return tuple(word)


def prefix_closure(elements: Iterable[Permutation]) -> set[Permutation]:
    """All prefixes of all the given permutations.

    >>> sorted(x.images for x in prefix_closure([from_word(3, [2, 1])]))
    [(1, 2, 3), (1, 3, 2), (2, 3, 1)]
    """
    closure: set[Permutation] = set()
    stack = list(elements)
    while stack:
        x = stack.pop()
        if x in closure:
            continue
        closure.add(x)
        for i in x.right_descents():
            stack.append(x * simple(i, x.degree))
    return closure


def prefix_maximal(elements: Iterable[Permutation]) -> set[Permutation]:
    """The elements that are not proper prefixes of another element."""
    pool = set(elements)
    return {
        x
        for x in pool
        if not any(x is not y and x != y and is_prefix(x, y) for y in pool)
    }


def composition_generators(parts: tuple[int, ...]) -> frozenset[int]:
    """Generator indices fixing the blocks of the composition.

    These are all indices except the partial sums of the parts: the Young
    subgroup they generate permutes each block {1..p1}, {p1+1..p1+p2}, ...
    within itself.

    >>> sorted(composition_generators((2, 1)))
    [1]
    >>> sorted(composition_generators((1, 1, 1)))
    []
    """
    n = sum(parts)
    cuts = set(itertools.accumulate(parts))
    return frozenset(i for i in range(1, n) if i not in cuts)


def generator_blocks(gens: frozenset[int], n: int) -> tuple[tuple[int, ...], ...]:
    """The maximal intervals of {1..n} connected by the given generators.

    >>> generator_blocks(frozenset({1, 3}), 4)
    ((1, 2), (3, 4))
    """
    blocks = []
    start = 1
    for i in range(1, n + 1):
        if i == n or i not in gens:
            blocks.append(tuple(range(start, i + 1)))
            start = i + 1
    return tuple(blocks)


def same_block_pairs(gens: frozenset[int], n: int) -> InversionSet:
    """All pairs (i, j) with i and j in the same generator block."""
    pairs = []
    for block in generator_blocks(gens, n):
        pairs.extend(itertools.combinations(block, 2))
    return InversionSet.from_pairs(n, pairs)


def in_young_subgroup(x: Permutation, gens: frozenset[int]) -> bool:
    """Whether x maps every generator block of S_n to itself."""
    return all(
        set(x(k) for k in block) == set(block)
        for block in generator_blocks(gens, x.degree)
    )


def is_coset_rep(x: Permutation, gens: frozenset[int]) -> bool:
    """Whether x is a distinguished right coset representative.

    Holds exactly when x increases on every generator block, equivalently
    when x is the shortest element of its coset under the Young subgroup.
    """
    return all(x(i) < x(i + 1) for i in gens)


@dataclass(frozen=True)
class ParabolicData:
    """A Young subgroup of S_n together with its right coset data.

    Attributes:
        gens: the generator indices of the subgroup.
        degree: the ambient n.
        longest: the longest element of the subgroup (blockwise reversal).
        longest_rep: the unique longest distinguished coset representative.
        reps: all distinguished representatives, sorted by length then
            one-line notation.  Every representative is a prefix of
            longest_rep, and conversely.
    """

    gens: frozenset[int]
    degree: int
    longest: Permutation
    longest_rep: Permutation
    reps: tuple[Permutation, ...]


@cache
def parabolic(gens: frozenset[int], n: int) -> ParabolicData:
    """Coset data for the Young subgroup generated by the given indices.

    >>> data = parabolic(frozenset({1}), 3)
    >>> data.longest_rep.images
    (2, 3, 1)
    >>> [x.images for x in data.reps]
    [(1, 2, 3), (1, 3, 2), (2, 3, 1)]
    """
    gens = frozenset(gens)
    if not all(1 <= i <= n - 1 for i in gens):
        raise ValueError(f"generator indices {sorted(gens)} out of range for S_{n}")
    blocks = generator_blocks(gens, n)
    longest_images = []
    for block in blocks:
        longest_images.extend(reversed(block))
    longest = Permutation(tuple(longest_images))
    longest_rep = longest * longest_element(n)

    # Breadth-first prefix expansion toward longest_rep: grow each rep by a
    # right multiplication that stays below longest_rep in the weak order.
    reps = {identity(n)}
    frontier = [identity(n)]
    top = longest_rep.mask
    while frontier:
        fresh = []
        for x in frontier:
            for i in range(1, n):
                y = x * simple(i, n)
                if y.length > x.length and y.mask & ~top == 0 and y not in reps:
                    reps.add(y)
                    fresh.append(y)
        frontier = fresh
    return ParabolicData(
        gens=gens,
        degree=n,
        longest=longest,
        longest_rep=longest_rep,
        reps=tuple(sorted(reps, key=lambda x: x.sort_key)),
    )


def coset_decompose(
    x: Permutation, gens: frozenset[int]
) -> tuple[Permutation, Permutation]:
    """Split x as u * d with u in the Young subgroup and d a coset rep.

    On each generator block, d takes the images of x in increasing order;
    u then rearranges the block internally.  Lengths add up:
    length(x) == length(u) + length(d).

    >>> u, d = coset_decompose(Permutation((3, 1, 2)), frozenset({1}))
    >>> u.images, d.images
    ((2, 1, 3), (1, 3, 2))
    """
    n = x.degree
    d_images = [0] * n
    for block in generator_blocks(frozenset(gens), n):
        for k, v in zip(block, sorted(x(k) for k in block)):
            d_images[k - 1] = v
    d = Permutation(tuple(d_images))
    u = x * d.inverse()
    return u, d


def induced_rim(rim: Iterable[Permutation], gens: frozenset[int]) -> set[Permutation]:
    """Transport a rim inside a Young subgroup to the full group.

    Given the set of prefix-maximal elements of a prefix-closed subset of
    the Young subgroup, multiplying every element by the longest coset
    representative yields the prefix-maximal elements of the corresponding
    prefix-closed subset of S_n.

    >>> sorted(x.images for x in induced_rim([identity(3)], frozenset({1})))
    [(2, 3, 1)]
    """
    rim = set(rim)
    if not rim:
        return set()
    n = next(iter(rim)).degree
    gens = frozenset(gens)
    for x in rim:
        if not in_young_subgroup(x, gens):
            raise ValueError(f"{x!r} is not in the Young subgroup")
    top = parabolic(gens, n).longest_rep
    return {x * top for x in rim}
