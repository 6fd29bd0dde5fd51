"""Right-cell ideals of symmetric groups and their minimal rims.

For a composition of n, the coset representatives e whose product with
the longest block permutation stays in that element's right cell form
a prefix-closed ideal.  The ideal is determined by its prefix-maximal
elements, its rim; each rim element is encoded by a minimal-column
diagram.  This module computes the ideal and rim by enumeration,
builds the closed-form diagram families that describe the rims of
compositions with three leading parts followed by rows of size one,
evaluates the counting formulas for those families, and verifies the
closed forms against enumeration.

Conventions for the closed families, with (s, t, u) the leading parts
in non-increasing order: a sorted head gives the single Young diagram;
the other five arrangements give the F, G, H, M and N families in the
order (s,u,t), (t,s,u), (t,u,s), (u,s,t), (u,t,s).  M and N diagrams
are described by determining tuples over the alphabet 1, 1b, 2, 3, 4
recording their column profiles.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import comb

from .diagrams import (
    Diagram,
    is_special,
    min_column_diagram,
    psi_append,
    rotate_180,
    w_of_diagram,
    young_diagram,
)
from .paths import is_admissible
from .permutations import (
    Permutation,
    VerificationError,
    check_enumeration_guard,
    composition_generators,
    is_prefix,
    parabolic,
    prefix_maximal,
)
from .tableaux import compositions_of, insertion_tableau, recording_tableau


@dataclass(frozen=True, slots=True)
class StuShape:
    """Shape data for compositions with three leading parts then ones.

    s, t and u are the three leading parts in non-increasing order,
    order is their actual arrangement in the composition, and
    trailing_ones counts the remaining parts, each equal to one.

    >>> StuShape.from_composition((1, 3, 2, 1, 1))
    StuShape(s=3, t=2, u=1, order=(1, 3, 2), trailing_ones=2)
    """

    s: int
    t: int
    u: int
    order: tuple[int, int, int]
    trailing_ones: int = 1

    def __post_init__(self) -> None:
        if not self.s >= self.t >= self.u >= 1:
            raise ValueError(f"need s >= t >= u >= 1, got {self}")
        if tuple(sorted(self.order, reverse=True)) != (self.s, self.t, self.u):
            raise ValueError(f"order {self.order} does not arrange {(self.s, self.t, self.u)}")
        if self.trailing_ones < 1:
            raise ValueError("at least one trailing part is required")

    @property
    def composition(self) -> tuple[int, ...]:
        return self.order + (1,) * self.trailing_ones

    @classmethod
    def from_composition(cls, parts: tuple[int, ...]) -> StuShape:
        parts = tuple(parts)
        if len(parts) < 4 or any(p != 1 for p in parts[3:]):
            raise ValueError(
                "expected three leading parts followed by ones, got "
                f"{parts}"
            )
        s, t, u = sorted(parts[:3], reverse=True)
        return cls(s, t, u, parts[:3], len(parts) - 3)


def _shape_or_none(parts: tuple[int, ...]) -> StuShape | None:
    try:
        return StuShape.from_composition(parts)
    except ValueError:
        return None


# Rows occupied by a column of each profile entry.  A full column is a
# 4; a column meeting the top three rows is a 3; length-two columns sit
# on rows 2 and 3; single nodes sit on row 2 (entry 1) or row 3 (1b).
COLUMN_ROWS = {
    "1": (2,),
    "1b": (3,),
    "2": (2, 3),
    "3": (1, 2, 3),
    "4": (1, 2, 3, 4),
}


@dataclass(frozen=True, slots=True)
class DeterminingTuple:
    """Column profile of a four-row diagram with one full column.

    Entries run left to right over the alphabet 1, 1b, 2, 3, 4; there
    is exactly one 4 and it comes before every 3.  Such a profile
    reconstructs its diagram uniquely.

    >>> DeterminingTuple(("2", "4", "3")).u
    2
    """

    entries: tuple[str, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        bad = [e for e in entries if e not in COLUMN_ROWS]
        if bad:
            raise ValueError(f"unknown column entries: {bad}")
        if entries.count("4") != 1:
            raise ValueError("exactly one full column is required")
        if "3" in entries and entries.index("3") < entries.index("4"):
            raise ValueError("the full column must precede every triple column")

    @property
    def u(self) -> int:
        """Number of columns reaching the first row."""
        return self.entries.count("3") + 1


def diagram_from_tuple(alpha: DeterminingTuple) -> Diagram:
    """The unique four-row diagram with the given column profile.

    >>> diagram_from_tuple(DeterminingTuple(("4",))).sorted_nodes
    ((1, 1), (2, 1), (3, 1), (4, 1))
    """
    return Diagram(
        frozenset(
            (a, j)
            for j, entry in enumerate(alpha.entries, start=1)
            for a in COLUMN_ROWS[entry]
        )
    )


def determining_tuple(D: Diagram, shape: StuShape) -> DeterminingTuple:
    """Read the column profile off a diagram, validating its pattern.

    The shape must put its smallest part first with t > u and a single
    trailing one; the diagram must have that row profile, every column
    must match one of the five recognised profiles, and the profile
    counts must fit the shape.
    """
    s, t, u = shape.s, shape.t, shape.u
    if shape.trailing_ones != 1:
        raise ValueError("column profiles are defined for four-row diagrams")
    if t <= u or shape.order[0] != u:
        raise ValueError(
            f"shape {shape.order} does not lead with its smallest part"
        )
    if D.row_composition() != shape.composition:
        raise ValueError(
            f"row sizes {D.row_composition()} do not match {shape.composition}"
        )
    by_rows = {rows: entry for entry, rows in COLUMN_ROWS.items()}
    entries = []
    for rows in D.columns():
        entry = by_rows.get(rows)
        if entry is None:
            raise ValueError(f"column on rows {rows} fits no profile entry")
        entries.append(entry)
    alpha = DeterminingTuple(tuple(entries))
    if alpha.u != u:
        raise ValueError(
            f"{alpha.u - 1} triple columns do not match first row size {u}"
        )
    return alpha


class ColumnOp(enum.Enum):
    """Local column moves preserving the determining-tuple pattern.

    C1 through C4 swap adjacent columns whose entries read (1,2),
    (3,2), (2,1b) or (3,1b); C5 splits a length-two column into a row-3
    single followed by a row-2 single.
    """

    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"


_SWAP_PATTERNS = {
    ColumnOp.C1: ("1", "2"),
    ColumnOp.C2: ("3", "2"),
    ColumnOp.C3: ("2", "1b"),
    ColumnOp.C4: ("3", "1b"),
}


def apply_column_op(
    E: Diagram, op: ColumnOp, j: int, shape: StuShape
) -> Diagram:
    """Apply one column move at column j (1-based), returning the moved
    diagram.  The tuple pattern at j must match the operation; the word
    of the input diagram is a prefix of the word of the output.
    """
    alpha = determining_tuple(E, shape)
    entries = list(alpha.entries)
    if op is ColumnOp.C5:
        if not 1 <= j <= len(entries) or entries[j - 1] != "2":
            raise ValueError(f"column {j} does not carry a 2")
        entries[j - 1 : j] = ["1b", "1"]
    else:
        want = _SWAP_PATTERNS[op]
        if not 1 <= j < len(entries) or tuple(entries[j - 1 : j + 1]) != want:
            raise ValueError(
                f"columns {j}, {j + 1} do not read {want} as {op.value} needs"
            )
        entries[j - 1], entries[j] = entries[j], entries[j - 1]
    return diagram_from_tuple(DeterminingTuple(tuple(entries)))


@dataclass(frozen=True, slots=True)
class FamilyParams:
    """Parameters selecting one member of a closed diagram family.

    variant is one of F, G, H, M, N.  columns holds the free column set
    (C for F and G, the fixed companions of v for H, the triple-column
    positions for M); v is the fourth-row column for H; counts holds
    the block sizes for M as (eps, eta, theta, zeta, psi) and for N as
    (eta, eps, theta, phi, zeta).
    """

    variant: str
    columns: frozenset[int] = frozenset()
    v: int | None = None
    counts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "columns", frozenset(self.columns))
        object.__setattr__(self, "counts", tuple(self.counts))
        if self.variant not in ("F", "G", "H", "M", "N"):
            raise ValueError(f"unknown family variant {self.variant!r}")


def _family_f(params: FamilyParams, s: int, t: int, u: int) -> Diagram:
    C = params.columns
    if not C or not C.issubset(range(1, t + 1)) or len(C) != u:
        raise ValueError(f"need a {u}-subset of the first {t} columns, got {sorted(C)}")
    v = min(C)
    return Diagram.from_rows(
        [range(1, s + 1), sorted(C), range(1, t + 1), (v,)]
    )


def _family_g(params: FamilyParams, s: int, t: int, u: int) -> Diagram:
    C = params.columns
    top = s - t + u
    if not C or not C.issubset(range(1, top + 1)) or len(C) != u:
        raise ValueError(f"need a {u}-subset of the first {top} columns, got {sorted(C)}")
    v = min(C)
    return Diagram.from_rows(
        [
            sorted(C) + list(range(top + 1, s + 1)),
            range(1, s + 1),
            sorted(C),
            (v,),
        ]
    )


def _family_h(params: FamilyParams, s: int, t: int, u: int) -> Diagram:
    companions = params.columns
    v = params.v
    if v is None or v < 1:
        raise ValueError("a positive fourth-row column v is required")
    if len(companions) != u - 1 or not companions.issubset(
        range(s - t + 2, s + 1)
    ):
        raise ValueError(
            f"need a {u - 1}-subset of the last {t - 1} columns, got {sorted(companions)}"
        )
    if companions:
        if v >= min(companions):
            raise ValueError(f"v = {v} must be less than {min(companions)}")
    elif v > s:
        raise ValueError(f"v = {v} exceeds the column count {s}")
    v_top = v if v < s - t + 1 else s - t + 1
    return Diagram.from_rows(
        [
            [v_top] + list(range(s - t + 2, s + 1)),
            sorted({v} | companions),
            range(1, s + 1),
            (v,),
        ]
    )


def _family_m(params: FamilyParams, s: int, t: int, u: int) -> Diagram:
    if len(params.counts) != 5:
        raise ValueError("five block sizes (eps, eta, theta, zeta, psi) required")
    eps, eta, theta, zeta, psi = params.counts
    triples = params.columns
    if min(params.counts) < 0:
        raise ValueError(f"negative block size in {params.counts}")
    if s != eps + eta + 1 + zeta + psi:
        raise ValueError(f"block sizes {params.counts} do not fit s = {s}")
    if t != eps + theta + zeta + u:
        raise ValueError(f"block sizes {params.counts} do not fit t = {t}")
    if psi < u - 1:
        raise ValueError(f"tail {psi} cannot hold {u - 1} triple columns")
    if eta < theta:
        raise ValueError(f"need eta >= theta, got {eta} < {theta}")
    m = s + theta
    if len(triples) != u - 1 or not triples.issubset(range(m - psi + 1, m + 1)):
        raise ValueError(
            f"need a {u - 1}-subset of the last {psi} columns, got {sorted(triples)}"
        )
    full = eps + eta + 1
    return Diagram.from_rows(
        [
            sorted({full} | triples),
            list(range(1, full + 1)) + list(range(full + theta + 1, m + 1)),
            sorted(
                set(range(1, eps + 1))
                | set(range(full, full + theta + zeta + 1))
                | triples
            ),
            (full,),
        ]
    )


def _family_n(params: FamilyParams, s: int, t: int, u: int) -> Diagram:
    if len(params.counts) != 5:
        raise ValueError("five block sizes (eta, eps, theta, phi, zeta) required")
    eta, eps, theta, phi, zeta = params.counts
    if min(params.counts) < 0:
        raise ValueError(f"negative block size in {params.counts}")
    if s != eta + eps + phi + zeta + u:
        raise ValueError(f"block sizes {params.counts} do not fit s = {s}")
    if t != eps + theta + zeta + u:
        raise ValueError(f"block sizes {params.counts} do not fit t = {t}")
    if phi < theta:
        raise ValueError(f"need phi >= theta, got {phi} < {theta}")
    m = s + theta
    full = eta + eps + theta + 1
    return Diagram.from_rows(
        [
            [full] + list(range(m - u + 2, m + 1)),
            list(range(eta + 1, full + 1)) + list(range(m - u - zeta + 2, m + 1)),
            list(range(1, eta + eps + 1)) + list(range(full, m + 1)),
            (full,),
        ]
    )


_BUILDERS = {
    "F": _family_f,
    "G": _family_g,
    "H": _family_h,
    "M": _family_m,
    "N": _family_n,
}

_VARIANT_ORDERS = {
    "F": lambda s, t, u: (s, u, t),
    "G": lambda s, t, u: (t, s, u),
    "H": lambda s, t, u: (t, u, s),
    "M": lambda s, t, u: (u, s, t),
    "N": lambda s, t, u: (u, t, s),
}


def family_diagram(params: FamilyParams, shape: StuShape) -> Diagram:
    """Build one member of a closed family for a four-row shape.

    The shape's arrangement must match the variant, and the parameters
    must satisfy the variant's side conditions.
    """
    if shape.trailing_ones != 1:
        raise ValueError("families are built on four-row shapes")
    s, t, u = shape.s, shape.t, shape.u
    if shape.order != _VARIANT_ORDERS[params.variant](s, t, u):
        raise ValueError(
            f"variant {params.variant} does not serve arrangement {shape.order}"
        )
    D = _BUILDERS[params.variant](params, s, t, u)
    if D.row_composition() != shape.composition:
        raise VerificationError(
            f"built rows {D.row_composition()}, wanted {shape.composition}"
        )
    return D


def _f_params(s: int, t: int, u: int) -> tuple[FamilyParams, ...]:
    return tuple(
        FamilyParams("F", columns=frozenset(C))
        for C in itertools.combinations(range(1, t + 1), u)
    )


def _g_params(s: int, t: int, u: int) -> tuple[FamilyParams, ...]:
    return tuple(
        FamilyParams("G", columns=frozenset(C))
        for C in itertools.combinations(range(1, s - t + u + 1), u)
    )


def _h_params(s: int, t: int, u: int) -> tuple[FamilyParams, ...]:
    if u == 1:
        return tuple(FamilyParams("H", v=v) for v in range(1, s + 1))
    out = []
    for companions in itertools.combinations(range(s - t + 2, s + 1), u - 1):
        for v in range(1, min(companions)):
            out.append(FamilyParams("H", columns=frozenset(companions), v=v))
    return tuple(out)


def _m_params(s: int, t: int, u: int) -> tuple[FamilyParams, ...]:
    out = []
    for theta in range(t - u + 1):
        for zeta in range(t - u - theta + 1):
            eps = t - u - theta - zeta
            etas = (theta,) if zeta > 0 else range(theta, s - eps - u + 1)
            for eta in etas:
                psi = s - eps - eta - 1 - zeta
                if psi < u - 1:
                    continue
                m = s + theta
                for triples in itertools.combinations(
                    range(m - psi + 1, m + 1), u - 1
                ):
                    out.append(
                        FamilyParams(
                            "M",
                            columns=frozenset(triples),
                            counts=(eps, eta, theta, zeta, psi),
                        )
                    )
    return tuple(out)


def _n_params(s: int, t: int, u: int) -> tuple[FamilyParams, ...]:
    out = []
    for theta in range(t - u + 1):
        for extra in range(s - t + 1):
            eta = s - t - extra
            phi = theta + extra
            eps_choices = (0,) if extra > 0 else range(t - u - theta + 1)
            for eps in eps_choices:
                zeta = t - u - theta - eps
                out.append(FamilyParams("N", counts=(eta, eps, theta, phi, zeta)))
    return tuple(out)


_PARAM_ENUMERATORS = {
    "F": _f_params,
    "G": _g_params,
    "H": _h_params,
    "M": _m_params,
    "N": _n_params,
}


def family_parameter_sets(shape: StuShape) -> tuple[FamilyParams, ...]:
    """All canonical parameter choices for the shape's family.

    The sorted arrangement has no parameters (its rim is the single
    Young diagram).  The M and N lists carry the extra duplicate-free
    constraints: for M, zeta = 0 unless eta = theta; for N, eps = 0
    unless phi = theta.  Ties between arrangements are resolved in the
    order F, G, H, M, N; the constructions coincide on ties.
    """
    s, t, u = shape.s, shape.t, shape.u
    order = shape.order
    if order == (s, t, u):
        return ()
    for variant, arrangement in _VARIANT_ORDERS.items():
        if order == arrangement(s, t, u):
            return _PARAM_ENUMERATORS[variant](s, t, u)
    raise AssertionError(f"unreachable arrangement {order}")


def table_counts(shape: StuShape) -> tuple[int, int]:
    """Closed-form sizes (special count, non-special count) of the rim.

    Non-special members exist only when the composition leads with its
    smallest part.

    >>> table_counts(StuShape(8, 5, 3, (3, 8, 5)))
    (40, 50)
    """
    s, t, u = shape.s, shape.t, shape.u
    v = s - t + u
    order = shape.order
    if order == (s, t, u):
        return 1, 0
    if order == (s, u, t):
        return comb(t, u), 0
    if order == (t, s, u):
        return comb(v, u), 0
    if order == (t, u, s):
        return (s - t) * comb(t - 1, u - 1) + comb(t, u), 0
    if order == (u, s, t):
        return (
            (t - u) * comb(v - 1, u - 1) + comb(v, u),
            comb(t - u, 2) * comb(v - 1, u - 1) + (t - u) * comb(v, u),
        )
    return s - u + 1, (t - u) * (s - t) + comb(t - u + 1, 2)


def z_ideal(
    lam: tuple[int, ...], limit: int | None = None
) -> frozenset[Permutation]:
    """The prefix-closed ideal of coset representatives for a composition.

    Membership is computed two independent ways, which must agree: the
    recording tableau of the product with the longest block permutation
    matches that permutation's own, and the minimal-column diagram of
    the representative is admissible.

    >>> sorted(e.images for e in z_ideal((2, 1)))
    [(1, 2, 3), (1, 3, 2)]
    """
    lam = tuple(lam)
    n = sum(lam)
    check_enumeration_guard(n, limit)
    data = parabolic(composition_generators(lam), n)
    # recording_tableau is the pinned right-cell invariant; see the
    # calibration tests and RIGHT_CELL_COMPONENT in the tableaux module.
    target = recording_tableau(data.longest)
    by_cell = frozenset(
        e for e in data.reps if recording_tableau(data.longest * e) == target
    )
    by_diagram = frozenset(
        e for e in data.reps if is_admissible(min_column_diagram(e, lam))
    )
    if by_cell != by_diagram:
        raise VerificationError(
            f"cell route and diagram route disagree for {lam}: "
            f"{len(by_cell)} vs {len(by_diagram)} members"
        )
    return by_cell


def rim(
    lam: tuple[int, ...], limit: int | None = None
) -> frozenset[Permutation]:
    """The prefix-maximal elements of the ideal of a composition.

    >>> [y.images for y in rim((3,))]
    [(1, 2, 3)]
    """
    return frozenset(prefix_maximal(z_ideal(lam, limit)))


def _closed_rim(shape: StuShape) -> frozenset[Diagram]:
    base = StuShape(shape.s, shape.t, shape.u, shape.order, 1)
    if shape.order == (shape.s, shape.t, shape.u):
        diagrams = {young_diagram(base.composition)}
    else:
        diagrams = {
            family_diagram(p, base) for p in family_parameter_sets(base)
        }
    for _ in range(shape.trailing_ones - 1):
        diagrams = {psi_append(D) for D in diagrams}
    return frozenset(diagrams)


def rim_diagrams(
    lam: tuple[int, ...], limit: int | None = None
) -> tuple[frozenset[Diagram], frozenset[Diagram]]:
    """The rim of a composition as diagrams, with its special subset.

    Compositions with three leading parts followed by ones (or the
    reverse) use the closed families, extended one row at a time past
    four rows and rotated for the reversed arrangement.  Any other
    composition falls back to enumeration under the guard.

    >>> E, E_s = rim_diagrams((3, 2, 1, 1))
    >>> len(E), len(E_s)
    (1, 1)
    """
    lam = tuple(lam)
    shape = _shape_or_none(lam)
    if shape is not None:
        diagrams = _closed_rim(shape)
    else:
        reversed_shape = _shape_or_none(tuple(reversed(lam)))
        if reversed_shape is not None:
            diagrams = frozenset(
                rotate_180(D) for D in _closed_rim(reversed_shape)
            )
        else:
            diagrams = frozenset(
                min_column_diagram(y, lam) for y in rim(lam, limit)
            )
    specials = frozenset(D for D in diagrams if is_special(D))
    return diagrams, specials


@dataclass(frozen=True, slots=True)
class RimReport:
    """Outcome of checking a closed-form rim against enumeration."""

    composition: tuple[int, ...]
    rim_size: int
    special_size: int
    ideal_size: int
    expected_counts: tuple[int, int]


def verify_rim_family(
    lam: tuple[int, ...], limit: int | None = None
) -> RimReport:
    """Check a closed-form rim against the enumerated ideal.

    Verifies that the closed-form diagram words form an antichain under
    the prefix order, that they all belong to the ideal, that every
    ideal element is a prefix of one of them, and that the counts match
    the table formulas.  Any failure raises; success returns a report.
    """
    lam = tuple(lam)
    shape = _shape_or_none(lam) or _shape_or_none(tuple(reversed(lam)))
    if shape is None:
        raise ValueError(f"{lam} is outside the closed-form families")
    diagrams, specials = rim_diagrams(lam)
    words = {D: w_of_diagram(D) for D in diagrams}
    for w1, w2 in itertools.permutations(words.values(), 2):
        if is_prefix(w1, w2):
            raise VerificationError(
                f"rim words are not an antichain for {lam}"
            )
    ideal = z_ideal(lam, limit)
    for D, w in words.items():
        if w not in ideal:
            raise VerificationError(f"rim word {w.images} is outside the ideal")
        if min_column_diagram(w, lam) != D:
            raise VerificationError(
                f"rim word {w.images} does not rebuild its diagram"
            )
    for e in ideal:
        if not any(is_prefix(e, w) for w in words.values()):
            raise VerificationError(
                f"ideal element {e.images} reaches no rim word"
            )
    expected = table_counts(shape)
    got = (len(specials), len(diagrams) - len(specials))
    if got != expected:
        raise VerificationError(
            f"rim counts {got} differ from the table values {expected}"
        )
    return RimReport(
        composition=lam,
        rim_size=len(diagrams),
        special_size=len(specials),
        ideal_size=len(ideal),
        expected_counts=expected,
    )


def calibrate_rs_convention(max_n: int = 5) -> frozenset[str]:
    """Which insertion components detect right-cell membership.

    For every composition of every degree up to max_n, compares the
    tableau-equality membership test against the admissibility of the
    minimal-column diagram, for both components of the correspondence.
    Returns the names of the components that agree in every case; the
    package's convention is sound exactly when the result is the
    frozenset holding "recording".
    """
    candidates = {
        "insertion": insertion_tableau,
        "recording": recording_tableau,
    }
    surviving = set(candidates)
    for n in range(1, max_n + 1):
        for lam in compositions_of(n):
            data = parabolic(composition_generators(lam), n)
            want = frozenset(
                e
                for e in data.reps
                if is_admissible(min_column_diagram(e, lam))
            )
            for name in tuple(surviving):
                tableau = candidates[name]
                target = tableau(data.longest)
                got = frozenset(
                    e
                    for e in data.reps
                    if tableau(data.longest * e) == target
                )
                if got != want:
                    surviving.discard(name)
    return frozenset(surviving)
