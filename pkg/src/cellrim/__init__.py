"""Exact combinatorics of right cells in symmetric groups.

The package computes minimal determining sets ("rims") of the prefix-closed
sets attached to Kazhdan-Lusztig right cells of S_n, both by brute-force
enumeration at small degree and by closed-form diagram families, together
with the supporting permutation, tableau, diagram and path machinery.
"""

from __future__ import annotations

from .diagrams import (
    Diagram,
    hat_diagram,
    is_special,
    min_column_diagram,
    psi_append,
    rotate_180,
    w_of_diagram,
    young_diagram,
)
from .families import (
    ColumnOp,
    DeterminingTuple,
    FamilyParams,
    RimReport,
    StuShape,
    apply_column_op,
    calibrate_rs_convention,
    determining_tuple,
    diagram_from_tuple,
    family_diagram,
    family_parameter_sets,
    rim,
    rim_diagrams,
    table_counts,
    verify_rim_family,
    z_ideal,
)
from .paths import (
    FormClass,
    KPath,
    classify_form,
    family_with_lengths,
    find_form_path,
    is_admissible,
    is_ordered,
    straighten,
    subsequence_type,
)
from .permutations import (
    GuardExceeded,
    InversionSet,
    Permutation,
    VerificationError,
    composition_generators,
    coset_decompose,
    from_word,
    induced_rim,
    inversion_set,
    is_prefix,
    parabolic,
    prefix_closure,
    prefix_maximal,
    reduced_word,
    symmetric_group,
)
from .tableaux import (
    StandardYoungTableau,
    compositions_of,
    conjugate,
    insertion_tableau,
    partitions_of,
    recording_tableau,
    right_cell_of,
    rs_pair,
)

__version__ = "0.1.0"

__all__ = [
    "ColumnOp",
    "DeterminingTuple",
    "Diagram",
    "FamilyParams",
    "FormClass",
    "GuardExceeded",
    "InversionSet",
    "KPath",
    "Permutation",
    "RimReport",
    "StandardYoungTableau",
    "StuShape",
    "VerificationError",
    "apply_column_op",
    "calibrate_rs_convention",
    "classify_form",
    "composition_generators",
    "compositions_of",
    "conjugate",
    "coset_decompose",
    "determining_tuple",
    "diagram_from_tuple",
    "family_diagram",
    "family_parameter_sets",
    "family_with_lengths",
    "find_form_path",
    "from_word",
    "hat_diagram",
    "induced_rim",
    "insertion_tableau",
    "inversion_set",
    "is_admissible",
    "is_ordered",
    "is_prefix",
    "is_special",
    "min_column_diagram",
    "parabolic",
    "partitions_of",
    "prefix_closure",
    "prefix_maximal",
    "psi_append",
    "recording_tableau",
    "reduced_word",
    "right_cell_of",
    "rim",
    "rim_diagrams",
    "rotate_180",
    "rs_pair",
    "straighten",
    "subsequence_type",
    "symmetric_group",
    "table_counts",
    "verify_rim_family",
    "w_of_diagram",
    "young_diagram",
    "z_ideal",
]
