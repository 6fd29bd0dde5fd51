"""Tests for path families: ordering, types, forms, and straightening."""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cellrim.diagrams import (
    Diagram,
    DiagramTableau,
    is_special,
    is_standard,
    min_column_diagram,
    psi_append,
    row_filling,
    young_diagram,
)
from cellrim.paths import (
    FormClass,
    KPath,
    classify_form,
    find_form_path,
    insert_singletons,
    is_admissible,
    is_ordered,
    order_equivalent,
    straighten,
    subsequence_type,
)
from cellrim.permutations import (
    VerificationError,
    composition_generators,
    parabolic,
)
from cellrim.tableaux import conjugate, dominates, partitions_of
from fixtures import (
    ADMISSIBLE_NO_CONJUGATE_PATH,
    DIAGRAM_4631,
    FAMILY_M_385,
    FAMILY_N_358,
    PATH_A_4631,
    PATH_A_M_385,
    PATH_A_N_358,
    PATH_B_4631,
    PATH_B_M_385,
    PATH_B_N_358,
    STRAIGHTENED_A_4631,
    box_diagrams,
)

CORPUS = box_diagrams(3, 3)

node_sets = st.frozensets(
    st.tuples(st.integers(1, 4), st.integers(1, 4)), min_size=1, max_size=7
)


def chains_of(nodes: frozenset, length: int) -> list[tuple]:
    """All chains of exactly the given length inside the node set."""
    out: list[tuple] = []

    def grow(chain: list) -> None:
        if len(chain) == length:
            out.append(tuple(chain))
            return
        a, b = chain[-1]
        for v in sorted(nodes):
            if v[0] > a and v[1] >= b:
                chain.append(v)
                grow(chain)
                chain.pop()

    for v in sorted(nodes):
        grow([v])
    return out


def singleton_family(D: Diagram) -> KPath:
    """Every node of D as its own constituent, in sorted order."""
    return KPath(D, tuple((n,) for n in D.sorted_nodes))


def transported_row_filling(pi: KPath) -> DiagramTableau:
    """The host's row filling carried onto the straightened diagram."""
    E = straighten(pi)
    host = row_filling(pi.diagram)
    entry = {}
    for j, chain in enumerate(pi.constituents, start=1):
        for a, b in chain:
            entry[a, j] = host.entry((a, b))
    return DiagramTableau(E, tuple(entry[n] for n in E.sorted_nodes))


class TestKPathValidation:
    def test_accessors(self):
        pi = KPath(DIAGRAM_4631, PATH_A_4631)
        assert pi.k == 6
        assert pi.size == 14
        assert pi.support == DIAGRAM_4631.nodes
        assert pi.lengths() == (1, 4, 3, 1, 3, 2)
        assert pi.path_type() == (4, 3, 3, 2, 1, 1)

    def test_lists_are_coerced(self):
        pi = KPath(young_diagram((2,)), ([(1, 1)], [(1, 2)]))
        assert pi.constituents == (((1, 1),), ((1, 2),))

    def test_empty_constituent_rejected(self):
        with pytest.raises(ValueError, match="non-empty"):
            KPath(young_diagram((2,)), (((1, 1),), ()))

    def test_non_path_rejected(self):
        with pytest.raises(ValueError, match="not a path"):
            KPath(young_diagram((2,)), (((1, 1), (1, 2)),))
        with pytest.raises(ValueError, match="not a path"):
            KPath(young_diagram((1, 1)), (((2, 1), (1, 1)),))

    def test_node_outside_diagram_rejected(self):
        with pytest.raises(ValueError, match="outside"):
            KPath(young_diagram((2,)), (((2, 1),),))

    def test_overlap_rejected(self):
        with pytest.raises(ValueError, match="disjoint"):
            KPath(young_diagram((2,)), (((1, 1),), ((1, 1),)))


class TestIsOrdered:
    def test_fixture_families_are_ordered(self):
        for D, path in (
            (DIAGRAM_4631, PATH_A_4631),
            (DIAGRAM_4631, PATH_B_4631),
            (FAMILY_M_385, PATH_B_M_385),
            (FAMILY_N_358, PATH_B_N_358),
        ):
            assert is_ordered(KPath(D, path))

    def test_full_type_need_not_mean_ordered(self):
        # Each of these families realises the largest possible type yet
        # lists two constituents in an incompatible order.
        for D, path in (
            (FAMILY_M_385, PATH_A_M_385),
            (FAMILY_N_358, PATH_A_N_358),
        ):
            pi = KPath(D, path)
            assert pi.path_type() == conjugate(D.row_composition())
            assert not is_ordered(pi)

    def test_single_constituent_is_ordered(self):
        D = Diagram.from_rows([(1,), (1,)])
        assert is_ordered(KPath(D, (((1, 1), (2, 1)),)))

    def test_same_column_singletons_list_deepest_first(self):
        D = Diagram.from_rows([(1,), (1,)])
        assert is_ordered(KPath(D, (((2, 1),), ((1, 1),))))
        assert not is_ordered(KPath(D, (((1, 1),), ((2, 1),))))


class TestSubsequenceType:
    def test_frozen_small_cases(self):
        assert subsequence_type(young_diagram((4,))) == (1, 1, 1, 1)
        assert subsequence_type(Diagram.from_rows([(1,)] * 4)) == (4,)
        assert subsequence_type(young_diagram((2, 2))) == (2, 2)
        assert subsequence_type(young_diagram((3, 1))) == (2, 1, 1)

    def test_fixture_types(self):
        assert subsequence_type(DIAGRAM_4631) == (4, 3, 3, 2, 1, 1)
        assert subsequence_type(FAMILY_M_385) == (4, 3, 3, 2, 2, 1, 1, 1)
        assert subsequence_type(FAMILY_N_358) == (4, 3, 3, 2, 2, 1, 1, 1)

    def test_young_diagrams_have_conjugate_type(self):
        for n in range(1, 7):
            for shape in partitions_of(n):
                assert subsequence_type(young_diagram(shape)) == conjugate(
                    shape
                )

    def test_agrees_with_backtracking_search(self):
        for D in CORPUS:
            assert subsequence_type(D) == oracles.subsequence_type_by_search(
                D.nodes
            ), D

    def test_is_a_partition_summing_to_size(self):
        for D in CORPUS:
            nu = subsequence_type(D)
            assert sum(nu) == D.size
            assert all(x >= y for x, y in zip(nu, nu[1:]))

    def test_sandwiched_between_column_and_row_bounds(self):
        for D in CORPUS:
            nu = subsequence_type(D)
            cols = tuple(sorted(D.column_lengths(), reverse=True))
            assert dominates(nu, cols)
            assert dominates(conjugate(D.row_composition()), nu)

    @settings(max_examples=60, deadline=None)
    @given(node_sets)
    def test_random_diagrams_match_search(self, nodes):
        D = Diagram(nodes)
        assert subsequence_type(D) == oracles.subsequence_type_by_search(
            D.nodes
        )


class TestAdmissible:
    def test_young_diagrams_admissible(self):
        for n in range(1, 7):
            for shape in partitions_of(n):
                assert is_admissible(young_diagram(shape))

    def test_antichain_pair_not_admissible(self):
        assert not is_admissible(Diagram(frozenset({(1, 2), (2, 1)})))

    def test_special_implies_admissible(self):
        for D in CORPUS:
            if is_special(D):
                assert is_admissible(D), D

    def test_admissible_without_conjugate_profile_family(self):
        # This diagram is admissible, yet no two disjoint chains have
        # sizes exactly matching the conjugate of the row sizes: the
        # best coverings split four plus two nodes as three plus three.
        D = ADMISSIBLE_NO_CONJUGATE_PATH
        assert D.row_composition() == (2, 1, 1, 2)
        assert conjugate(D.row_composition()) == (4, 2)
        assert is_admissible(D)
        pairs_4_2 = [
            c4
            for c4 in chains_of(D.nodes, 4)
            if chains_of(D.nodes - set(c4), 2)
        ]
        assert pairs_4_2 == []
        assert any(
            chains_of(D.nodes - set(c3), 3) for c3 in chains_of(D.nodes, 3)
        )


class TestOrderEquivalent:
    def test_matches_brute_force_canonical_cover(self):
        rng = random.Random(20260816)
        box = [(a, b) for a in range(1, 5) for b in range(1, 5)]
        for _ in range(150):
            D = Diagram(frozenset(rng.sample(box, rng.randint(1, 6))))
            got = order_equivalent(singleton_family(D))
            assert got.constituents == oracles.best_ordered_cover(D.nodes)

    @settings(max_examples=40, deadline=None)
    @given(node_sets)
    def test_result_is_ordered_cover_and_canonical(self, nodes):
        D = Diagram(nodes)
        result = order_equivalent(singleton_family(D))
        assert result.support == D.nodes
        assert is_ordered(result)
        assert order_equivalent(result).constituents == result.constituents

    def test_input_listing_does_not_matter(self):
        D = Diagram(frozenset({(1, 1), (1, 2), (2, 1), (3, 2)}))
        chains = (((1, 1), (2, 1)), ((1, 2), (3, 2)))
        a = order_equivalent(KPath(D, chains))
        b = order_equivalent(KPath(D, chains[::-1]))
        assert a.constituents == b.constituents

    def test_prefers_fewest_then_longest(self):
        # Both nodes fit in one chain, so two singletons merge.
        D = Diagram.from_rows([(1,), (2,)])
        result = order_equivalent(singleton_family(D))
        assert result.lengths() == (2,)

    def test_fixture_family_reorders_to_neither_form(self):
        result = order_equivalent(KPath(DIAGRAM_4631, PATH_B_4631))
        assert result.lengths() == (3, 3, 3, 2, 2, 1)
        assert classify_form(result, 6, 4, 3) is FormClass.NEITHER


class TestInsertSingletons:
    def test_no_extras_returns_same_family(self):
        pi = KPath(DIAGRAM_4631, PATH_B_4631)
        assert insert_singletons(pi, []).constituents == pi.constituents

    def test_forced_positions_reproduce_fixture(self):
        for D, fixture in (
            (FAMILY_M_385, PATH_B_M_385),
            (FAMILY_N_358, PATH_B_N_358),
        ):
            core = tuple(c for c in fixture if len(c) > 1)
            extras = [c[0] for c in fixture if len(c) == 1]
            out = insert_singletons(KPath(D, core), extras)
            assert out.constituents == fixture

    def test_same_column_singletons_insert_deepest_first(self):
        D = Diagram.from_rows([(1, 2), (1, 2)])
        pi = KPath(D, (((1, 1), (2, 1)),))
        out = insert_singletons(pi, [(1, 2), (2, 2)])
        assert out.constituents == (
            ((1, 1), (2, 1)),
            ((2, 2),),
            ((1, 2),),
        )

    def test_straddling_node_is_rejected_by_column(self):
        D = Diagram(frozenset({(1, 1), (2, 1), (3, 1)}))
        pi = KPath(D, (((1, 1), (3, 1)),))
        with pytest.raises(ValueError, match="column 1"):
            insert_singletons(pi, [(2, 1)])

    def test_unordered_input_rejected(self):
        D = Diagram.from_rows([(1, 2)])
        pi = KPath(D, (((1, 2),), ((1, 1),)))
        with pytest.raises(ValueError, match="ordered"):
            insert_singletons(pi, [])

    def test_extras_must_be_new_diagram_nodes(self):
        D = Diagram.from_rows([(1, 2)])
        pi = KPath(D, (((1, 1),),))
        with pytest.raises(ValueError, match="lie in the diagram"):
            insert_singletons(pi, [(5, 5)])
        with pytest.raises(ValueError, match="avoid"):
            insert_singletons(pi, [(1, 1)])


class TestClassifyForm:
    def test_fixture_classifications(self):
        assert classify_form(KPath(DIAGRAM_4631, PATH_A_4631), 6, 4, 3) is (
            FormClass.A
        )
        assert classify_form(KPath(DIAGRAM_4631, PATH_B_4631), 6, 4, 3) is (
            FormClass.B
        )
        assert classify_form(KPath(FAMILY_M_385, PATH_B_M_385), 8, 5, 3) is (
            FormClass.B
        )
        assert classify_form(KPath(FAMILY_N_358, PATH_B_N_358), 8, 5, 3) is (
            FormClass.B
        )

    def test_unordered_family_rejected(self):
        with pytest.raises(ValueError, match="not ordered"):
            classify_form(KPath(FAMILY_M_385, PATH_A_M_385), 8, 5, 3)

    def test_wrong_shape_rejected(self):
        pi = KPath(DIAGRAM_4631, PATH_A_4631)
        with pytest.raises(ValueError, match="expected"):
            classify_form(pi, 5, 4, 3)
        with pytest.raises(ValueError, match="expected"):
            classify_form(pi, 6, 4, 2)

    def test_profile_off_both_forms_is_neither(self):
        result = order_equivalent(KPath(DIAGRAM_4631, PATH_B_4631))
        assert classify_form(result, 6, 4, 3) is FormClass.NEITHER


class TestFindFormPath:
    def test_first_fixture_supports_form_a(self):
        pi, form = find_form_path(DIAGRAM_4631)
        assert form is FormClass.A
        assert pi.support == DIAGRAM_4631.nodes
        assert is_ordered(pi)
        assert pi.lengths() == (1, 2, 3, 4, 3, 1)
        assert classify_form(pi, 6, 4, 3) is FormClass.A

    def test_wider_fixtures_support_only_form_b(self):
        # Families of the largest type exist here (see the ordering
        # tests), but no ordered family has the form-A length profile.
        for D in (FAMILY_M_385, FAMILY_N_358):
            pi, form = find_form_path(D)
            assert form is FormClass.B
            assert pi.support == D.nodes
            assert classify_form(pi, 8, 5, 3) is FormClass.B

    def test_single_column_is_form_a(self):
        D = Diagram.from_rows([(1,)] * 4)
        pi, form = find_form_path(D)
        assert form is FormClass.A
        assert pi.lengths() == (4,)

    def test_inadmissible_rejected(self):
        D = Diagram(frozenset({(1, 2), (2, 1), (3, 1), (4, 1)}))
        assert D.row_composition() == (1, 1, 1, 1)
        assert not is_admissible(D)
        with pytest.raises(ValueError, match="admissible"):
            find_form_path(D)

    def test_wrong_row_profile_rejected(self):
        with pytest.raises(ValueError, match="three parts"):
            find_form_path(young_diagram((2, 2)))
        with pytest.raises(ValueError, match="three parts"):
            find_form_path(young_diagram((3, 2, 1)))

    def test_exhaustive_small_shapes(self):
        # Every admissible minimal-column diagram over the six orderings
        # of (3, 2, 1) with a fourth row of size one supports a form
        # family; a longest first row forces form A.  The number of
        # admissible representatives matches the standard tableau count
        # of the conjugate shape.
        expected = oracles.standard_tableau_count((4, 2, 1))
        for head in itertools.permutations((3, 2, 1)):
            lam = head + (1,)
            admissible_count = 0
            for e in parabolic(composition_generators(lam), 7).reps:
                D = min_column_diagram(e, lam)
                if not is_admissible(D):
                    continue
                admissible_count += 1
                pi, form = find_form_path(D)
                assert pi.support == D.nodes
                assert is_ordered(pi)
                if head[0] in (3, 2):
                    assert form is FormClass.A
                if form is FormClass.A:
                    assert is_special(straighten(pi))
                assert is_standard(transported_row_filling(pi))
            assert admissible_count == expected


class TestStraighten:
    def test_fixture_straightens_to_frozen_diagram(self):
        assert (
            straighten(KPath(DIAGRAM_4631, PATH_A_4631))
            == STRAIGHTENED_A_4631
        )

    def test_young_column_family_is_fixed(self):
        D = young_diagram((3, 2))
        columns = tuple(
            tuple((a, b) for a in range(1, len(col) + 1))
            for b, col in enumerate(D.columns(), start=1)
        )
        assert straighten(KPath(D, columns)) == D

    def test_ordered_family_transports_row_filling_to_standard(self):
        for D, path in (
            (DIAGRAM_4631, PATH_A_4631),
            (DIAGRAM_4631, PATH_B_4631),
            (FAMILY_M_385, PATH_B_M_385),
            (FAMILY_N_358, PATH_B_N_358),
        ):
            assert is_standard(transported_row_filling(KPath(D, path)))

    def test_form_a_straightens_special_but_b_need_not(self):
        assert is_special(straighten(KPath(DIAGRAM_4631, PATH_A_4631)))
        assert not is_special(straighten(KPath(DIAGRAM_4631, PATH_B_4631)))

    def test_partial_family_rejected(self):
        with pytest.raises(ValueError, match="cover"):
            straighten(KPath(DIAGRAM_4631, PATH_A_4631[:3]))


class TestPsiAppend:
    def test_single_column_grows_down(self):
        D = Diagram.from_rows([(1,), (1,)])
        assert psi_append(D) == Diagram.from_rows([(1,)] * 3)

    def test_young_hook_gains_a_row(self):
        assert psi_append(young_diagram((2, 1))) == young_diagram((2, 1, 1))

    def test_appends_one_node_row_keeping_admissibility(self):
        for D in CORPUS:
            if not is_admissible(D):
                continue
            E = psi_append(D)
            assert E.size == D.size + 1
            assert E.row_composition() == D.row_composition() + (1,)
            assert is_admissible(E)

    def test_no_admissible_extension_raises(self):
        with pytest.raises(ValueError, match="no admissible"):
            psi_append(Diagram(frozenset({(1, 2), (2, 1)})))
