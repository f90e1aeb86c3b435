from __future__ import annotations

from itertools import combinations

import pytest

from contractia import (
    PreconditionError,
    bit,
    build_graph,
    constructive_search,
    delta_threshold,
    extend_by_exchange,
    extend_once,
    find_k_contractible,
    hypotheses_satisfied,
    is_contractible,
    mask_of,
    pendant_pair_stats,
    select_common_neighbor,
    step_from_maximal,
    vertex_connectivity,
)
from contractia.decomposition import Part
from contractia.search import (
    SelectionConditionError,
    SearchHypothesisError,
    TAG_BASE_ORACLE,
    TAG_CASE_CYCLE,
    TAG_CASE_PENDANT4,
    TAG_CASE_PENDANT5,
    TAG_EXTEND_ONCE,
    UnreachablePendantCaseError,
)
from contractia.generators import complete_bipartite, icosahedron

from bruteforce import bf_is_contractible


def k(n):
    return build_graph(n, combinations(range(n), 2))


def join_all(base_edges, left_count, right):
    return base_edges + [(i, j) for i in range(left_count) for j in right]


def cycle_joined_to_path(m=5):
    # m-cycle 0..m-1 fully joined to the 4-path m..m+3
    w = list(range(m, m + 4))
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(w[0], w[1]), (w[1], w[2]), (w[2], w[3])]
    return build_graph(m + 4, join_all(edges, m, w)), mask_of(w)


def theta_joined_to_path(branches=(2, 2, 2)):
    edges = []
    nxt = 2
    interiors = []
    for length in branches:
        prev = 0
        inner = []
        for _ in range(length):
            edges.append((prev, nxt))
            inner.append(nxt)
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
        interiors.append(inner)
    w = list(range(nxt, nxt + 4))
    edges += [(w[0], w[1]), (w[1], w[2]), (w[2], w[3])]
    g = build_graph(nxt + 4, join_all(edges, nxt, w))
    return g, mask_of(w), interiors


class TestDeltaThreshold:
    @pytest.mark.parametrize("k_val,expected", [(5, 5), (6, 6), (7, 7), (8, 7), (11, 9)])
    def test_values(self, k_val, expected):
        assert delta_threshold(k_val) == expected

    def test_small_k_rejected(self):
        with pytest.raises(PreconditionError):
            delta_threshold(4)


class TestSelectCommonNeighbor:
    def test_no_forbidden_vertices_takes_smallest_candidate(self):
        g, w = cycle_joined_to_path()
        trace = select_common_neighbor(g, w, 1, 2, 0, 3)
        assert trace.candidates == w          # full join: every W vertex qualifies
        assert trace.forbidden == 0
        assert trace.path_neighbors == 0
        assert trace.chosen == 5              # smallest id in W
        assert trace.result == mask_of([1, 2, 6, 7, 8])
        assert is_contractible(g, trace.result)

    def test_empty_candidate_set_rejected(self):
        # v3 = 0 has no joins into W, so the common candidate set is empty
        edges = [(i, (i + 1) % 5) for i in range(5)] + [(5, 6), (6, 7), (7, 8)]
        edges += [(i, j) for i in range(1, 5) for j in (5, 6, 7, 8)]
        g = build_graph(9, edges)
        with pytest.raises(SelectionConditionError):
            select_common_neighbor(g, mask_of([5, 6, 7, 8]), 1, 2, 0, 3)

    def test_route_vertices_bounded_by_forbidden(self):
        # drop the join edges of one W vertex so it becomes forbidden
        m = 5
        w_ids = [5, 6, 7, 8]
        edges = [(i, (i + 1) % m) for i in range(m)]
        edges += [(5, 6), (6, 7), (7, 8)]
        edges += [(i, j) for i in range(m) for j in w_ids if j != 8 or i in (0, 3)]
        g = build_graph(9, edges)
        w = mask_of(w_ids)
        # quad (1, 2, 0, 3): vertex 8 has no edge to {1, 2} -> forbidden
        trace = select_common_neighbor(g, w, 1, 2, 0, 3)
        assert trace.forbidden == mask_of([8])
        assert trace.path_neighbors.bit_count() <= 1
        assert not trace.path_neighbors & bit(trace.chosen)
        assert is_contractible(g, trace.result)

    def test_distinctness_enforced(self):
        g, w = cycle_joined_to_path()
        with pytest.raises(PreconditionError):
            select_common_neighbor(g, w, 1, 1, 0, 3)


class TestExtendByExchange:
    def test_reference_instance(self):
        g, w = cycle_joined_to_path()
        result = extend_by_exchange(g, w, 1, 2, 0, 3)
        assert result == mask_of([1, 2, 6, 7, 8])
        assert result.bit_count() == w.bit_count() + 1

    def test_remainder_degree_condition_enforced(self):
        g, w, interiors = theta_joined_to_path((3, 2, 2))
        # vertex 0 is a boundary vertex of remainder degree 3
        with pytest.raises(PreconditionError):
            extend_by_exchange(g, w, interiors[0][0], interiors[0][1], 0, interiors[1][0])


class TestStepFromMaximal:
    def test_cycle_case(self):
        g, w = cycle_joined_to_path()
        assert extend_once(g, w) is None
        step = step_from_maximal(g, w, cross_check=True)
        assert step.case == TAG_CASE_CYCLE
        assert step.found == mask_of([1, 2, 6, 7, 8])
        assert is_contractible(g, step.found)

    def test_cycle_case_wraps_on_4_cycle(self):
        g, w = cycle_joined_to_path(m=4)
        assert extend_once(g, w) is None
        step = step_from_maximal(g, w, cross_check=True)
        assert step.case == TAG_CASE_CYCLE
        assert is_contractible(g, step.found)

    def test_long_pendant_case(self):
        g, w, _ = theta_joined_to_path((3, 2, 2))
        assert vertex_connectivity(g) >= 3
        assert is_contractible(g, w) and extend_once(g, w) is None
        step = step_from_maximal(g, w, cross_check=True)
        assert step.case == TAG_CASE_PENDANT5
        assert is_contractible(g, step.found)

    def test_short_pendant_case(self):
        g, w, _ = theta_joined_to_path((2, 2, 2))
        assert extend_once(g, w) is None
        step = step_from_maximal(g, w, cross_check=True)
        assert step.case == TAG_CASE_PENDANT4
        assert is_contractible(g, step.found)

    def test_tiny_remainder_rejected(self):
        g = k(7)
        w = mask_of([0, 1, 2, 3])
        with pytest.raises(SearchHypothesisError):
            step_from_maximal(g, w)

    def test_unreachable_case_diagnostic(self):
        # sparse matching into W defeats the cardinality condition for every
        # pendant pair; the degree hypotheses are deliberately violated
        theta_edges = [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)]
        edges = theta_edges + [(8, 9), (9, 10), (10, 11)]
        edges += [(2, 8), (3, 9), (4, 10), (5, 11), (6, 8), (7, 9)]
        edges += [(0, 10), (1, 11), (0, 8), (1, 9)]
        g = build_graph(12, edges)
        w = mask_of([8, 9, 10, 11])
        assert vertex_connectivity(g) >= 3
        assert is_contractible(g, w) and extend_once(g, w) is None
        with pytest.raises(UnreachablePendantCaseError) as err:
            step_from_maximal(g, w)
        stats = err.value.stats
        assert not err.value.hypotheses_held
        assert stats.k == 5 and stats.c == 0
        assert stats.weighted_total <= 2 * stats.k - 2
        assert (stats.a_common, stats.a_only_1, stats.a_only_2) == (0, 1, 1)
        assert (stats.b_common, stats.b_only_1, stats.b_only_2) == (0, 1, 1)


class TestPendantPairStats:
    def _pendant_pair(self, g, w):
        from contractia import delete_set, decompose

        h, rel = delete_set(g, w)
        parts = [
            Part(
                vertices=rel.old_mask(p.vertices),
                boundary=rel.old_mask(p.boundary),
                interior=rel.old_mask(p.interior),
                is_cycle=p.is_cycle,
                is_pendant=p.is_pendant,
            )
            for p in decompose(h).parts
            if p.is_pendant
        ]
        return parts[0], parts[1]

    def test_identical_neighborhoods(self):
        g, w, _ = theta_joined_to_path((2, 2, 2))
        a, b = self._pendant_pair(g, w)
        stats = pendant_pair_stats(g, w, a, b)
        assert stats.a_common == 4 and stats.a_only_1 == stats.a_only_2 == 0
        assert stats.b_common == 4 and stats.b_only_1 == stats.b_only_2 == 0
        assert stats.degree_bounds_hold()

    def test_disjoint_neighborhoods(self):
        theta_edges = [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)]
        edges = theta_edges + [(8, 9), (9, 10), (10, 11)]
        edges += [(2, 8), (3, 9), (4, 10), (5, 11), (6, 8), (7, 9)]
        edges += [(0, 10), (1, 11), (0, 8), (1, 9)]
        g = build_graph(12, edges)
        w = mask_of([8, 9, 10, 11])
        a, b = self._pendant_pair(g, w)
        stats = pendant_pair_stats(g, w, a, b)
        assert stats.a_common == 0
        assert stats.a_only_1 == 1 and stats.a_only_2 == 1

    def test_rejects_non_pendant_parts(self):
        g, w, _ = theta_joined_to_path((2, 2, 2))
        a, b = self._pendant_pair(g, w)
        bad = Part(a.vertices, a.boundary, a.interior, a.is_cycle, is_pendant=False)
        with pytest.raises(PreconditionError):
            pendant_pair_stats(g, w, bad, b)


class TestFindKContractible:
    def test_k55_constructive(self):
        g = complete_bipartite(5, 5)
        res = find_k_contractible(g, 5, check=True)
        assert res is not None
        assert res.found.bit_count() == 5
        assert is_contractible(g, res.found)
        assert bf_is_contractible(g, res.found)
        assert res.case_tags() == [TAG_BASE_ORACLE, TAG_EXTEND_ONCE]
        assert res.fallback_reason is None

    def test_icosahedron(self):
        g = icosahedron()
        res = find_k_contractible(g, 5, check=True)
        assert res is not None and is_contractible(g, res.found)

    def test_k34_negative(self):
        assert find_k_contractible(complete_bipartite(3, 4), 4) is None

    def test_small_k_uses_oracle(self):
        res = find_k_contractible(k(6), 2)
        assert res is not None
        assert res.case_tags() == ["fallback-oracle"]
        assert res.fallback_reason is None  # hypotheses off by design, not an error

    def test_requires_3_connected(self):
        g = build_graph(5, [(i, (i + 1) % 5) for i in range(5)])
        with pytest.raises(PreconditionError):
            find_k_contractible(g, 2)

    def test_k_validated(self):
        with pytest.raises(PreconditionError):
            find_k_contractible(k(6), 0)

    def test_deterministic(self):
        g = complete_bipartite(5, 6)
        assert find_k_contractible(g, 6) == find_k_contractible(g, 6)

    def test_levels_monotone(self):
        g = k(12)
        res = find_k_contractible(g, 8, check=True)
        assert [lv.k for lv in res.levels] == [4, 5, 6, 7, 8]
        for lv in res.levels:
            assert lv.set_after.bit_count() == lv.k
            assert is_contractible(g, lv.set_after)

    def test_constructive_entry_point(self):
        res = constructive_search(complete_bipartite(5, 5), 5)
        assert res is not None and res.found.bit_count() == 5


def test_hypotheses_predicate():
    assert hypotheses_satisfied(complete_bipartite(5, 5), 5)
    assert not hypotheses_satisfied(complete_bipartite(3, 4), 5)   # degree too low
    assert not hypotheses_satisfied(k(7), 5)                       # too few vertices
    assert not hypotheses_satisfied(k(12), 4)                      # k below range
