"""Reduction rules: thresholds, per-rule behavior, and the colored pipeline."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dskernel import (
    Color,
    ColoredGraph,
    DecidedNo,
    GraphError,
    KernelParams,
    Reduced,
    biclique,
    black_count_cap,
    common_neighbor_cap,
    cycle,
    degree_cap,
    find_dominators,
    has_rwb_dominating_set,
    kernelize_i1,
    kernelize_rwb,
    rule1,
    rule2p,
    rule3,
    rule4,
    rule5,
    rule6,
    star,
)
from dskernel.trace import RuleTrace


def all_black_star(leaves):
    return star(leaves)


# -- thresholds ----------------------------------------------------------------


def test_threshold_values():
    assert common_neighbor_cap(1, 3, 1) == 3
    assert common_neighbor_cap(1, 3, 2) == 6
    assert common_neighbor_cap(2, 4, 1) == 5  # j*k^2 + k
    assert degree_cap(2, 2, 1) == 2  # j*k
    assert degree_cap(3, 2, 2) == 10  # j*k^2 + k
    assert degree_cap(3, 3, 2) == 14
    # the black cap includes self-domination: k more than k * degree_cap
    assert black_count_cap(2, 2, 1) == 3
    assert black_count_cap(2, 2, 2) == 10
    assert black_count_cap(3, 3, 1) == 5


@given(st.integers(1, 5), st.integers(1, 6), st.integers(0, 6))
def test_subset_cap_equals_degree_cap_one_level_up(p, j, k):
    assert common_neighbor_cap(p, j, k) == degree_cap(p + 1, j, k)


def test_params_validation():
    with pytest.raises(GraphError):
        KernelParams(3, 2, 1)
    with pytest.raises(GraphError):
        KernelParams(2, 2, -1)
    with pytest.raises(GraphError):
        KernelParams(2, 3, 1, d=1)
    KernelParams(3, 3, 0, d=2)


# -- rule 1 ---------------------------------------------------------------------


def test_rule1_recolors_isolated_black():
    g = ColoredGraph.from_edges(1)
    assert rule1(g) == 1
    assert g.color(0) is Color.RED


def test_rule1_leaves_cycle_untouched():
    g = cycle(5)
    assert rule1(g) == 0
    assert g.black_vertices() == g.vertices()


def test_rule1_targets_black_only():
    g = ColoredGraph.from_edges(3, colors={2: Color.WHITE})
    assert rule1(g) == 2
    assert g.color(0) is Color.RED and g.color(1) is Color.RED
    assert g.color(2) is Color.WHITE


# -- rule 2.p --------------------------------------------------------------------


def test_rule2p_fires_on_oversized_common_neighborhood():
    g = biclique(2, 4)  # cap is j*k = 3 at i=j=3, k=1
    params = KernelParams(3, 3, 1)
    before = g.copy()
    changed = rule2p(g, 1, params)
    assert changed == 1
    assert [g.color(v) for v in (2, 3, 4, 5)] == [Color.WHITE] * 4
    assert g.vertices() == [0, 1, 2, 3, 4, 5, 6, 7]
    for x in (6, 7):
        assert g.color(x) is Color.BLACK
        assert g.neighbors(x) == {0, 1}
    # the rewrite preserves the answer
    assert has_rwb_dominating_set(before, 1) == has_rwb_dominating_set(g, 1)


def test_rule2p_respects_strict_inequality():
    g = biclique(2, 6)  # cap is j*k = 6 at i=j=3, k=2
    assert rule2p(g, 1, KernelParams(3, 3, 2)) == 0


def test_rule2p_boundary_at_p2():
    # at i=j=4, k=1 the p=2 cap is j*k^2 + k = 5
    params = KernelParams(4, 4, 1)
    fires = biclique(2, 6)
    assert rule2p(fires, 1, params) == 0  # reduced for p=1 already
    assert rule2p(fires, 2, params) == 1
    holds = biclique(2, 5)
    assert rule2p(holds, 1, params) == 0
    assert rule2p(holds, 2, params) == 0


def test_rule2p_range_and_budget_errors():
    g = biclique(2, 4)
    with pytest.raises(GraphError):
        rule2p(g, 1, KernelParams(2, 2, 1))
    with pytest.raises(GraphError):
        rule2p(g, 3, KernelParams(4, 4, 1))
    with pytest.raises(GraphError):
        rule2p(g, 1, KernelParams(3, 3, 0))


def test_rule2p_skips_red_vertices():
    g = biclique(2, 4)
    g.set_color(0, Color.RED)
    assert rule2p(g, 1, KernelParams(3, 3, 1)) == 0


# -- rule 3 ----------------------------------------------------------------------


def test_rule3_forces_star_center():
    g = all_black_star(3)
    params = KernelParams(2, 2, 1)  # cap 2
    assert rule3(g, params) == 1
    assert g.color(0) is Color.RED
    assert all(g.color(v) is Color.WHITE for v in (1, 2, 3))
    # the center really is unavoidable for its black neighborhood
    fresh = all_black_star(3)
    assert find_dominators(fresh, (1, 2, 3), 1, forbidden=(0,)) is None


def test_rule3_boundary_not_strictly_above():
    g = all_black_star(2)
    assert rule3(g, KernelParams(2, 2, 1)) == 0


def test_rule3_boundary_at_exact_cap():
    # cap is j*k^2 + k = 14 at i=j=3, k=2
    assert rule3(all_black_star(15), KernelParams(3, 3, 2)) == 1
    assert rule3(all_black_star(14), KernelParams(3, 3, 2)) == 0


def test_rule3_can_create_adjacent_forced_vertices():
    # two adjacent hubs with private leaves both get forced; neither may keep
    # a black neighbor afterwards, but red-red adjacency is legitimate
    g = ColoredGraph.from_edges(8, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (4, 6), (4, 7)])
    assert rule3(g, KernelParams(2, 2, 1)) == 2
    assert g.color(0) is Color.RED and g.color(4) is Color.RED
    for r in (0, 4):
        assert not g.black_neighbors(r)


# -- rule 4 ----------------------------------------------------------------------


def test_rule4_deletes_white_with_single_black_neighbor():
    g = ColoredGraph.from_edges(2, [(0, 1)], colors={0: Color.WHITE})
    assert rule4(g) == 1
    assert not g.has_vertex(0)
    assert g.color(1) is Color.RED  # isolated by the deletion


def test_rule4_keeps_white_with_two_black_neighbors():
    g = ColoredGraph.from_edges(3, [(0, 1), (0, 2)], colors={0: Color.WHITE})
    assert rule4(g) == 0
    assert g.has_vertex(0)


def test_rule4_deletes_white_with_no_black_neighbors():
    g = ColoredGraph.from_edges(2, [(0, 1)], colors={0: Color.WHITE, 1: Color.WHITE})
    assert rule4(g) == 2
    assert g.vertex_count == 0


# -- rule 5 ----------------------------------------------------------------------


def _white_pair_graph():
    # whites 0 and 1 share black neighborhood {2, 3}; pendant blacks 4 and 5
    # keep 2 and 3 from being isolated without subsuming anyone themselves
    return ColoredGraph.from_edges(
        6,
        [(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5)],
        colors={0: Color.WHITE, 1: Color.WHITE},
    )


def test_rule5_identical_whites_delete_higher_id():
    g = _white_pair_graph()
    assert rule5(g) == 1
    assert g.has_vertex(0) and not g.has_vertex(1)


def test_rule5_white_subsumed_by_black():
    g = ColoredGraph.from_edges(
        4, [(0, 1), (0, 2), (3, 1), (3, 2), (1, 2)], colors={0: Color.WHITE}
    )
    assert rule5(g) == 1
    assert not g.has_vertex(0)
    assert g.has_vertex(3)


def test_rule5_incomparable_neighborhoods_survive():
    # no vertex, white or black, covers either white's black neighborhood
    g = ColoredGraph.from_edges(
        5,
        [(0, 2), (0, 3), (1, 3), (1, 4)],
        colors={0: Color.WHITE, 1: Color.WHITE},
    )
    assert rule5(g) == 0
    assert g.has_vertex(0) and g.has_vertex(1)


# -- rule 6 ----------------------------------------------------------------------


def test_rule6_rejects_too_many_reds():
    g = ColoredGraph.from_edges(2, colors={0: Color.RED, 1: Color.RED})
    assert rule6(g, KernelParams(2, 2, 1)) is True


def test_rule6_passes_empty_bounds():
    g = ColoredGraph()
    assert rule6(g, KernelParams(2, 2, 0)) is False


def test_rule6_black_cap_boundary():
    # cap = k * (degree_cap + 1) = 3 at i=j=2, k=1
    three = ColoredGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert rule6(three, KernelParams(2, 2, 1)) is False
    four = ColoredGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert rule6(four, KernelParams(2, 2, 1)) is True


# -- kernelize_rwb ----------------------------------------------------------------


def test_kernelize_cycle_reduces_and_preserves_answer():
    g = cycle(5)
    out = kernelize_rwb(g, KernelParams(2, 2, 2))
    assert isinstance(out, Reduced)
    assert out.budget == 2
    assert has_rwb_dominating_set(out.graph, 2) == has_rwb_dominating_set(g, 2)


def test_kernelize_cycle_budget_one_is_no():
    out = kernelize_rwb(cycle(5), KernelParams(2, 2, 1))
    if isinstance(out, Reduced):
        assert not has_rwb_dominating_set(out.graph, out.budget)
    else:
        assert isinstance(out, DecidedNo)


def test_kernelize_empty_graph():
    out = kernelize_rwb(ColoredGraph(), KernelParams(2, 2, 0))
    assert isinstance(out, Reduced)
    assert out.graph.vertex_count == 0
    assert has_rwb_dominating_set(out.graph, 0)


def test_kernelize_rejects_i1():
    with pytest.raises(GraphError):
        kernelize_rwb(cycle(5), KernelParams(1, 2, 1))


def test_kernelize_kij_precheck():
    square = cycle(4)
    with pytest.raises(GraphError):
        kernelize_rwb(square, KernelParams(2, 2, 1), check_kij=True)
    kernelize_rwb(square, KernelParams(2, 3, 1), check_kij=True)


def test_kernelize_does_not_mutate_input():
    g = star(5)
    snapshot = g.copy()
    kernelize_rwb(g, KernelParams(2, 2, 1), debug_recheck=True)
    assert g == snapshot


def test_trace_replay_reproduces_output():
    g = star(5)
    out = kernelize_rwb(g, KernelParams(2, 2, 1))
    replayed = out.trace.replay(g)
    target = out.graph if isinstance(out, Reduced) else None
    if target is not None:
        assert replayed == target


def test_identical_runs_yield_identical_traces():
    g = biclique(2, 5)
    a = kernelize_rwb(g, KernelParams(3, 3, 1))
    b = kernelize_rwb(g, KernelParams(3, 3, 1))
    assert a.trace.format_lines() == b.trace.format_lines()
    assert isinstance(a, type(b))
    if isinstance(a, Reduced):
        assert a.graph == b.graph


# -- kernelize_i1 -----------------------------------------------------------------


def _near_cubic_13():
    # a 3-regular graph on 13 vertices cannot exist (odd degree sum); use a
    # 13-cycle with six chords, max degree 3
    edges = [(t, (t + 1) % 13) for t in range(13)] + [(t, t + 6) for t in range(6)]
    return ColoredGraph.from_edges(13, edges)


def test_i1_counts_out_large_bounded_degree_graph():
    g = _near_cubic_13()
    out = kernelize_i1(g, 4, 3)
    assert isinstance(out, DecidedNo)
    from dskernel import has_dominating_set

    assert not has_dominating_set(g, 3)


def test_i1_small_instance_is_its_own_kernel():
    g = ColoredGraph.from_edges(2, [(0, 1)])
    out = kernelize_i1(g, 2, 1)
    assert isinstance(out, Reduced)
    assert out.graph == g


def test_i1_empty_graph():
    out = kernelize_i1(ColoredGraph(), 3, 0)
    assert isinstance(out, Reduced)


def test_i1_rejects_high_degree():
    g = ColoredGraph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(GraphError):
        kernelize_i1(g, 2, 1)


# -- rule-level trace fidelity ------------------------------------------------------


def test_rule_traces_replay_for_every_rule():
    cases = []
    g1 = ColoredGraph.from_edges(2)
    cases.append((g1, lambda g, t: rule1(g, t)))
    g2 = biclique(2, 4)
    cases.append((g2, lambda g, t: rule2p(g, 1, KernelParams(3, 3, 1), t)))
    g3 = all_black_star(3)
    cases.append((g3, lambda g, t: rule3(g, KernelParams(2, 2, 1), t)))
    g4 = ColoredGraph.from_edges(2, [(0, 1)], colors={0: Color.WHITE})
    cases.append((g4, lambda g, t: rule4(g, t)))
    g5 = _white_pair_graph()
    cases.append((g5, lambda g, t: rule5(g, t)))
    for original, run in cases:
        work = original.copy()
        trace = RuleTrace()
        run(work, trace)
        assert trace.replay(original) == work
