"""Plain/colored conversions and the end-to-end plain kernelizer."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dskernel import (
    Color,
    ColoredGraph,
    DecidedNo,
    GraphError,
    KernelParams,
    Reduced,
    colorize,
    cycle,
    find_dominating_set,
    has_dominating_set,
    has_rwb_dominating_set,
    kernelize_plain,
    kernelize_rwb,
    contains_kij,
    petersen,
    star,
    uncolor,
)
from strategies import plain_graphs


# -- colorize -------------------------------------------------------------------


def test_colorize_empty():
    assert colorize(ColoredGraph()).vertex_count == 0


def test_colorize_preserves_structure():
    g = cycle(5)
    h = colorize(g)
    assert h == g
    assert h.is_plain()


@settings(max_examples=40)
@given(plain_graphs(max_n=9), st.integers(0, 3))
def test_colorized_answer_equals_plain_answer(g, k):
    assert has_rwb_dominating_set(colorize(g), k) == has_dominating_set(g, k)


# -- uncolor --------------------------------------------------------------------


def test_uncolor_single_white_example():
    h = ColoredGraph.from_edges(2, [(0, 1)], colors={0: Color.WHITE})
    plain, budget = uncolor(h, 1)
    # one satellite plus k + |W| + 1 = 3 pendants
    assert plain.vertex_count == 6
    assert budget == 2
    assert has_rwb_dominating_set(h, 1)
    assert has_dominating_set(plain, budget, max_vertices=25)
    witness = find_dominating_set(plain, budget, max_vertices=25)
    assert witness is not None and len(witness) <= 2


def test_uncolor_without_whites_keeps_graph():
    h = cycle(5)
    plain, budget = uncolor(h, 2)
    assert plain == h
    assert budget == 2


def test_uncolor_charges_for_forced_vertices():
    h = ColoredGraph.from_edges(3, [(1, 2)], colors={0: Color.RED})
    plain, budget = uncolor(h, 1)
    assert budget == 0
    assert plain.vertices() == [1, 2]


def test_uncolor_rejects_red_with_black_neighbor():
    h = ColoredGraph.from_edges(2, [(0, 1)], colors={0: Color.RED})
    with pytest.raises(GraphError):
        uncolor(h, 1)


def test_uncolor_vertex_accounting():
    for k in (1, 2, 3):
        out = kernelize_rwb(star(6), KernelParams(2, 3, k))
        assert isinstance(out, Reduced)
        h = out.graph
        whites = len(h.white_vertices())
        plain, _budget = uncolor(h, k)
        grown = plain.vertex_count - (h.vertex_count - len(h.red_vertices()))
        assert grown == (k + whites + 2) * whites


def test_uncolor_preserves_biclique_freeness():
    # a reduced instance with surviving whites: two whites over black pairs
    h = ColoredGraph.from_edges(
        6,
        [(0, 2), (0, 3), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5)],
        colors={0: Color.WHITE, 1: Color.WHITE},
    )
    assert contains_kij(h, 2, 3) is None
    plain, _ = uncolor(h, 2)
    assert contains_kij(plain, 2, 3) is None


def test_pendant_forces_satellite_choice():
    # any minimum solution of the uncolored graph picks the satellite, never
    # more than one vertex per white gadget
    h = ColoredGraph.from_edges(2, [(0, 1)], colors={0: Color.WHITE})
    plain, budget = uncolor(h, 1)
    satellite = 2  # first fresh id after vertices 0, 1
    witness = find_dominating_set(plain, budget, max_vertices=25)
    assert satellite in witness


# -- kernelize_plain ---------------------------------------------------------------


def test_petersen_budget_three_is_yes():
    out = kernelize_plain(petersen(), KernelParams(2, 2, 3))
    assert isinstance(out, Reduced)
    assert has_dominating_set(out.graph, out.budget, max_vertices=500)


def test_petersen_budget_two_is_no():
    out = kernelize_plain(petersen(), KernelParams(2, 2, 2))
    if isinstance(out, Reduced):
        assert not has_dominating_set(out.graph, out.budget, max_vertices=500)
    else:
        assert isinstance(out, DecidedNo)


def test_star_with_wider_biclique_bound():
    g = star(6)  # contains K_{1,6} but no K_{2,3}
    out = kernelize_plain(g, KernelParams(2, 3, 1))
    assert isinstance(out, Reduced)
    assert has_dominating_set(out.graph, out.budget, max_vertices=500)


def test_forced_vertex_cost_is_charged_end_to_end():
    # isolated vertex + disjoint edge: one pick is forced, so k=1 is a NO
    g = ColoredGraph.from_edges(3, [(1, 2)])
    assert not has_dominating_set(g, 1)
    out = kernelize_plain(g, KernelParams(2, 2, 1))
    if isinstance(out, Reduced):
        assert not has_dominating_set(out.graph, out.budget, max_vertices=500)


def test_plain_requires_uncolored_input():
    g = ColoredGraph.from_edges(2, [(0, 1)], colors={0: Color.WHITE})
    with pytest.raises(GraphError):
        kernelize_plain(g, KernelParams(2, 2, 1))


def test_i1_route():
    g = ColoredGraph.from_edges(2, [(0, 1)])
    out = kernelize_plain(g, KernelParams(1, 2, 1))
    assert isinstance(out, Reduced)
    assert out.graph == g and out.budget == 1


@settings(max_examples=30)
@given(st.integers(0, 2**32), st.integers(0, 3))
def test_end_to_end_equivalence_on_random_forests(seed, k):
    from dskernel import degenerate_graph

    g = degenerate_graph(10, 1, seed)
    out = kernelize_plain(g, KernelParams(2, 2, k))
    truth = has_dominating_set(g, k)
    if isinstance(out, DecidedNo):
        assert not truth
    else:
        assert has_dominating_set(out.graph, out.budget, max_vertices=500) == truth
