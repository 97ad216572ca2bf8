"""Fast rule-2 search and the end-to-end kernelizer for d-degenerate inputs.

A d-degenerate graph has no K_{d+1,d+1} subgraph, so the generic pipeline
applies with i = j = d + 1.  The expensive part, searching for vertex sets
with oversized common black neighborhoods, is replaced by a scan along a
degeneracy ordering: the earliest vertex of any qualifying (set, neighborhood)
pair must come from the neighborhood side, since set members have more than d
neighbors, and the set then lies inside that vertex's forward neighborhood of
size at most d.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Color, ColoredGraph, GraphError, common_black_neighbors, degeneracy_ordering
from .rules import (
    DecidedNo,
    KernelOutcome,
    KernelParams,
    Reduced,
    Hook,
    _fire_common_neighbor_rule,
    assert_reduced,
    common_neighbor_cap,
    rule1,
    rule3,
    rule4,
    rule5,
    rule6,
)
from .trace import RuleTrace, TraceEntry


def _first_fast_target(
    g: ColoredGraph, subset_size: int, cap: int
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """First qualifying (set, common black neighborhood) pair along a
    degeneracy ordering of the red-free part of the graph."""
    alive = [v for v in g.vertices() if g.color(v) is not Color.RED]
    ordering = degeneracy_ordering(g, restrict=alive)
    position = {v: t for t, v in enumerate(ordering.order)}
    for v in ordering.order:
        if g.color(v) is not Color.BLACK:
            continue
        forward = sorted(
            u for u in g.neighbors(v) if u in position and position[u] > position[v]
        )
        if len(forward) < subset_size:
            continue
        for u_set in combinations(forward, subset_size):
            blacks = common_black_neighbors(g, u_set)
            if len(blacks) > cap:
                return u_set, tuple(sorted(blacks))
    return None


def rule2p_fast(
    g: ColoredGraph,
    p: int,
    d: int,
    k: int,
    trace: RuleTrace | None = None,
    hook: Hook | None = None,
) -> int:
    """Rule 2.p with i = j = d + 1, searched via the degeneracy ordering.

    The ordering is recomputed after every firing: gadget insertion and
    recoloring invalidate forward neighborhoods.
    """
    if not 1 <= p <= d - 1:
        raise GraphError(f"rule 2.{p} is undefined for d={d}")
    if k == 0:
        raise GraphError("rule 2 does not terminate with budget 0")
    subset_size = d - p + 1
    cap = common_neighbor_cap(p, d + 1, k)
    rule_id = f"2.{p}"
    fired = 0
    while (target := _first_fast_target(g, subset_size, cap)) is not None:
        u_set, blacks = target
        if hook:
            hook("candidate", g, rule=rule_id, u_set=u_set, black_set=blacks)
        _fire_common_neighbor_rule(g, u_set, blacks, rule_id, trace, delete_whitened=False)
        if hook:
            hook("fired", g, rule=rule_id)
        fired += 1
    return fired


def kernelize_degenerate(
    g: ColoredGraph,
    d: int,
    k: int,
    *,
    debug_recheck: bool = False,
    hook: Hook | None = None,
) -> KernelOutcome:
    """Kernelize a d-degenerate colored instance with i = j = d + 1.

    The input's degeneracy is verified up front; a graph that peels worse
    than d is rejected with the violating ordering position named.
    """
    if d < 1:
        raise GraphError(f"need d >= 1, got d={d}")
    params = KernelParams(i=d + 1, j=d + 1, k=k, d=d)
    ordering = degeneracy_ordering(g)
    if ordering.degeneracy > d:
        for t, fwd in enumerate(ordering.forward_degrees(g)):
            if fwd > d:
                raise GraphError(
                    f"graph is not {d}-degenerate: ordering position {t} "
                    f"(vertex {ordering.order[t]}) has {fwd} later neighbors"
                )
    work = g.copy()
    trace = RuleTrace()
    rule1(work, trace, hook)
    if k > 0:
        for p in range(1, d):
            rule2p_fast(work, p, d, k, trace, hook)
    rule3(work, params, trace, hook)
    rule4(work, trace, hook)
    rule5(work, trace, hook)
    if debug_recheck:
        assert_reduced(work, params)
    if rule6(work, params, trace):
        return DecidedNo(trace)
    return Reduced(work, k, trace)
