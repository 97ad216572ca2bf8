"""Reduction rules and the kernelizer for colored dominating-set instances.

The kernelizer shrinks a colored instance (red vertices forced, white already
dominated, black still to dominate) on a graph with no K_{i,j} subgraph to an
equivalent instance whose size depends only on i, j, and the budget k, or
answers NO outright.  Rules are applied exhaustively in a fixed order; each
rule leaves earlier rules at their fixpoint, so one forward pass suffices.

All rules scan vertices (and vertex subsets, lexicographically) in ascending
id order and fire on the first match, which makes runs and traces
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .graph import Color, ColoredGraph, GraphError, common_black_neighbors, contains_kij
from .trace import RuleTrace, TraceEntry

Hook = Callable[..., None]


@dataclass(frozen=True)
class KernelParams:
    """Problem parameters: forbidden biclique sides i <= j and budget k.

    ``d`` is set only on the degenerate fast path, where i = j = d + 1.
    """

    i: int
    j: int
    k: int
    d: int | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.i <= self.j:
            raise GraphError(f"need j >= i >= 1, got i={self.i}, j={self.j}")
        if self.k < 0:
            raise GraphError(f"budget must be non-negative, got k={self.k}")
        if self.d is not None and (self.i != self.d + 1 or self.j != self.d + 1):
            raise GraphError(
                f"degenerate parameters require i = j = d+1, got i={self.i}, "
                f"j={self.j}, d={self.d}"
            )


def common_neighbor_cap(p: int, j: int, k: int) -> int:
    """Most common black neighbors an (i-p)-set may keep: j*k^p + k^(p-1) + ... + k."""
    if p < 1:
        raise GraphError(f"need p >= 1, got p={p}")
    return j * k**p + sum(k**t for t in range(1, p))


def degree_cap(i: int, j: int, k: int) -> int:
    """Most black neighbors any single non-red vertex may keep."""
    return common_neighbor_cap(i - 1, j, k)


def black_count_cap(i: int, j: int, k: int) -> int:
    """Most black vertices a YES instance can retain after full reduction.

    A budget of k dominates at most k * degree_cap(i, j, k) black vertices
    through edges plus k more as members of the chosen set itself, hence the
    k * (cap + 1) form.
    """
    return k * (degree_cap(i, j, k) + 1)


@dataclass(frozen=True)
class DecidedNo:
    trace: RuleTrace


@dataclass(frozen=True)
class Reduced:
    graph: ColoredGraph
    budget: int
    trace: RuleTrace


KernelOutcome = DecidedNo | Reduced


# -- individual rules ------------------------------------------------------


def rule1(g: ColoredGraph, trace: RuleTrace | None = None, hook: Hook | None = None) -> int:
    """Recolor every isolated black vertex red (it must join any solution)."""
    count = 0
    for v in g.black_vertices():
        if g.degree(v) == 0:
            g.set_color(v, Color.RED)
            if trace is not None:
                trace.append(TraceEntry("1", read=(v,), recolored=((v, "B", "R"),)))
            if hook:
                hook("fired", g, rule="1")
            count += 1
    return count


def _first_common_neighbor_target(
    g: ColoredGraph, subset_size: int, cap: int
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    pool = [v for v in g.vertices() if g.color(v) is not Color.RED]
    for u_set in combinations(pool, subset_size):
        blacks = common_black_neighbors(g, u_set)
        if len(blacks) > cap:
            return u_set, tuple(sorted(blacks))
    return None


def _fire_common_neighbor_rule(
    g: ColoredGraph,
    u_set: tuple[int, ...],
    blacks: tuple[int, ...],
    rule_id: str,
    trace: RuleTrace | None,
    delete_whitened: bool,
) -> None:
    """The three firing steps: neutralize the common neighborhood, then attach
    fresh black gadget vertices to the whole of ``u_set`` so any small solution
    still has to pick one of its members."""
    recolored: tuple[tuple[int, str, str], ...] = ()
    deleted: tuple[int, ...] = ()
    if delete_whitened:
        for b in blacks:
            g.delete_vertex(b)
        deleted = tuple(blacks)
    else:
        for b in blacks:
            g.set_color(b, Color.WHITE)
        recolored = tuple((b, "B", "W") for b in blacks)
    added = []
    for _ in range(len(u_set)):
        x = g.add_vertex(Color.BLACK)
        for u in u_set:
            g.add_edge(x, u)
        added.append((x, "B", tuple(u_set)))
    if trace is not None:
        trace.append(
            TraceEntry(
                rule_id,
                read=tuple(u_set),
                recolored=recolored,
                deleted=deleted,
                added=tuple(added),
            )
        )


def rule2p(
    g: ColoredGraph,
    p: int,
    params: KernelParams,
    trace: RuleTrace | None = None,
    hook: Hook | None = None,
) -> int:
    """Collapse oversized common black neighborhoods of (i-p)-sets of non-red
    vertices: the neighborhood turns white and a fresh gadget pins the set."""
    i, j, k = params.i, params.j, params.k
    if i < 3 or not 1 <= p <= i - 2:
        raise GraphError(f"rule 2.{p} is undefined for i={i}")
    if k == 0:
        # Firing adds gadget vertices that immediately re-qualify the same set
        # when the cap is 0, so exhaustive application never terminates.
        # Budget-0 instances are decided by rules 1/3/6 alone; callers skip
        # rule 2 entirely in that case.
        raise GraphError("rule 2 does not terminate with budget 0")
    size = i - p
    cap = common_neighbor_cap(p, j, k)
    rule_id = f"2.{p}"
    fired = 0
    while (target := _first_common_neighbor_target(g, size, cap)) is not None:
        u_set, blacks = target
        if hook:
            hook("candidate", g, rule=rule_id, u_set=u_set, black_set=blacks)
        _fire_common_neighbor_rule(g, u_set, blacks, rule_id, trace, delete_whitened=False)
        if hook:
            hook("fired", g, rule=rule_id)
        fired += 1
    return fired


def rule3(
    g: ColoredGraph,
    params: KernelParams,
    trace: RuleTrace | None = None,
    hook: Hook | None = None,
) -> int:
    """Force any vertex with an oversized black neighborhood into the solution:
    recolor it red and its black neighbors white.

    Firings only shrink other vertices' black neighborhoods and add nothing,
    so a single ascending pass with fresh condition checks is exhaustive.
    """
    cap = degree_cap(params.i, params.j, params.k)
    fired = 0
    for u in g.vertices():
        if g.color(u) is Color.RED:
            continue
        blacks = sorted(g.black_neighbors(u))
        if len(blacks) <= cap:
            continue
        if hook:
            hook("candidate", g, rule="3", vertex=u, black_set=tuple(blacks))
        old = g.color(u).value
        g.set_color(u, Color.RED)
        recolored = [(u, old, "R")]
        for b in blacks:
            g.set_color(b, Color.WHITE)
            recolored.append((b, "B", "W"))
        if trace is not None:
            trace.append(TraceEntry("3", read=(u,), recolored=tuple(recolored)))
        if hook:
            hook("fired", g, rule="3")
        fired += 1
    return fired


def _delete_and_cleanup(
    g: ColoredGraph,
    victim: int,
    rule_id: str,
    read: tuple[int, ...],
    trace: RuleTrace | None,
    hook: Hook | None,
) -> None:
    if trace is not None:
        trace.append(TraceEntry(rule_id, read=read, deleted=(victim,)))
    g.delete_vertex(victim)
    rule1(g, trace, hook)  # the deletion may isolate black vertices
    if hook:
        hook("fired", g, rule=rule_id)


def rule4(g: ColoredGraph, trace: RuleTrace | None = None, hook: Hook | None = None) -> int:
    """Delete white vertices with at most one black neighbor (a single black
    neighbor dominates at least as much).

    A deletion here can only isolate blacks whose sole neighbor was the
    deleted white, so no surviving white's black count changes and one
    ascending pass is exhaustive.
    """
    fired = 0
    for u in g.white_vertices():
        if not g.has_vertex(u):
            continue
        if len(g.black_neighbors(u)) <= 1:
            _delete_and_cleanup(g, u, "4", (u,), trace, hook)
            fired += 1
    return fired


def rule5(g: ColoredGraph, trace: RuleTrace | None = None, hook: Hook | None = None) -> int:
    """Delete a white vertex whose black neighborhood another vertex covers.

    When two white vertices have identical black neighborhoods the higher id
    is deleted.  Deletions never create new containments between survivors
    (blacks adjacent to a surviving white cannot become isolated), so one
    ascending pass over the whites is exhaustive.
    """
    fired = 0
    for u in g.white_vertices():
        if not g.has_vertex(u) or g.color(u) is not Color.WHITE:
            continue
        nb_u = frozenset(g.black_neighbors(u))
        for v in g.vertices():
            if v == u or not g.has_vertex(v) or g.color(v) is Color.RED:
                continue
            nb_v = g.black_neighbors(v)
            if not nb_u <= nb_v:
                continue
            if len(nb_v) == len(nb_u) and g.color(v) is Color.WHITE and v > u:
                _delete_and_cleanup(g, v, "5", (u, v), trace, hook)
                fired += 1
                continue  # u may still have another dominating partner
            _delete_and_cleanup(g, u, "5", (u, v), trace, hook)
            fired += 1
            break
    return fired


def rule6(g: ColoredGraph, params: KernelParams, trace: RuleTrace | None = None) -> bool:
    """Final counting check; True means the instance has no solution.

    Too many red vertices exceed the budget outright; more black vertices
    than k vertices could possibly dominate (including themselves) is equally
    hopeless.
    """
    rejects = (
        len(g.red_vertices()) > params.k
        or len(g.black_vertices()) > black_count_cap(params.i, params.j, params.k)
    )
    if trace is not None:
        trace.append(TraceEntry("6", note="no" if rejects else "pass"))
    return rejects


# -- pipelines -------------------------------------------------------------


def _rule_sequence(params: KernelParams) -> list[tuple[str, Callable[[ColoredGraph, RuleTrace | None, Hook | None], int]]]:
    """Rules 1 through 5 in application order, bound to ``params``."""
    seq: list[tuple[str, Callable]] = [("1", rule1)]
    if params.k > 0:
        for p in range(1, params.i - 1):
            seq.append(
                (f"2.{p}", lambda g, t, h, p=p: rule2p(g, p, params, t, h))
            )
    seq.append(("3", lambda g, t, h: rule3(g, params, t, h)))
    seq.append(("4", rule4))
    seq.append(("5", rule5))
    return seq


def assert_reduced(g: ColoredGraph, params: KernelParams, ids_mode: bool = False) -> None:
    """Check that one more exhaustive pass of every rule changes nothing."""
    if ids_mode:
        from .ids import ids_rule_sequence  # local import avoids a cycle

        seq = ids_rule_sequence(params)
    else:
        seq = _rule_sequence(params)
    for rule_id, fn in seq:
        probe = g.copy()
        changes = fn(probe, None, None)
        if changes:
            raise AssertionError(
                f"graph is not reduced: rule {rule_id} still makes {changes} change(s)"
            )


def kernelize_rwb(
    g: ColoredGraph,
    params: KernelParams,
    *,
    check_kij: bool = False,
    debug_recheck: bool = False,
    hook: Hook | None = None,
) -> KernelOutcome:
    """Run the full rule pipeline on a copy of a colored instance.

    The budget never changes: a Reduced outcome keeps k.  With ``check_kij``
    the (expensive) biclique pre-check runs first instead of trusting the
    caller.
    """
    if params.i < 2:
        raise GraphError("i=1 instances use kernelize_i1, not the rule pipeline")
    if check_kij and contains_kij(g, params.i, params.j) is not None:
        raise GraphError(f"input contains a K_{{{params.i},{params.j}}} subgraph")
    work = g.copy()
    trace = RuleTrace()
    for _rule_id, fn in _rule_sequence(params):
        fn(work, trace, hook)
    if debug_recheck:
        assert_reduced(work, params)
    if rule6(work, params, trace):
        return DecidedNo(trace)
    return Reduced(work, params.k, trace)


def kernelize_i1(g: ColoredGraph, j: int, k: int) -> KernelOutcome:
    """Counting kernel for max-degree-bounded instances (no K_{1,j} star).

    k vertices dominate at most k*(j-1) neighbors plus themselves, so more
    than k*j vertices is a NO; otherwise the instance is its own kernel.
    """
    if j < 1:
        raise GraphError(f"need j >= 1, got j={j}")
    if k < 0:
        raise GraphError(f"budget must be non-negative, got k={k}")
    if not g.is_plain():
        raise GraphError("kernelize_i1 expects an uncolored (all-black) instance")
    for v in g.vertices():
        if g.degree(v) >= j:
            raise GraphError(
                f"vertex {v} has degree {g.degree(v)}, so the graph contains K_{{1,{j}}}"
            )
    trace = RuleTrace()
    if g.vertex_count > k * j:
        trace.append(TraceEntry("i1", note="no"))
        return DecidedNo(trace)
    trace.append(TraceEntry("i1", note="pass"))
    return Reduced(g.copy(), k, trace)
