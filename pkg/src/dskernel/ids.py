"""Kernelization for the independent dominating set variant.

An independent solution can never contain a vertex adjacent to a chosen one,
so a vertex that the base rules would whiten can simply be deleted.  The
pipeline therefore works on red/black graphs: rules 1, 2.p, and 3 carry over
with deletion in place of whitening, rules 4 and 5 have nothing to act on,
and rule 6 keeps the same counting bounds.  Deletions can isolate black
vertices, so every deleting rule reapplies rule 1 afterwards, mirroring the
base pipeline's delete-then-rule-1 idiom; a consequence is that red vertices
are always isolated the moment they are created.
"""

from __future__ import annotations

from typing import Callable

from .graph import Color, ColoredGraph, GraphError, contains_kij
from .rules import (
    DecidedNo,
    Hook,
    KernelOutcome,
    KernelParams,
    Reduced,
    _fire_common_neighbor_rule,
    _first_common_neighbor_target,
    black_count_cap,
    common_neighbor_cap,
    degree_cap,
    rule1,
)
from .transform import colorize
from .trace import RuleTrace, TraceEntry


def _require_rb(g: ColoredGraph) -> None:
    whites = g.white_vertices()
    if whites:
        raise GraphError(f"red/black graph expected, found white vertices {whites}")


def ids_rule1(g: ColoredGraph, trace: RuleTrace | None = None, hook: Hook | None = None) -> int:
    """Identical to the base rule: isolated blacks are forced, recolor red."""
    return rule1(g, trace, hook)


def ids_rule2p(
    g: ColoredGraph,
    p: int,
    params: KernelParams,
    trace: RuleTrace | None = None,
    hook: Hook | None = None,
) -> int:
    """Rule 2.p with the oversized common neighborhood deleted, not whitened."""
    i, j, k = params.i, params.j, params.k
    if i < 3 or not 1 <= p <= i - 2:
        raise GraphError(f"rule 2.{p} is undefined for i={i}")
    if k == 0:
        raise GraphError("rule 2 does not terminate with budget 0")
    _require_rb(g)
    size = i - p
    cap = common_neighbor_cap(p, j, k)
    rule_id = f"2.{p}"
    fired = 0
    while (target := _first_common_neighbor_target(g, size, cap)) is not None:
        u_set, blacks = target
        if hook:
            hook("candidate", g, rule=rule_id, u_set=u_set, black_set=blacks)
        _fire_common_neighbor_rule(g, u_set, blacks, rule_id, trace, delete_whitened=True)
        rule1(g, trace, hook)  # deletions may isolate black vertices
        if hook:
            hook("fired", g, rule=rule_id)
        fired += 1
    return fired


def ids_rule3(
    g: ColoredGraph,
    params: KernelParams,
    trace: RuleTrace | None = None,
    hook: Hook | None = None,
) -> int:
    """Force a vertex with an oversized black neighborhood, deleting the
    neighborhood; the forced vertex ends up isolated and red."""
    _require_rb(g)
    cap = degree_cap(params.i, params.j, params.k)
    fired = 0
    for u in g.vertices():
        if not g.has_vertex(u) or g.color(u) is Color.RED:
            continue
        blacks = sorted(g.black_neighbors(u))
        if len(blacks) <= cap:
            continue
        if hook:
            hook("candidate", g, rule="3", vertex=u, black_set=tuple(blacks))
        old = g.color(u).value
        g.set_color(u, Color.RED)
        for b in blacks:
            g.delete_vertex(b)
        if trace is not None:
            trace.append(
                TraceEntry("3", read=(u,), recolored=((u, old, "R"),), deleted=tuple(blacks))
            )
        rule1(g, trace, hook)
        if hook:
            hook("fired", g, rule="3")
        fired += 1
    return fired


def ids_rule6(g: ColoredGraph, params: KernelParams, trace: RuleTrace | None = None) -> bool:
    """Counting check plus a defensive independence check on the reds.

    Reds are isolated by construction, so two adjacent reds should be
    impossible; if they ever appear the instance is correctly rejected (both
    would be forced into a set that must be independent).
    """
    reds = g.red_vertices()
    rejects = (
        len(reds) > params.k
        or len(g.black_vertices()) > black_count_cap(params.i, params.j, params.k)
    )
    if not rejects:
        red_set = set(reds)
        for r in reds:
            if g.neighbors(r) & red_set:
                rejects = True
                break
    if trace is not None:
        trace.append(TraceEntry("6", note="no" if rejects else "pass"))
    return rejects


def ids_rule_sequence(
    params: KernelParams,
) -> list[tuple[str, Callable[[ColoredGraph, RuleTrace | None, Hook | None], int]]]:
    seq: list[tuple[str, Callable]] = [("1", ids_rule1)]
    if params.k > 0:
        for p in range(1, params.i - 1):
            seq.append((f"2.{p}", lambda g, t, h, p=p: ids_rule2p(g, p, params, t, h)))
    seq.append(("3", lambda g, t, h: ids_rule3(g, params, t, h)))
    return seq


def kernelize_ids(
    g: ColoredGraph,
    params: KernelParams,
    *,
    check_kij: bool = False,
    hook: Hook | None = None,
) -> KernelOutcome:
    """Kernelize a plain instance of independent dominating set.

    The output kernel is plain with the original budget: forced (red)
    vertices end isolated, and isolated vertices must join any dominating set
    without ever violating independence, so dropping the colors already
    yields an equivalent instance.
    """
    if not g.is_plain():
        raise GraphError("kernelize_ids expects an uncolored (all-black) instance")
    if params.i < 2:
        raise GraphError("i=1 instances use kernelize_i1, not the rule pipeline")
    if check_kij and contains_kij(g, params.i, params.j) is not None:
        raise GraphError(f"input contains a K_{{{params.i},{params.j}}} subgraph")
    work = colorize(g)
    trace = RuleTrace()
    for _rule_id, fn in ids_rule_sequence(params):
        fn(work, trace, hook)
    if ids_rule6(work, params, trace):
        return DecidedNo(trace)
    for r in work.red_vertices():
        if work.degree(r) != 0:
            raise GraphError(f"forced vertex {r} is not isolated; reduction is inconsistent")
    kernel = work.copy()
    for v in kernel.vertices():
        kernel.set_color(v, Color.BLACK)
    return Reduced(kernel, params.k, trace)
