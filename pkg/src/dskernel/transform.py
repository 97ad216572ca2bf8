"""Conversions between plain and colored instances.

Colorizing is trivial (everything black).  Uncoloring a reduced instance must
preserve the answer without colors: red vertices are forced picks already
charged against the budget, so they are deleted and their cost subtracted,
and each white vertex gets a pendant-guarded satellite so that it need not be
dominated while everything else still must be.
"""

from __future__ import annotations

from .graph import Color, ColoredGraph, GraphError
from .rules import (
    DecidedNo,
    Hook,
    KernelOutcome,
    KernelParams,
    Reduced,
    kernelize_i1,
    kernelize_rwb,
)


def colorize(g: ColoredGraph) -> ColoredGraph:
    """Copy of ``g`` with every vertex black."""
    h = g.copy()
    for v in h.vertices():
        h.set_color(v, Color.BLACK)
    return h


def uncolor(h: ColoredGraph, k: int) -> tuple[ColoredGraph, int]:
    """Turn a reduced colored instance into an equivalent plain one.

    Red vertices are deleted (each is a forced pick, so the budget drops by
    one per red; reduction guarantees they have no black neighbors, which is
    asserted rather than assumed).  Each white vertex x gains a satellite v_x
    carrying k + |whites| + 1 pendant leaves: any feasible solution must take
    v_x, which dominates x for free.  The returned budget is
    k - |reds| + |whites|.
    """
    work = h.copy()
    reds = work.red_vertices()
    for r in reds:
        blacks = sorted(work.black_neighbors(r))
        if blacks:
            raise GraphError(
                f"red vertex {r} still has black neighbors {blacks}; "
                "the instance is not fully reduced"
            )
        work.delete_vertex(r)
    whites = work.white_vertices()
    budget = k - len(reds) + len(whites)
    pendant_count = k + len(whites) + 1
    for x in whites:
        satellite = work.add_vertex(Color.BLACK)
        work.add_edge(satellite, x)
        for _ in range(pendant_count):
            pendant = work.add_vertex(Color.BLACK)
            work.add_edge(pendant, satellite)
    for v in work.vertices():
        work.set_color(v, Color.BLACK)
    return work, budget


def kernelize_plain(
    g: ColoredGraph,
    params: KernelParams,
    *,
    check_kij: bool = False,
    debug_recheck: bool = False,
    hook: Hook | None = None,
) -> KernelOutcome:
    """Kernelize an uncolored instance: colorize, reduce, uncolor.

    For i = 1 the counting kernel applies directly and no uncoloring is
    needed.  The attached trace documents the reduction stage; uncoloring is
    a deterministic function of the reduced graph and k.
    """
    if not g.is_plain():
        raise GraphError("kernelize_plain expects an uncolored (all-black) instance")
    if params.i == 1:
        return kernelize_i1(g, params.j, params.k)
    outcome = kernelize_rwb(
        colorize(g), params, check_kij=check_kij, debug_recheck=debug_recheck, hook=hook
    )
    if isinstance(outcome, DecidedNo):
        return outcome
    kernel, budget = uncolor(outcome.graph, params.k)
    return Reduced(kernel, budget, outcome.trace)
