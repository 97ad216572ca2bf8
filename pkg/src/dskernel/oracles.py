"""Exact exponential-time reference solvers, used only for verification.

These never participate in kernelization; they adjudicate it.  The core is a
branch-and-bound search for a small set of vertices dominating a target set,
optionally forced to contain some vertices, to avoid others, or to be
independent.  A greedy warm start answers most YES instances immediately; the
exact search settles the rest.  Every witness is re-verified before it is
returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .graph import Color, ColoredGraph, GraphError
from .rules import (
    DecidedNo,
    KernelParams,
    Reduced,
    black_count_cap,
)

DEFAULT_VERTEX_CAP = 20


class CapExceeded(GraphError):
    """The instance is too large for exhaustive search at the configured cap."""


def _verify_witness(
    g: ColoredGraph,
    witness: frozenset[int],
    targets: set[int],
    forced: set[int],
    forbidden: set[int],
    independent: bool,
) -> frozenset[int]:
    assert forced <= witness and not witness & forbidden
    for t in targets:
        assert t in witness or g.neighbors(t) & witness, f"target {t} not dominated"
    if independent:
        for v in witness:
            assert not g.neighbors(v) & witness, f"witness is not independent at {v}"
    return witness


def find_dominators(
    g: ColoredGraph,
    targets: Iterable[int],
    budget: int,
    *,
    forced: Iterable[int] = (),
    forbidden: Iterable[int] = (),
    independent: bool = False,
    max_vertices: int = DEFAULT_VERTEX_CAP,
) -> frozenset[int] | None:
    """Find a vertex set of size <= budget dominating ``targets``, or None.

    The witness is some feasible set, not necessarily a minimum one; use
    decreasing budgets to locate minima.
    """
    if g.vertex_count > max_vertices:
        raise CapExceeded(
            f"graph has {g.vertex_count} vertices, above the exhaustive-search cap "
            f"of {max_vertices}"
        )
    target_set = set(targets)
    for t in target_set:
        if not g.has_vertex(t):
            raise GraphError(f"unknown target vertex {t}")
    forced_set = set(forced)
    forbidden_set = set(forbidden)
    if forced_set & forbidden_set or len(forced_set) > budget:
        return None
    if independent:
        for v in forced_set:
            if g.neighbors(v) & forced_set:
                return None

    closed = {v: frozenset(g.neighbors(v) | {v}) for v in g.vertices()}
    covered: set[int] = set()
    for f in forced_set:
        covered |= closed[f]

    greedy = _greedy_attempt(
        g, target_set, budget, forced_set, forbidden_set, independent, closed, covered
    )
    if greedy is not None:
        return _verify_witness(g, greedy, target_set, forced_set, forbidden_set, independent)

    seen: set[frozenset[int]] = set()

    def dfs(chosen: set[int], dominated: set[int]) -> frozenset[int] | None:
        undominated = [t for t in target_set if t not in dominated]
        if not undominated:
            return frozenset(chosen)
        if len(chosen) >= budget:
            return None
        candidate_map: dict[int, list[int]] = {}
        for t in undominated:
            options = []
            for u in sorted(closed[t]):
                if u in chosen or u in forbidden_set:
                    continue
                if independent and g.neighbors(u) & chosen:
                    continue
                options.append(u)
            if not options:
                return None
            candidate_map[t] = options
        pivot = min(undominated, key=lambda t: (len(candidate_map[t]), t))
        undominated_set = set(undominated)
        candidates = candidate_map[pivot]
        if not independent and len(candidates) > 1:
            candidates = _drop_dominated_choices(candidates, undominated_set, closed)
        candidates.sort(key=lambda u: (-len(closed[u] & undominated_set), u))
        for u in candidates:
            state = frozenset(chosen | {u})
            if state in seen:
                continue
            seen.add(state)
            found = dfs(chosen | {u}, dominated | closed[u])
            if found is not None:
                return found
        return None

    witness = dfs(set(forced_set), covered)
    if witness is None:
        return None
    return _verify_witness(g, witness, target_set, forced_set, forbidden_set, independent)


def _drop_dominated_choices(
    candidates: list[int], undominated: set[int], closed: dict[int, frozenset[int]]
) -> list[int]:
    """Drop candidates another candidate covers at least as well.

    Sound for plain domination: swapping a dropped candidate for its coverer
    keeps any solution feasible.  Never applied to independent searches,
    where the coverer may collide with later choices.
    """
    coverage = {u: closed[u] & undominated for u in candidates}
    kept = []
    for u in candidates:
        dominated_by_other = any(
            v != u
            and coverage[u] <= coverage[v]
            and (coverage[u] != coverage[v] or v < u)
            for v in candidates
        )
        if not dominated_by_other:
            kept.append(u)
    return kept


def _greedy_attempt(
    g: ColoredGraph,
    targets: set[int],
    budget: int,
    forced: set[int],
    forbidden: set[int],
    independent: bool,
    closed: dict[int, frozenset[int]],
    covered: set[int],
) -> frozenset[int] | None:
    chosen = set(forced)
    dominated = set(covered)
    while len(chosen) < budget:
        undominated = targets - dominated
        if not undominated:
            break
        best_vertex = None
        best_gain = 0
        for u in g.vertices():
            if u in chosen or u in forbidden:
                continue
            if independent and g.neighbors(u) & chosen:
                continue
            gain = len(closed[u] & undominated)
            if gain > best_gain:
                best_gain, best_vertex = gain, u
        if best_vertex is None:
            return None
        chosen.add(best_vertex)
        dominated |= closed[best_vertex]
    if targets - dominated:
        return None
    return frozenset(chosen)


# -- named oracles -----------------------------------------------------------


def find_dominating_set(
    g: ColoredGraph, k: int, *, forbidden: Iterable[int] = (), max_vertices: int = DEFAULT_VERTEX_CAP
) -> frozenset[int] | None:
    """Witness for a dominating set of size <= k, ignoring colors."""
    return find_dominators(
        g, g.vertices(), k, forbidden=forbidden, max_vertices=max_vertices
    )


def has_dominating_set(g: ColoredGraph, k: int, *, max_vertices: int = DEFAULT_VERTEX_CAP) -> bool:
    return find_dominating_set(g, k, max_vertices=max_vertices) is not None


def find_rwb_dominating_set(
    g: ColoredGraph, k: int, *, forbidden: Iterable[int] = (), max_vertices: int = DEFAULT_VERTEX_CAP
) -> frozenset[int] | None:
    """Witness containing every red vertex that dominates all black vertices.

    White vertices need no domination but remain eligible picks.  More reds
    than budget is an immediate NO.
    """
    reds = g.red_vertices()
    if len(reds) > k:
        return None
    return find_dominators(
        g,
        g.black_vertices(),
        k,
        forced=reds,
        forbidden=forbidden,
        max_vertices=max_vertices,
    )


def has_rwb_dominating_set(
    g: ColoredGraph, k: int, *, max_vertices: int = DEFAULT_VERTEX_CAP
) -> bool:
    return find_rwb_dominating_set(g, k, max_vertices=max_vertices) is not None


def find_independent_dominating_set(
    g: ColoredGraph, k: int, *, forbidden: Iterable[int] = (), max_vertices: int = DEFAULT_VERTEX_CAP
) -> frozenset[int] | None:
    """Witness for an independent dominating set of size <= k."""
    return find_dominators(
        g,
        g.vertices(),
        k,
        forbidden=forbidden,
        independent=True,
        max_vertices=max_vertices,
    )


def has_independent_dominating_set(
    g: ColoredGraph, k: int, *, max_vertices: int = DEFAULT_VERTEX_CAP
) -> bool:
    return find_independent_dominating_set(g, k, max_vertices=max_vertices) is not None


# -- kernel verification ------------------------------------------------------


def colored_bound_failures(h: ColoredGraph, params: KernelParams) -> list[str]:
    """Explicit size-bound checks for a reduced colored instance."""
    i, j, k = params.i, params.j, params.k
    failures = []
    reds, whites, blacks = len(h.red_vertices()), len(h.white_vertices()), len(h.black_vertices())
    if reds > k:
        failures.append(f"red count {reds} exceeds budget {k}")
    cap = black_count_cap(i, j, k)
    if blacks > cap:
        failures.append(f"black count {blacks} exceeds cap {cap}")
    white_cap = sum(math.comb(blacks, t) for t in range(2, i)) + (j - 1) * math.comb(blacks, i)
    if whites > white_cap:
        failures.append(f"white count {whites} exceeds cap {white_cap}")
    return failures


def ids_bound_failures(kernel: ColoredGraph, params: KernelParams) -> list[str]:
    cap = params.k + black_count_cap(params.i, params.j, params.k)
    if kernel.vertex_count > cap:
        return [f"kernel has {kernel.vertex_count} vertices, above the cap {cap}"]
    return []


@dataclass(frozen=True)
class KernelReport:
    pipeline: str
    agree: bool
    input_answer: bool
    kernel_answer: bool
    kernel_size: int | None
    bound_failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.agree and not self.bound_failures


def verify_kernel(
    g: ColoredGraph,
    params: KernelParams,
    pipeline: str,
    *,
    max_vertices: int = DEFAULT_VERTEX_CAP,
    kernel_max_vertices: int = 400,
) -> KernelReport:
    """Run a pipeline and compare its implied answer against brute force.

    ``kernel_max_vertices`` is a separate, larger cap because uncoloring can
    legitimately grow the instance (pendant satellites).
    """
    from .degenerate import kernelize_degenerate
    from .ids import kernelize_ids
    from .rules import kernelize_rwb
    from .transform import colorize, kernelize_plain, uncolor

    bound_failures: list[str] = []
    if pipeline == "plain":
        input_answer = has_dominating_set(g, params.k, max_vertices=max_vertices)
        outcome = kernelize_plain(g, params)
        if isinstance(outcome, DecidedNo):
            kernel_answer, size = False, None
        else:
            kernel_answer = has_dominating_set(
                outcome.graph, outcome.budget, max_vertices=kernel_max_vertices
            )
            size = outcome.graph.vertex_count
            colored = kernelize_rwb(colorize(g), params)
            assert isinstance(colored, Reduced)
            bound_failures += colored_bound_failures(colored.graph, params)
            h = colored.graph
            expected = (
                h.vertex_count
                - len(h.red_vertices())
                + (params.k + len(h.white_vertices()) + 2) * len(h.white_vertices())
            )
            if size != expected:
                bound_failures.append(
                    f"uncolored kernel has {size} vertices, accounting expected {expected}"
                )
    elif pipeline == "rwb":
        input_answer = has_rwb_dominating_set(g, params.k, max_vertices=max_vertices)
        outcome = kernelize_rwb(g, params)
        if isinstance(outcome, DecidedNo):
            kernel_answer, size = False, None
        else:
            kernel_answer = has_rwb_dominating_set(
                outcome.graph, outcome.budget, max_vertices=kernel_max_vertices
            )
            size = outcome.graph.vertex_count
            bound_failures += colored_bound_failures(outcome.graph, params)
    elif pipeline == "degenerate":
        if params.d is None:
            raise GraphError("degenerate pipeline needs params.d")
        input_answer = has_rwb_dominating_set(g, params.k, max_vertices=max_vertices)
        outcome = kernelize_degenerate(g, params.d, params.k)
        if isinstance(outcome, DecidedNo):
            kernel_answer, size = False, None
        else:
            kernel_answer = has_rwb_dominating_set(
                outcome.graph, outcome.budget, max_vertices=kernel_max_vertices
            )
            size = outcome.graph.vertex_count
            bound_failures += colored_bound_failures(outcome.graph, params)
    elif pipeline == "ids":
        input_answer = has_independent_dominating_set(g, params.k, max_vertices=max_vertices)
        outcome = kernelize_ids(g, params)
        if isinstance(outcome, DecidedNo):
            kernel_answer, size = False, None
        else:
            kernel_answer = has_independent_dominating_set(
                outcome.graph, outcome.budget, max_vertices=kernel_max_vertices
            )
            size = outcome.graph.vertex_count
            bound_failures += ids_bound_failures(outcome.graph, params)
    else:
        raise GraphError(f"unknown pipeline {pipeline!r}")
    return KernelReport(
        pipeline=pipeline,
        agree=input_answer == kernel_answer,
        input_answer=input_answer,
        kernel_answer=kernel_answer,
        kernel_size=size,
        bound_failures=tuple(bound_failures),
    )
