"""Randomized oracle-equivalence harness shared by the CLI and the test suite.

Each trial draws a seeded random biclique-free instance, kernelizes it with
the chosen pipeline, and compares the implied answer with brute force, while
checking the explicit kernel size bounds.  With ``check_invariants`` a hook
re-validates structural invariants after every single rule firing; with
``check_claims`` the brute-force oracle additionally certifies, before each
forcing rule fires, that the forced choice really is unavoidable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .degenerate import kernelize_degenerate
from .generators import SplitMix64, degenerate_graph, erdos_renyi_kijfree
from .graph import Color, ColoredGraph, GraphError, contains_kij
from .graphio import serialize_graph
from .ids import ids_rule_sequence, kernelize_ids
from .oracles import (
    colored_bound_failures,
    find_dominators,
    find_rwb_dominating_set,
    has_dominating_set,
    has_independent_dominating_set,
    has_rwb_dominating_set,
    ids_bound_failures,
)
from .rules import DecidedNo, KernelParams, Reduced, _rule_sequence, kernelize_rwb
from .transform import colorize, kernelize_plain

PIPELINES = ("plain", "rwb", "degenerate", "ids")
KERNEL_ORACLE_CAP = 500


class InvariantViolation(AssertionError):
    pass


class InvariantChecker:
    """Hook asserting per-firing invariants of the reduction pipelines.

    After every firing: no new forbidden biclique, no red vertex with a black
    neighbor, no white vertex in the independent variant, and every earlier
    rule still at its fixpoint.  Before each forcing firing (optionally) the
    oracle confirms the forced vertices are unavoidable.
    """

    def __init__(
        self,
        params: KernelParams,
        *,
        ids_mode: bool = False,
        check_claims: bool = False,
        oracle_cap: int = KERNEL_ORACLE_CAP,
        input_graph: ColoredGraph | None = None,
    ) -> None:
        self.params = params
        self.ids_mode = ids_mode
        self.check_claims = check_claims
        self.oracle_cap = oracle_cap
        # The no-new-biclique invariant is conditional on a biclique-free input.
        self.check_kij = input_graph is None or (
            contains_kij(input_graph, params.i, params.j) is None
        )
        seq = ids_rule_sequence(params) if ids_mode else _rule_sequence(params)
        self._sequence = seq
        self._index = {rule_id: t for t, (rule_id, _) in enumerate(seq)}
        self.firings = 0

    def __call__(self, event: str, g: ColoredGraph, **info) -> None:
        rule_id = info.get("rule", "")
        if event == "candidate" and self.check_claims:
            k = self.params.k
            if rule_id.startswith("2."):
                # No small solution may avoid the whole matched set.
                dodge = find_rwb_dominating_set(
                    g, k, forbidden=info["u_set"], max_vertices=self.oracle_cap
                )
                if dodge is not None:
                    raise InvariantViolation(
                        f"rule {rule_id} fired on {info['u_set']}, but {sorted(dodge)} "
                        "solves the instance without it"
                    )
            elif rule_id == "3":
                # No small set may dominate the matched black neighborhood
                # without the matched vertex itself.
                dodge = find_dominators(
                    g,
                    info["black_set"],
                    k,
                    forbidden=(info["vertex"],),
                    max_vertices=self.oracle_cap,
                )
                if dodge is not None:
                    raise InvariantViolation(
                        f"rule 3 forced vertex {info['vertex']}, but {sorted(dodge)} "
                        "dominates its black neighborhood without it"
                    )
        elif event == "fired":
            self.firings += 1
            if self.check_kij:
                witness = contains_kij(g, self.params.i, self.params.j)
                if witness is not None:
                    raise InvariantViolation(
                        f"rule {rule_id} introduced a K_{{{self.params.i},{self.params.j}}}: "
                        f"{witness}"
                    )
            for r in g.red_vertices():
                blacks = g.black_neighbors(r)
                if blacks:
                    raise InvariantViolation(
                        f"after rule {rule_id}, red vertex {r} has black neighbors "
                        f"{sorted(blacks)}"
                    )
            if self.ids_mode and g.white_vertices():
                raise InvariantViolation(
                    f"after rule {rule_id}, white vertices {g.white_vertices()} exist "
                    "in a red/black pipeline"
                )
            for earlier_id, fn in self._sequence:
                if self._index.get(earlier_id, 0) >= self._index.get(rule_id, 0):
                    break
                probe = g.copy()
                changes = fn(probe, None, None)
                if changes:
                    raise InvariantViolation(
                        f"after rule {rule_id}, earlier rule {earlier_id} still makes "
                        f"{changes} change(s)"
                    )


@dataclass
class TrialFailure:
    index: int
    description: str
    graph_text: str


@dataclass
class HarnessResult:
    pipeline: str
    i: int
    j: int
    kmax: int
    count: int
    seed: int
    agreed: int = 0
    failures: list[TrialFailure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


def _sample_instance(
    rng: SplitMix64, i: int, j: int, n_max: int, degenerate_only: bool
) -> ColoredGraph:
    n = 4 + rng.below(max(1, n_max - 3))
    use_random_edges = (not degenerate_only) and rng.below(2) == 0
    if use_random_edges:
        menu = (0.08, 0.12, 0.18) if i <= 2 else (0.2, 0.3, 0.4)
        p = menu[rng.below(3)]
        try:
            return erdos_renyi_kijfree(n, p, i, j, rng.next_u64(), max_retries=400)
        except GraphError:
            pass  # fall back to a construction-guaranteed instance
    return degenerate_graph(n, i - 1, rng.next_u64())


def _implied_colored_answer(outcome, oracle_cap: int) -> bool:
    if isinstance(outcome, DecidedNo):
        return False
    return has_rwb_dominating_set(outcome.graph, outcome.budget, max_vertices=oracle_cap)


def run_equivalence_trials(
    pipeline: str,
    i: int,
    j: int,
    kmax: int,
    count: int,
    seed: int,
    *,
    n_max: int = 14,
    check_invariants: bool = False,
    check_claims: bool = False,
) -> HarnessResult:
    """Run ``count`` seeded random equivalence trials for one pipeline."""
    if pipeline not in PIPELINES:
        raise GraphError(f"unknown pipeline {pipeline!r}; choose from {PIPELINES}")
    if pipeline == "degenerate" and i != j:
        raise GraphError("degenerate pipeline needs i == j (= d + 1)")
    result = HarnessResult(pipeline, i, j, kmax, count, seed)
    root = SplitMix64(seed)
    start = time.perf_counter()
    for index in range(count):
        trial_rng = root.split()
        g = _sample_instance(
            trial_rng, i, j, n_max, degenerate_only=(pipeline == "degenerate")
        )
        k = trial_rng.below(kmax + 1)
        params = KernelParams(i=i, j=j, k=k, d=(i - 1 if pipeline == "degenerate" else None))
        try:
            problems = _run_trial(
                pipeline, g, params, check_invariants, check_claims, n_max
            )
        except (GraphError, AssertionError) as exc:
            problems = [f"{type(exc).__name__}: {exc}"]
        if problems:
            result.failures.append(
                TrialFailure(index, "; ".join(problems), serialize_graph(g, k))
            )
        else:
            result.agreed += 1
    result.elapsed = time.perf_counter() - start
    return result


def _run_trial(
    pipeline: str,
    g: ColoredGraph,
    params: KernelParams,
    check_invariants: bool,
    check_claims: bool,
    n_max: int,
) -> list[str]:
    problems: list[str] = []
    hook = None
    if check_invariants or check_claims:
        hook = InvariantChecker(
            params,
            ids_mode=(pipeline == "ids"),
            check_claims=check_claims,
            input_graph=g,
        )
    k = params.k
    if pipeline == "plain":
        truth = has_dominating_set(g, k, max_vertices=n_max)
        outcome = kernelize_plain(g, params, hook=hook)
        if isinstance(outcome, DecidedNo):
            implied = False
        else:
            implied = has_dominating_set(
                outcome.graph, outcome.budget, max_vertices=KERNEL_ORACLE_CAP
            )
        if truth != implied:
            problems.append(f"input answer {truth}, kernel implies {implied}")
        colored = kernelize_rwb(colorize(g), params)
        if isinstance(colored, Reduced):
            problems += colored_bound_failures(colored.graph, params)
            if isinstance(outcome, Reduced):
                h = colored.graph
                whites = len(h.white_vertices())
                expected = h.vertex_count - len(h.red_vertices()) + (k + whites + 2) * whites
                if outcome.graph.vertex_count != expected:
                    problems.append(
                        f"kernel has {outcome.graph.vertex_count} vertices, "
                        f"accounting expected {expected}"
                    )
    elif pipeline == "rwb":
        colored_in = colorize(g)
        truth = has_rwb_dominating_set(colored_in, k, max_vertices=n_max)
        outcome = kernelize_rwb(colored_in, params, hook=hook)
        implied = _implied_colored_answer(outcome, KERNEL_ORACLE_CAP)
        if truth != implied:
            problems.append(f"input answer {truth}, kernel implies {implied}")
        if isinstance(outcome, Reduced):
            problems += colored_bound_failures(outcome.graph, params)
    elif pipeline == "degenerate":
        d = params.i - 1
        truth = has_dominating_set(g, k, max_vertices=n_max)
        fast = kernelize_degenerate(colorize(g), d, k, hook=hook)
        generic = kernelize_rwb(colorize(g), params)
        implied_fast = _implied_colored_answer(fast, KERNEL_ORACLE_CAP)
        implied_generic = _implied_colored_answer(generic, KERNEL_ORACLE_CAP)
        if not (truth == implied_fast == implied_generic):
            problems.append(
                f"answers diverge: oracle {truth}, fast {implied_fast}, "
                f"generic {implied_generic}"
            )
        for name, outcome in (("fast", fast), ("generic", generic)):
            if isinstance(outcome, Reduced):
                problems += [
                    f"{name}: {msg}"
                    for msg in colored_bound_failures(outcome.graph, params)
                ]
    elif pipeline == "ids":
        truth = has_independent_dominating_set(g, k, max_vertices=n_max)
        outcome = kernelize_ids(g, params, hook=hook)
        if isinstance(outcome, DecidedNo):
            implied = False
        else:
            implied = has_independent_dominating_set(
                outcome.graph, outcome.budget, max_vertices=KERNEL_ORACLE_CAP
            )
        if truth != implied:
            problems.append(f"input answer {truth}, kernel implies {implied}")
        if isinstance(outcome, Reduced):
            problems += ids_bound_failures(outcome.graph, params)
    return problems
