"""Seeded test-corpus generators.

All randomness flows through SplitMix64, a tiny splittable 64-bit generator
with a published algorithm, so identical seeds give bit-identical graphs in
any implementation of this format (the exact constants are documented in the
README's format section).
"""

from __future__ import annotations

from .graph import ColoredGraph, GraphError, contains_kij

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: state advances by 0x9E3779B97F4A7C15 per draw."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish draw in [0, n) via modulo; bias is negligible for n << 2^64."""
        if n <= 0:
            raise GraphError(f"below() needs a positive bound, got {n}")
        return self.next_u64() % n

    def unit(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def split(self) -> "SplitMix64":
        """Independent child generator; used to give each instance its own stream."""
        return SplitMix64(self.next_u64())


def cycle(n: int) -> ColoredGraph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return ColoredGraph.from_edges(n, [(t, (t + 1) % n) for t in range(n)])


def star(leaves: int) -> ColoredGraph:
    if leaves < 0:
        raise GraphError(f"star needs leaves >= 0, got {leaves}")
    return ColoredGraph.from_edges(leaves + 1, [(0, t) for t in range(1, leaves + 1)])


def biclique(a: int, b: int) -> ColoredGraph:
    if a < 1 or b < 1:
        raise GraphError(f"biclique needs positive sides, got {a}, {b}")
    return ColoredGraph.from_edges(
        a + b, [(u, a + v) for u in range(a) for v in range(b)]
    )


def petersen() -> ColoredGraph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes between them."""
    edges = (
        [(t, (t + 1) % 5) for t in range(5)]
        + [(t, t + 5) for t in range(5)]
        + [(5 + t, 5 + (t + 2) % 5) for t in range(5)]
    )
    return ColoredGraph.from_edges(10, edges)


def degenerate_graph(n: int, d: int, seed: int) -> ColoredGraph:
    """Random d-degenerate graph: vertex t attaches to min(d, t) distinct
    earlier vertices, so peeling in reverse insertion order certifies the
    bound by construction."""
    if n < 0 or d < 0:
        raise GraphError(f"need n >= 0 and d >= 0, got n={n}, d={d}")
    rng = SplitMix64(seed)
    g = ColoredGraph.from_edges(n)
    for t in range(1, n):
        pool = list(range(t))
        for _ in range(min(d, t)):
            u = pool.pop(rng.below(len(pool)))
            g.add_edge(t, u)
    return g


def erdos_renyi_kijfree(
    n: int, p: float, i: int, j: int, seed: int, max_retries: int = 100
) -> ColoredGraph:
    """Sample G(n, p) and reject until the graph has no K_{i,j} subgraph."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must be in [0,1], got {p}")
    rng = SplitMix64(seed)
    for _ in range(max_retries):
        g = ColoredGraph.from_edges(n)
        for u in range(n):
            for v in range(u + 1, n):
                if rng.unit() < p:
                    g.add_edge(u, v)
        if contains_kij(g, i, j) is None:
            return g
    raise GraphError(
        f"no K_{{{i},{j}}}-free sample within {max_retries} retries "
        f"(n={n}, p={p}); lower p or raise max_retries"
    )


def build(model: str, args: list[str]) -> ColoredGraph:
    """CLI dispatch: build a graph from a model name and its string arguments."""
    try:
        if model == "cycle":
            (n,) = args
            return cycle(int(n))
        if model == "star":
            (leaves,) = args
            return star(int(leaves))
        if model == "biclique":
            a, b = args
            return biclique(int(a), int(b))
        if model == "petersen":
            if args:
                raise ValueError
            return petersen()
        if model == "degenerate":
            n, d, seed = args
            return degenerate_graph(int(n), int(d), int(seed))
        if model == "erdos_renyi_kijfree":
            if len(args) == 5:
                n, p, i, j, seed = args
                retries = "100"
            else:
                n, p, i, j, seed, retries = args
            return erdos_renyi_kijfree(
                int(n), float(p), int(i), int(j), int(seed), int(retries)
            )
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad arguments for model {model!r}: {args}") from None
    raise GraphError(
        f"unknown model {model!r}; choose from cycle, star, biclique, petersen, "
        "degenerate, erdos_renyi_kijfree"
    )
