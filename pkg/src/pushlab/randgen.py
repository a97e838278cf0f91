"""Seeded random graph corpora.

All randomness flows through splitmix64 so identical seeds reproduce the
same corpus byte-exactly on any platform:

    state += 0x9E3779B97F4A7C15
    z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
    z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31

Generators intentionally stay sparse so exact chromatic values remain
within the enumerated tournament range.
"""

from __future__ import annotations

from fractions import Fraction

from .density import mad
from .graphs import OrientedGraph, degeneracy_order

_MASK = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit generator; the only randomness source here."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in 0..n-1 (rejection sampling, no modulo bias)."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        limit = _MASK - (_MASK + 1) % n
        while True:
            x = self.next_u64()
            if x <= limit:
                return x % n

    def chance(self, num: int, den: int) -> bool:
        return self.below(den) < num

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, seq: list) -> None:
        for i in range(len(seq) - 1, 0, -1):
            j = self.below(i + 1)
            seq[i], seq[j] = seq[j], seq[i]


def _random_tree_edges(rng: SplitMix64, n: int) -> list[tuple[int, int]]:
    """Random labeled tree: attach each vertex to a uniform earlier one."""
    return [(rng.below(v), v) for v in range(1, n)]


def _orient(rng: SplitMix64, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    return [(u, v) if rng.chance(1, 2) else (v, u) for u, v in edges]


def random_connected_oriented(rng: SplitMix64, max_n: int = 8) -> OrientedGraph:
    """Random connected oriented graph: a spanning tree plus a few chords."""
    n = 2 + rng.below(max_n - 1)
    edges = set(map(tuple, map(sorted, _random_tree_edges(rng, n))))
    extra = rng.below(3)
    attempts = 0
    while extra and attempts < 20:
        attempts += 1
        u, v = rng.below(n), rng.below(n)
        if u != v and (min(u, v), max(u, v)) not in edges:
            edges.add((min(u, v), max(u, v)))
            extra -= 1
    return OrientedGraph.from_arcs(n, _orient(rng, sorted(edges)))


def random_tournament(rng: SplitMix64, n: int) -> OrientedGraph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return OrientedGraph.from_arcs(n, _orient(rng, edges))


def random_oriented_graph(rng: SplitMix64, n: int, edge_num: int, edge_den: int) -> OrientedGraph:
    """Each pair independently becomes an edge with probability num/den."""
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.chance(edge_num, edge_den)
    ]
    return OrientedGraph.from_arcs(n, _orient(rng, edges))


def random_subcubic_two_degenerate(rng: SplitMix64, max_n: int = 14) -> OrientedGraph:
    """Connected, maximum degree <= 3, 2-degenerate (not 3-regular)."""
    while True:
        n = 3 + rng.below(max_n - 2)
        deg = [0] * n
        edges = []
        for v in range(1, n):
            options = [u for u in range(v) if deg[u] < 3]
            if not options:
                break
            u = rng.choice(options)
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
        else:
            for _ in range(rng.below(n)):
                u, v = rng.below(n), rng.below(n)
                if (
                    u != v
                    and deg[u] < 3
                    and deg[v] < 3
                    and (min(u, v), max(u, v)) not in map(tuple, map(sorted, edges))
                ):
                    edges.append((min(u, v), max(u, v)))
                    deg[u] += 1
                    deg[v] += 1
            g = OrientedGraph.from_arcs(n, _orient(rng, sorted(edges)))
            if g.max_degree() <= 3 and degeneracy_order(g, 2) is not None:
                return g


def random_cubic_connected(rng: SplitMix64, max_n: int = 12) -> OrientedGraph:
    """Random connected cubic graph via the pairing model with rejection."""
    sizes = [n for n in range(4, max_n + 1, 2)]
    while True:
        n = rng.choice(sizes)
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        edges = set()
        simple = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                simple = False
                break
            edges.add((min(u, v), max(u, v)))
        if not simple:
            continue
        g = OrientedGraph.from_arcs(n, _orient(rng, sorted(edges)))
        if g.is_connected():
            return g


def random_sparse_graph(rng: SplitMix64, max_n: int = 12) -> OrientedGraph:
    """Connected graph with maximum average degree below 3 (n >= 2)."""
    while True:
        n = 2 + rng.below(max_n - 1)
        edges = set(map(tuple, map(sorted, _random_tree_edges(rng, n))))
        for _ in range(rng.below(3)):
            u, v = rng.below(n), rng.below(n)
            if u != v and (min(u, v), max(u, v)) not in edges:
                edges.add((min(u, v), max(u, v)))
        g = OrientedGraph.from_arcs(n, _orient(rng, sorted(edges)))
        if mad(g) < Fraction(3):
            return g


def random_pair(rng: SplitMix64, max_source: int = 7, max_target: int = 5):
    """Source/target pair for strategy-agreement checks."""
    g = random_connected_oriented(rng, max_source)
    nh = 1 + rng.below(max_target)
    h = random_oriented_graph(rng, nh, 1, 2)
    return g, h
