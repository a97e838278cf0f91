"""Exact maximum average degree via densest-subgraph computations.

mad(G) = max over nonempty subgraphs H of 2|E(H)|/|V(H)|, always attained by
an induced subgraph.  Values are exact fractions: the thresholds this package
cares about (8/3, 3) must be compared exactly, so everything here stays in
rational arithmetic; the flow feasibility test clears denominators first.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import OrientedGraph, bits, popcount

BRUTE_FORCE_LIMIT = 20


def mad_bruteforce(g: OrientedGraph) -> Fraction:
    """Maximum average degree by enumerating every vertex subset (n <= 20)."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute-force mad limited to n <= {BRUTE_FORCE_LIMIT}")
    adj = [g.adj(v) for v in range(g.n)]
    # edge_count[s] built by peeling the lowest bit of each subset
    edge_count = [0] * (1 << g.n)
    best = Fraction(0)
    for s in range(1, 1 << g.n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        edge_count[s] = edge_count[rest] + popcount(adj[v] & rest)
        density = Fraction(2 * edge_count[s], popcount(s))
        if density > best:
            best = density
    return best


class _Dinic:
    """Maximum flow with integer (arbitrary precision) capacities."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, c: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = [s]
            for u in queue:
                for e in self.head[u]:
                    v = self.to[e]
                    if self.cap[e] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] < 0:
                return flow
            it = [0] * self.n

            def dfs(u: int, pushed: int) -> int:
                if u == t:
                    return pushed
                while it[u] < len(self.head[u]):
                    e = self.head[u][it[u]]
                    v = self.to[e]
                    if self.cap[e] > 0 and level[v] == level[u] + 1:
                        got = dfs(v, min(pushed, self.cap[e]))
                        if got:
                            self.cap[e] -= got
                            self.cap[e ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while True:
                pushed = dfs(s, 1 << 300)
                if not pushed:
                    break
                flow += pushed


def _denser_subgraph_exists(edges: list[tuple[int, int]], n: int, g: Fraction) -> bool:
    """Goldberg feasibility test: is there S with e(S)/|S| > g?"""
    m = len(edges)
    if m == 0:
        return False
    p, q = g.numerator, g.denominator
    source, sink = 0, 1
    net = _Dinic(2 + m + n)
    for i, (u, v) in enumerate(edges):
        enode = 2 + i
        net.add_edge(source, enode, q)
        net.add_edge(enode, 2 + m + u, m * q + 1)
        net.add_edge(enode, 2 + m + v, m * q + 1)
    for v in range(n):
        net.add_edge(2 + m + v, sink, p)
    return net.max_flow(source, sink) < m * q


def mad_flow(g: OrientedGraph) -> Fraction:
    """Maximum average degree via binary search on density with max-flow tests."""
    edges = sorted(g.edges())
    if not edges:
        return Fraction(0)
    n = g.n
    lo = Fraction(0)
    hi = Fraction(n - 1, 2) if n > 1 else Fraction(0)
    hi = max(hi, Fraction(1))
    gap = Fraction(1, n * n + 1)
    while hi - lo > gap:
        mid = (lo + hi) / 2
        if _denser_subgraph_exists(edges, n, mid):
            lo = mid
        else:
            hi = mid
    # densest density is the unique fraction with denominator <= n in (lo, hi]
    rho = ((lo + hi) / 2).limit_denominator(n)
    return 2 * rho


def mad(g: OrientedGraph) -> Fraction:
    """Exact maximum average degree of the underlying graph."""
    if g.n <= 14:
        return mad_bruteforce(g)
    return mad_flow(g)
