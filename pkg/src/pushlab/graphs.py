"""Immutable oriented graphs on at most 64 labeled vertices.

An oriented graph is a loopless digraph with no pair of opposite arcs,
i.e. an orientation of a simple undirected graph.  Vertices are labeled
0..n-1 and every neighbor set is stored as a single int bitmask, so the
search kernels elsewhere in the package work on whole-word set operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_VERTICES = 64


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex labels into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bits of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class GraphError(ValueError):
    """Raised when oriented-graph invariants are violated."""


class OrientedGraph:
    """A loopless digraph without opposite arcs, immutable after construction."""

    __slots__ = ("n", "out", "inn", "_hash")

    def __init__(self, n: int, out: Iterable[int]):
        out = tuple(out)
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(out) != n:
            raise GraphError("out-neighbor table length does not match n")
        full = (1 << n) - 1
        inn = [0] * n
        for v, ov in enumerate(out):
            if ov & ~full:
                raise GraphError(f"vertex {v} has out-neighbors outside 0..{n - 1}")
            if ov >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for w in bits(ov):
                inn[w] |= 1 << v
        for v in range(n):
            if out[v] & inn[v]:
                w = next(bits(out[v] & inn[v]))
                raise GraphError(f"opposite arcs between {v} and {w}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "out", out)
        object.__setattr__(self, "inn", tuple(inn))
        object.__setattr__(self, "_hash", hash((n, out)))

    def __setattr__(self, name, value):
        raise AttributeError("OrientedGraph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, OrientedGraph)
            and self.n == other.n
            and self.out == other.out
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"OrientedGraph({self.n}, arcs={sorted(self.arcs())})"

    # -- construction ------------------------------------------------------

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "OrientedGraph":
        out = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc ({u},{v}) outside 0..{n - 1}")
            out[u] |= 1 << v
        return cls(n, out)

    # -- basic views -------------------------------------------------------

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.out[u]):
                yield (u, v)

    def arc_count(self) -> int:
        return sum(popcount(o) for o in self.out)

    def adj(self, v: int) -> int:
        """Bitmask of all neighbors of v in the underlying graph."""
        return self.out[v] | self.inn[v]

    def degree(self, v: int) -> int:
        return popcount(self.adj(v))

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def max_degree(self) -> int:
        return max(self.degrees())

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edge list of the underlying graph, each pair with u < v."""
        return [(u, v) for u, v in self.arcs() if u < v] + [
            (v, u) for u, v in self.arcs() if v < u
        ]

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def is_tournament(self) -> bool:
        full = (1 << self.n) - 1
        return all(self.adj(v) == full ^ (1 << v) for v in range(self.n))

    # -- components --------------------------------------------------------

    def components(self) -> list[int]:
        """Bitmasks of the connected components of the underlying graph."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = 1 << v
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj(u)
                frontier = nxt & ~comp
                comp |= frontier
            comps.append(comp)
            seen |= comp
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    # -- push operation ------------------------------------------------------

    def push(self, pushed: Iterable[int] | int) -> "OrientedGraph":
        """Reverse every arc with exactly one endpoint in the pushed set."""
        s = pushed if isinstance(pushed, int) else mask_of(pushed)
        if s & ~((1 << self.n) - 1):
            raise GraphError("push set contains out-of-range vertices")
        out = list(self.out)
        for v in range(self.n):
            if s >> v & 1:
                cross_out = self.out[v] & ~s
                cross_in = self.inn[v] & ~s
                out[v] = (out[v] & ~cross_out) | cross_in
                for w in bits(cross_out):
                    out[w] |= 1 << v
                for w in bits(cross_in):
                    out[w] &= ~(1 << v)
        return OrientedGraph(self.n, out)

    def induced(self, vertices: Iterable[int] | int) -> "OrientedGraph":
        """Induced sub-oriented-graph, vertices relabeled 0..k-1 in label order."""
        vs = sorted(bits(vertices)) if isinstance(vertices, int) else sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        return OrientedGraph.from_arcs(
            len(vs),
            ((index[u], index[v]) for u, v in self.arcs() if u in index and v in index),
        )

    def relabel(self, perm: list[int]) -> "OrientedGraph":
        """Apply the vertex bijection v -> perm[v]."""
        return OrientedGraph.from_arcs(
            self.n, ((perm[u], perm[v]) for u, v in self.arcs())
        )

    def converse(self) -> "OrientedGraph":
        return OrientedGraph(self.n, self.inn)


# -- push sets and push classes ---------------------------------------------


def canonical_push_set(g: OrientedGraph, pushed: Iterable[int] | int) -> frozenset[int]:
    """Normalize a push set to the member of {S, complement(S)} per component
    that avoids the component's smallest vertex."""
    s = pushed if isinstance(pushed, int) else mask_of(pushed)
    if s & ~((1 << g.n) - 1):
        raise GraphError("push set contains out-of-range vertices")
    result = 0
    for comp in g.components():
        part = s & comp
        anchor = comp & -comp
        if part & anchor:
            part = comp & ~part
        result |= part
    return frozenset(bits(result))


def push_sets(g: OrientedGraph) -> Iterator[frozenset[int]]:
    """All canonical push sets of g, one per distinct pushed orientation.

    Yields 2^(n-c) sets in deterministic order (c = number of components).
    """
    comps = g.components()
    free = 0
    for comp in comps:
        free |= comp & ~(comp & -comp)
    free_bits = sorted(bits(free))
    for counter in range(1 << len(free_bits)):
        yield frozenset(
            v for i, v in enumerate(free_bits) if counter >> i & 1
        )


def push_class(g: OrientedGraph) -> set[OrientedGraph]:
    """All orientations push-equivalent to g (2^(n-c) of them)."""
    if g.n > 24:
        raise GraphError("push_class materialization is limited to n <= 24")
    return {g.push(mask_of(s)) for s in push_sets(g)}


# -- degeneracy ---------------------------------------------------------------


def degeneracy_order(
    g: OrientedGraph, d: int, remove_first: tuple[int, ...] = ()
) -> list[int] | None:
    """Ordering where every vertex has at most d neighbors of smaller index.

    Computed by repeated minimum-degree removal (lowest label on ties); the
    reversed removal sequence is returned.  ``remove_first`` forces specific
    vertices to be removed first, in the given order, provided their current
    degree allows it.  Returns None when g is not d-degenerate.
    """
    if d < 0:
        return None
    alive = (1 << g.n) - 1
    removal = []
    deg = {v: g.degree(v) for v in range(g.n)}
    forced = list(remove_first)
    while alive:
        if forced:
            v = forced.pop(0)
            if not alive >> v & 1 or deg[v] > d:
                return None
        else:
            v = min((u for u in bits(alive)), key=lambda u: (deg[u], u))
            if deg[v] > d:
                return None
        removal.append(v)
        alive &= ~(1 << v)
        for w in bits(g.adj(v) & alive):
            deg[w] -= 1
    removal.reverse()
    return removal


# -- arc-list text format -----------------------------------------------------


class GraphParseError(ValueError):
    """Arc-list parse failure; carries the 1-based offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_arclist(text: str) -> OrientedGraph:
    """Parse the arc-list format: header "n m", then m lines "u v" (arc u->v)."""
    header = None
    arcs = []
    expected = None
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphParseError(line_no, "expected header 'n m'")
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise GraphParseError(line_no, "header values must be integers")
            header = (n, m)
            expected = m
            continue
        if len(fields) != 2:
            raise GraphParseError(line_no, "expected arc 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(line_no, "arc endpoints must be integers")
        if len(arcs) >= expected:
            raise GraphParseError(line_no, "more arcs than declared in header")
        arcs.append((line_no, u, v))
    if header is None:
        raise GraphParseError(1, "empty input")
    n, m = header
    if len(arcs) != m:
        raise GraphParseError(1, f"header declares {m} arcs, found {len(arcs)}")
    out = [0] * n
    try:
        g_arcs = []
        for line_no, u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphParseError(line_no, f"arc ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise GraphParseError(line_no, f"loop at vertex {u}")
            if out[v] >> u & 1 or out[u] >> v & 1:
                raise GraphParseError(line_no, f"duplicate or opposite arc ({u},{v})")
            out[u] |= 1 << v
            g_arcs.append((u, v))
        return OrientedGraph.from_arcs(n, g_arcs)
    except GraphError as exc:
        raise GraphParseError(1, str(exc))


def format_arclist(g: OrientedGraph) -> str:
    """Serialize to the arc-list format with sorted arcs and LF endings."""
    lines = [f"{g.n} {g.arc_count()}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.arcs()))
    return "\n".join(lines) + "\n"
