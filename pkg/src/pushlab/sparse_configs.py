"""Unavoidable low-degree configurations and the charge-redistribution check.

Every connected graph (n >= 2) with maximum average degree below 3 contains
one of five local patterns, scanned here in a fixed order:

  i    a vertex of degree 1
  ii   two adjacent vertices of degree 2
  iii  a degree-3 vertex adjacent to a degree-2 vertex
  iv   a degree-4 vertex with at least three degree-2 neighbors
  v    a degree-5 vertex with at least four degree-2 neighbors

The degree conditions apply to the pattern's fully-known (black) vertices;
their outside attachments are unconstrained and may coincide.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import OrientedGraph, bits

SPARSE_CONFIG_IDS = ("i", "ii", "iii", "iv", "v")


def find_configuration(g: OrientedGraph) -> tuple[str, tuple[int, ...]] | None:
    """First sparse configuration present in g, with its witness vertices.

    Scan order is i, ii, iii, iv, v with lowest-index witnesses; returns
    None when no configuration occurs.
    """
    deg = g.degrees()

    for v in range(g.n):
        if deg[v] == 1:
            return ("i", (v, next(bits(g.adj(v)))))

    for v in range(g.n):
        if deg[v] != 2:
            continue
        for w in bits(g.adj(v)):
            if deg[w] == 2 and w > v:
                return ("ii", (v, w))

    for v in range(g.n):
        if deg[v] != 3:
            continue
        for w in bits(g.adj(v)):
            if deg[w] == 2:
                return ("iii", (v, w))

    for target, need, label in ((4, 3, "iv"), (5, 4, "v")):
        for v in range(g.n):
            if deg[v] != target:
                continue
            low = tuple(w for w in bits(g.adj(v)) if deg[w] == 2)
            if len(low) >= need:
                return (label, (v,) + low[:need])

    return None


def discharge_run(g: OrientedGraph) -> dict:
    """Assign charge deg(v) to every vertex, then let each vertex of degree
    at least 4 send 1/2 to each degree-2 neighbor.

    Returns initial and final charges plus the (conserved) total.
    """
    deg = g.degrees()
    charge = [Fraction(d) for d in deg]
    final = list(charge)
    for v in range(g.n):
        if deg[v] < 4:
            continue
        for w in bits(g.adj(v)):
            if deg[w] == 2:
                final[v] -= Fraction(1, 2)
                final[w] += Fraction(1, 2)
    total = sum(final, Fraction(0))
    return {
        "initial": charge,
        "final": final,
        "total": total,
        "conserved": total == sum(deg),
    }
