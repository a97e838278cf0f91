"""Named builtin graphs usable anywhere a graph file is accepted.

fig2i is the cubic 6-vertex orientation with pushable chromatic number 6
(an orientation of K_{3,3}); fig2ii drops one of its edges, has maximum
average degree exactly 8/3, and pushable chromatic number 5.  Vertices
0,1,2 are the bottom row of the drawing and 3,4,5 the top row.
"""

from __future__ import annotations

from .graphs import OrientedGraph
from .tournaments import paley

_FIG2I_ARCS = [
    (3, 0), (0, 4), (0, 5),
    (1, 3), (4, 1), (1, 5),
    (2, 3), (2, 4), (5, 2),
]

# prism: outer triangle 0,1,2; inner triangle 3,4,5; spokes i -> i+3
_T3_ARCS = [
    (0, 1), (1, 2), (2, 0),
    (0, 3), (1, 4), (2, 5),
    (3, 4), (4, 5), (5, 3),
]

# cube: outer cycle 0..3, inner cycle 4..7, spokes i -> i+4
_T4_ARCS = [
    (0, 1), (0, 3), (3, 2), (2, 1),
    (0, 4), (1, 5), (2, 6), (3, 7),
    (4, 5), (5, 6), (6, 7), (7, 4),
]

T3_EDGES = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5), (3, 4), (4, 5), (3, 5)]
T4_EDGES = [
    (0, 1), (1, 2), (2, 3), (0, 3),
    (0, 4), (1, 5), (2, 6), (3, 7),
    (4, 5), (5, 6), (6, 7), (4, 7),
]


def _builtin_factories():
    return {
        "pal7": lambda: paley(7),
        "fig2i": lambda: OrientedGraph.from_arcs(6, _FIG2I_ARCS),
        "fig2ii": lambda: OrientedGraph.from_arcs(6, _FIG2I_ARCS[:8]),
        "t3": lambda: OrientedGraph.from_arcs(6, _T3_ARCS),
        "t4": lambda: OrientedGraph.from_arcs(8, _T4_ARCS),
        "k4": lambda: OrientedGraph.from_arcs(
            4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]
        ),
        "single-arc": lambda: OrientedGraph.from_arcs(2, [(0, 1)]),
        "single-vertex": lambda: OrientedGraph.from_arcs(1, []),
        "c3": lambda: OrientedGraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)]),
    }


BUILTIN_NAMES = tuple(sorted(_builtin_factories()))


def builtin_graph(name: str) -> OrientedGraph:
    factories = _builtin_factories()
    if name not in factories:
        raise KeyError(f"unknown builtin graph {name!r}")
    return factories[name]()
