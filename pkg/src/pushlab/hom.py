"""Homomorphism and pushable-homomorphism deciders, and exact chromatic
numbers over enumerated tournament targets.

The pushable decider has two interchangeable strategies: the naive one walks
every canonical push set of the source, the layered one runs a single search
into the doubled target whose second layer encodes "this vertex was pushed".
Their agreement is part of the test surface, and every witness is re-checked
arc by arc before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import OrientedGraph, bits, canonical_push_set, mask_of, push_sets
from .tournaments import TournamentError, enumerate_tournaments

MAX_EXACT_ORDER = 7


class EnumerationRangeError(TournamentError):
    """The chromatic number exceeds the enumerated tournament orders."""


def search_order(g: OrientedGraph) -> list[int]:
    """Deterministic connectivity-respecting vertex order: BFS from the
    lowest unvisited label, neighbors in ascending order."""
    order = []
    seen = 0
    for start in range(g.n):
        if seen >> start & 1:
            continue
        seen |= 1 << start
        queue = [start]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in bits(g.adj(v) & ~seen):
                seen |= 1 << w
                queue.append(w)
    return order


def find_hom(g: OrientedGraph, h: OrientedGraph) -> tuple[int, ...] | None:
    """Total homomorphism g -> h as an image tuple, or None.

    Backtracking over a BFS vertex order with candidate-set propagation to
    the assigned vertices' neighbors; lowest-index candidates first, so the
    returned witness is reproducible.
    """
    order = search_order(g)
    full = (1 << h.n) - 1
    cand = [full] * g.n
    image = [-1] * g.n

    def assign(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        options = cand[v]
        while options:
            low = options & -options
            x = low.bit_length() - 1
            options ^= low
            saved = []
            ok = True
            for w in bits(g.out[v]):
                if image[w] == -1:
                    saved.append((w, cand[w]))
                    cand[w] &= h.out[x]
                    if not cand[w]:
                        ok = False
                        break
            if ok:
                for w in bits(g.inn[v]):
                    if image[w] == -1:
                        saved.append((w, cand[w]))
                        cand[w] &= h.inn[x]
                        if not cand[w]:
                            ok = False
                            break
            if ok:
                image[v] = x
                if assign(pos + 1):
                    return True
                image[v] = -1
            for w, c in saved:
                cand[w] = c
        return False

    if assign(0):
        return tuple(image)
    return None


def is_hom(g: OrientedGraph, h: OrientedGraph, image: tuple[int, ...]) -> bool:
    """Check that image maps every arc of g onto an arc of h."""
    return all(h.has_arc(image[u], image[v]) for u, v in g.arcs())


@dataclass(frozen=True)
class PushHomWitness:
    """A verified pushable homomorphism: push these vertices, then map."""

    pushed: frozenset[int]
    image: tuple[int, ...]

    def verify(self, g: OrientedGraph, h: OrientedGraph) -> bool:
        return is_hom(g.push(mask_of(self.pushed)), h, self.image)


def anti_twin(h: OrientedGraph) -> OrientedGraph:
    """Double h with a layer bit recording the push state.

    Vertices (u, layer) are encoded as u + layer*n.  Same-layer pairs keep
    h's arcs, cross-layer pairs carry the reversed arcs, and the two copies
    of a vertex are non-adjacent, which keeps the result loopless and free
    of opposite arcs.
    """
    n = h.n
    arcs = []
    for u, v in h.arcs():
        arcs.append((u, v))
        arcs.append((u + n, v + n))
        arcs.append((v, u + n))
        arcs.append((v + n, u))
    return OrientedGraph.from_arcs(2 * n, arcs)


def exists_pushable_hom(
    g: OrientedGraph, h: OrientedGraph, strategy: str = "anti_twin"
) -> tuple[bool, PushHomWitness | None]:
    """Decide whether some member of g's push class maps into h.

    strategy "naive" tries find_hom on every canonically pushed copy of g;
    strategy "anti_twin" runs one find_hom into the doubled target and reads
    the push set off the layer bits.  The witness is re-verified before it
    is returned.
    """
    if strategy == "naive":
        if g.n > 24:
            raise ValueError("naive strategy limited to n <= 24")
        for pushed in push_sets(g):
            image = find_hom(g.push(mask_of(pushed)), h)
            if image is not None:
                witness = PushHomWitness(pushed, image)
                assert witness.verify(g, h)
                return (True, witness)
        return (False, None)
    if strategy == "anti_twin":
        image = find_hom(g, anti_twin(h))
        if image is None:
            return (False, None)
        pushed = canonical_push_set(g, (v for v, x in enumerate(image) if x >= h.n))
        witness = PushHomWitness(pushed, tuple(x % h.n for x in image))
        assert witness.verify(g, h)
        return (True, witness)
    raise ValueError(f"unknown strategy {strategy!r}")


# -- exact chromatic numbers ---------------------------------------------------


@dataclass(frozen=True)
class ChiWitness:
    """Exact chromatic value with the first witnessing tournament class."""

    value: int
    class_index: int
    target: OrientedGraph
    witness: PushHomWitness


def _scan_orders(g: OrientedGraph, pushable: bool, max_order: int) -> ChiWitness:
    for order in range(1, max_order + 1):
        for index, target in enumerate(enumerate_tournaments(order)):
            if pushable:
                found, witness = exists_pushable_hom(g, target)
                if found:
                    return ChiWitness(order, index, target, witness)
            else:
                image = find_hom(g, target)
                if image is not None:
                    witness = PushHomWitness(frozenset(), image)
                    return ChiWitness(order, index, target, witness)
    kind = "pushable" if pushable else "oriented"
    raise EnumerationRangeError(
        f"{kind} chromatic number exceeds enumeration range (> {max_order})"
    )


def chi_o_witness(g: OrientedGraph, max_order: int = MAX_EXACT_ORDER) -> ChiWitness:
    return _scan_orders(g, pushable=False, max_order=max_order)


def chi_p_witness(g: OrientedGraph, max_order: int = MAX_EXACT_ORDER) -> ChiWitness:
    return _scan_orders(g, pushable=True, max_order=max_order)


def chi_o(g: OrientedGraph, max_order: int = MAX_EXACT_ORDER) -> int:
    """Minimum order of a tournament admitting a homomorphism from g."""
    return chi_o_witness(g, max_order).value


def chi_p(g: OrientedGraph, max_order: int = MAX_EXACT_ORDER) -> int:
    """Minimum order of a tournament admitting a pushable homomorphism."""
    return chi_p_witness(g, max_order).value


def sandwich_check(g: OrientedGraph) -> tuple[int, int, bool]:
    """(chi_p, chi_o, chi_p <= chi_o <= 2 chi_p)."""
    p = chi_p(g)
    o = chi_o(g)
    return (p, o, p <= o <= 2 * p)
