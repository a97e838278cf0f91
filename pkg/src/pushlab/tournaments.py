"""Tournament construction, enumeration up to isomorphism, and the
neighborhood-extension properties that drive every upper-bound argument.

A tournament on q vertices built from quadratic residues (q prime, q = 3
mod 4) is the standard highly-symmetric homomorphism target; pal7 is the
seven-vertex one used throughout.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .graphs import OrientedGraph, bits, mask_of, popcount

ENUMERATION_COUNTS = {1: 1, 2: 1, 3: 2, 4: 4, 5: 12, 6: 56, 7: 456}


class TournamentError(ValueError):
    pass


def require_tournament(g: OrientedGraph) -> OrientedGraph:
    if not g.is_tournament():
        raise TournamentError("graph is not a tournament")
    return g


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def paley(q: int) -> OrientedGraph:
    """Tournament on Z/q with arc i->j iff j-i is a nonzero square mod q.

    Restricted to primes q = 3 (mod 4), q <= 61.
    """
    if not _is_prime(q):
        raise TournamentError(f"{q} is not prime")
    if q % 4 != 3:
        raise TournamentError(f"{q} is not congruent to 3 mod 4")
    if q > 61:
        raise TournamentError("paley construction limited to q <= 61")
    squares = {(x * x) % q for x in range(1, q)}
    return OrientedGraph.from_arcs(
        q, ((i, (i + s) % q) for i in range(q) for s in squares)
    )


def pal7() -> OrientedGraph:
    return paley(7)


# -- sign vectors and Property P(j, k) ---------------------------------------


def neighborhood(g: OrientedGraph, v: int, sign: str) -> int:
    """Bitmask of the +-neighbors (out) or --neighbors (in) of v."""
    return g.out[v] if sign == "+" else g.inn[v]


def set_neighborhood(g: OrientedGraph, mask: int, sign: str) -> int:
    """Union of sign-neighborhoods over a vertex set."""
    table = g.out if sign == "+" else g.inn
    acc = 0
    for v in bits(mask):
        acc |= table[v]
    return acc


def nbr_vector_set(
    g: OrientedGraph, vertices: tuple[int, ...], signs: tuple[str, ...]
) -> frozenset[int]:
    """Vertices agreeing with the sign vector on every listed vertex, unioned
    with those agreeing with the complemented vector."""
    if len(vertices) != len(signs):
        raise ValueError("vertex list and sign vector lengths differ")
    if len(set(vertices)) != len(vertices):
        raise ValueError("repeated vertices in the probe set")
    return frozenset(bits(_nbr_vector_mask(g, vertices, signs)))


def _nbr_vector_mask(g, vertices, signs) -> int:
    full = (1 << g.n) - 1
    agree = full
    agree_c = full
    for v, s in zip(vertices, signs):
        agree &= neighborhood(g, v, s)
        agree_c &= neighborhood(g, v, "-" if s == "+" else "+")
    return agree | agree_c


def has_property(g: OrientedGraph, j: int, k: int) -> bool:
    """Property P(j, k): every j-set with every sign vector has at least k
    common pattern neighbors.

    Only vectors starting with + are scanned; the complemented vector yields
    the same set.
    """
    if not 1 <= j < g.n:
        raise ValueError("need 1 <= j < number of vertices")
    for vertices in itertools.combinations(range(g.n), j):
        for tail in itertools.product("+-", repeat=j - 1):
            signs = ("+",) + tail
            if popcount(_nbr_vector_mask(g, vertices, signs)) < k:
                return False
    return True


def property_violations(g: OrientedGraph, j: int, k: int) -> list[tuple]:
    """All (vertices, signs, witness set) triples violating P(j, k)."""
    bad = []
    for vertices in itertools.combinations(range(g.n), j):
        for tail in itertools.product("+-", repeat=j - 1):
            signs = ("+",) + tail
            m = _nbr_vector_mask(g, vertices, signs)
            if popcount(m) < k:
                bad.append((vertices, signs, frozenset(bits(m))))
    return bad


def ft(t: int, j: int) -> int:
    """Extension-capacity value (t-j)(t-2)+1."""
    if not 0 <= j <= t - 1:
        raise ValueError(f"j={j} outside 0..{t - 1}")
    return (t - j) * (t - 2) + 1


class RecursionCheck:
    """Outcome of one doubling-step check P(j,k) => P(j-1, 2k)."""

    def __init__(self, premise: bool, conclusion: bool):
        self.premise = premise
        self.conclusion = conclusion

    @property
    def vacuous(self) -> bool:
        return not self.premise

    @property
    def holds(self) -> bool:
        return (not self.premise) or self.conclusion

    @property
    def non_vacuous(self) -> bool:
        return self.premise and self.conclusion


def check_property_recursion(g: OrientedGraph, j: int, k: int) -> RecursionCheck:
    """Check directly on g that P(j, k) implies P(j-1, 2k)."""
    if not 2 <= j < g.n:
        raise ValueError("need 2 <= j < number of vertices")
    premise = has_property(g, j, k)
    conclusion = has_property(g, j - 1, 2 * k) if premise else False
    return RecursionCheck(premise, conclusion)


# -- two- and three-step neighborhood closure --------------------------------


def check_closure_equations(g: OrientedGraph) -> dict:
    """Verify the iterated-neighborhood identities on g.

    Two-step: N^a(N^b(i)) equals V minus {i} when a == b and all of V
    otherwise; three-step: N^a(N^b(N^c(i))) is all of V.  Returns the lists
    of violating (i, signs) tuples (empty on pal7).
    """
    full = (1 << g.n) - 1
    two_step_bad = []
    three_step_bad = []
    for i in range(g.n):
        for a, b in itertools.product("+-", repeat=2):
            got = set_neighborhood(g, neighborhood(g, i, b), a)
            want = full ^ (1 << i) if a == b else full
            if got != want:
                two_step_bad.append((i, a + b))
        for a, b, c in itertools.product("+-", repeat=3):
            got = set_neighborhood(
                g, set_neighborhood(g, neighborhood(g, i, c), b), a
            )
            if got != full:
                three_step_bad.append((i, a + b + c))
    return {
        "two_step_total": g.n * 4,
        "three_step_total": g.n * 8,
        "two_step_violations": two_step_bad,
        "three_step_violations": three_step_bad,
        "ok": not two_step_bad and not three_step_bad,
    }


# -- isomorphism machinery ----------------------------------------------------


def canonical_form(g: OrientedGraph) -> tuple[int, ...]:
    """Canonical key of a tournament: the lexicographically smallest
    adjacency bit-string over all vertex relabelings.

    Bit order is by columns: placing vertex k contributes the k bits
    (arc placed[i] -> placed[k]) for i < k; in a tournament those bits
    determine every arc.  Backtracking with prefix pruning keeps this
    usable through n = 8.
    """
    n = g.n
    out = g.out
    best: list[int] | None = None

    def extend(placed: list[int], remaining: list[int], levels: list[int]):
        nonlocal best
        k = len(placed)
        if k == n:
            if best is None or levels < best:
                best = list(levels)
            return
        if k == 0:
            for v in remaining:
                extend([v], [u for u in remaining if u != v], levels)
            return
        options = []
        for v in remaining:
            word = 0
            for i, u in enumerate(placed):
                word |= (out[u] >> v & 1) << i
            options.append((word, v))
        options.sort()
        for word, v in options:
            levels.append(word)
            if best is None or levels <= best[: len(levels)]:
                extend(placed + [v], [u for u in remaining if u != v], levels)
            levels.pop()

    extend([], list(range(n)), [])
    assert best is not None
    return tuple(best)


def from_canonical_form(n: int, key: tuple[int, ...]) -> OrientedGraph:
    """Rebuild the tournament encoded by a canonical key."""
    arcs = []
    for k in range(1, n):
        word = key[k - 1]
        for i in range(k):
            arcs.append((i, k) if word >> i & 1 else (k, i))
    return OrientedGraph.from_arcs(n, arcs)


def are_isomorphic_bruteforce(a: OrientedGraph, b: OrientedGraph) -> bool:
    """Isomorphism by scanning all vertex bijections (small n only)."""
    if a.n != b.n:
        return False
    for perm in itertools.permutations(range(a.n)):
        if all(b.has_arc(perm[u], perm[v]) for u, v in a.arcs()):
            return True
    return False


def automorphisms(g: OrientedGraph) -> list[tuple[int, ...]]:
    """All arc-preserving vertex bijections, by score-pruned backtracking."""
    n = g.n
    scores = [popcount(g.out[v]) for v in range(n)]
    in_scores = [popcount(g.inn[v]) for v in range(n)]
    result = []

    def place(perm: list[int], used: set[int]):
        v = len(perm)
        if v == n:
            result.append(tuple(perm))
            return
        for image in range(n):
            if image in used:
                continue
            if scores[image] != scores[v] or in_scores[image] != in_scores[v]:
                continue
            ok = True
            for u in range(v):
                forward = g.out[u] >> v & 1
                if (g.out[perm[u]] >> image & 1) != forward:
                    ok = False
                    break
                backward = g.out[v] >> u & 1
                if (g.out[image] >> perm[u] & 1) != backward:
                    ok = False
                    break
            if ok:
                perm.append(image)
                used.add(image)
                place(perm, used)
                perm.pop()
                used.remove(image)

    place([], set())
    return result


def check_transitivity(g: OrientedGraph) -> tuple[bool, bool]:
    """(vertex_transitive, arc_transitive) via the automorphism group."""
    if g.n > 12:
        raise TournamentError("transitivity check limited to order <= 12")
    autos = automorphisms(g)
    vertex_orbit = {perm[0] for perm in autos}
    vertex_transitive = len(vertex_orbit) == g.n
    arcs = list(g.arcs())
    if not arcs:
        return (vertex_transitive, True)
    u0, v0 = arcs[0]
    arc_orbit = {(perm[u0], perm[v0]) for perm in autos}
    return (vertex_transitive, len(arc_orbit) == len(arcs))


# -- enumeration up to isomorphism --------------------------------------------


@lru_cache(maxsize=None)
def _tournament_keys(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((),)
    seen = set()
    for key in _tournament_keys(n - 1):
        base = from_canonical_form(n - 1, key)
        base_arcs = list(base.arcs())
        for pattern in range(1 << (n - 1)):
            arcs = list(base_arcs)
            for v in range(n - 1):
                if pattern >> v & 1:
                    arcs.append((n - 1, v))
                else:
                    arcs.append((v, n - 1))
            seen.add(canonical_form(OrientedGraph.from_arcs(n, arcs)))
    return tuple(sorted(seen))


def enumerate_tournaments(n: int, allow_large: bool = False) -> list[OrientedGraph]:
    """One tournament per isomorphism class, in canonical order.

    n is capped at 7 unless ``allow_large`` admits the long n = 8 run.
    """
    limit = 8 if allow_large else 7
    if not 1 <= n <= limit:
        raise TournamentError(f"enumeration supported for 1 <= n <= {limit}")
    return [from_canonical_form(n, key) for key in _tournament_keys(n)]


def tournament_class_index(g: OrientedGraph) -> int:
    """Canonical index of g's isomorphism class among order-n tournaments."""
    require_tournament(g)
    return _tournament_keys(g.n).index(canonical_form(g))
