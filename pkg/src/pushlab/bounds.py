"""Large-degree bound machinery at desk scale.

The probabilistic existence argument for good homomorphism targets reduces
to the sign of

    (t-1) * (2 ln(t-3) + 2 ln(t-1) + 2(t-1) ln 2 - 2(t-3))

which first turns negative at t = 29; the corresponding target order is
c = (t-3)(t-1)2^(t-1), an exact integer.  The full inequality chain behind
that final form is additionally re-verified step by step at small t, with
exact arithmetic wherever the quantities are rational and 80-digit floats
for the transcendental comparisons.

The constructive half is the greedy algorithm: walk a degeneracy order and
always pick an image avoiding the earlier-assigned neighbors of later
vertices.  A connected delta-regular graph loses one arc first and gets it
back through two fresh target vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import OrientedGraph, bits, degeneracy_order, mask_of, popcount
from .hom import PushHomWitness
from .tournaments import ft, has_property


@dataclass(frozen=True)
class BoundReport:
    t: int
    log_bad_event_bound: float
    order_c: int
    feasible: bool

    @property
    def log_per_factor(self) -> float:
        return self.log_bad_event_bound / (self.t - 1)


def eval_bound(t: int) -> BoundReport:
    """Evaluate the final-form failure-probability bound in log space."""
    if t < 5:
        raise ValueError("bound evaluation needs t >= 5")
    inner = (
        2 * math.log(t - 3)
        + 2 * math.log(t - 1)
        + 2 * (t - 1) * math.log(2)
        - 2 * (t - 3)
    )
    log_bound = (t - 1) * inner
    c = (t - 3) * (t - 1) * (1 << (t - 1))
    return BoundReport(t, log_bound, c, log_bound < 0)


def feasibility_threshold(t_max: int = 200) -> int:
    """Smallest t with a negative log bound."""
    t = 5
    while t <= t_max:
        if eval_bound(t).feasible:
            return t
        t += 1
    raise ValueError(f"no feasible t up to {t_max}")


def theorem_bounds(delta: int) -> tuple[int, int, int, int]:
    """(chi_p lower, chi_p upper, chi_o lower, chi_o upper) for max degree
    delta >= 29; odd delta reports the ceiling of the half-power lower
    bounds."""
    if delta < 29:
        raise ValueError("bounds stated for delta >= 29")
    p_lower = _ceil_power_of_sqrt2(delta - 2)
    p_upper = (delta - 3) * (delta - 1) * (1 << (delta - 1)) + 2
    o_lower = _ceil_power_of_sqrt2(delta)
    o_upper = (delta - 3) * (delta - 1) * (1 << delta) + 2
    return (p_lower, p_upper, o_lower, o_upper)


def _ceil_power_of_sqrt2(exponent: int) -> int:
    """ceil(2^(exponent/2)) in exact integer arithmetic."""
    if exponent % 2 == 0:
        return 1 << (exponent // 2)
    square = 1 << exponent
    root = math.isqrt(square)
    return root if root * root == square else root + 1


def bound_chain_crosscheck(t: int) -> list[str]:
    """Re-verify the inequality chain behind eval_bound at small t.

    Returns a list of violated step names (empty when every step holds).
    Rational steps are checked exactly; comparisons against exp use mpmath
    at 80 digits with a strictness guard.
    """
    if not 5 <= t <= 20:
        raise ValueError("cross-check supported for 5 <= t <= 20")
    import mpmath

    mpmath.mp.dps = 80
    bad = []
    c = (t - 3) * (t - 1) * (1 << (t - 1))
    w = 1 << (t - 2)
    x = Fraction(1, w)

    def binom(n: int, k: int) -> int:
        return math.comb(n, k)

    # per-bad-event terms: binomial form vs the c^i/i! relaxation
    lhs_terms = [
        Fraction(binom(c - (t - 1), i)) * Fraction(1, w**i)
        for i in range(t - 1)
    ]
    mid_terms = [
        Fraction(c**i, math.factorial(i)) * Fraction(1, w**i)
        for i in range(t - 1)
    ]
    if not all(a <= b for a, b in zip(lhs_terms, mid_terms)):
        bad.append("binomial-vs-power-term")

    # (1 - x)^(c - i - (t-1)) == (1 - x)^c * (w/(w-1))^(i + t - 1), then the
    # exponential comparison (1 - x)^c < exp(-c x)
    one_minus_x_pow_c = mpmath.power(mpmath.mpf(1) - mpmath.mpf(1) / w, c)
    exp_bound = mpmath.e ** (-mpmath.mpf(c) / w)
    if not one_minus_x_pow_c < exp_bound * (1 - mpmath.mpf("1e-40")):
        bad.append("exp-comparison")

    # dropping 1/i! and pulling out the constant factor
    ratio = Fraction(w, w - 1)
    full_terms = [
        m * ratio ** (i + t - 1) for i, m in enumerate(mid_terms)
    ]
    relaxed = [
        Fraction(c**i) * Fraction(2 ** ((t - 2) * (t - 1)), (w - 1) ** (i + t - 1))
        for i in range(t - 1)
    ]
    if not all(a <= b for a, b in zip(full_terms, relaxed)):
        bad.append("drop-factorial")
    pulled = [
        Fraction(c**i) * Fraction(2 ** ((t - 2) * (t - 1)), (w - 1) ** (t - 1))
        for i in range(t - 1)
    ]
    if not all(a <= b for a, b in zip(relaxed, pulled)):
        bad.append("pull-constant")

    # the constant is below 2, and the geometric sum collapses
    const = Fraction(2 ** ((t - 2) * (t - 1)), (w - 1) ** (t - 1))
    if not const < 2:
        bad.append("constant-below-2")
    geometric = sum(Fraction(c**i) for i in range(t - 1))
    if geometric != Fraction(c ** (t - 1) - 1, c - 1):
        bad.append("geometric-sum")
    if not 2 * geometric <= Fraction(c ** (t - 1)):
        bad.append("geometric-vs-power")

    # union bound side: binom(c, t-1) < c^(t-1)/(t-1)! and 2^(t-2) < (t-1)!
    if not Fraction(binom(c, t - 1)) < Fraction(c ** (t - 1), math.factorial(t - 1)):
        bad.append("union-binomial")
    if not (1 << (t - 2)) < math.factorial(t - 1):
        bad.append("two-power-vs-factorial")

    # final algebraic identity: c * 2^-(t-2) == 2 (t-3)(t-1) and the
    # (t-1)-th-power form of exp(-c 2^-(t-2)) * c^(2(t-1))
    if Fraction(c, w) != 2 * (t - 3) * (t - 1):
        bad.append("exponent-identity")
    direct = mpmath.e ** (-mpmath.mpf(c) / w) * mpmath.power(c, 2 * (t - 1))
    factored = mpmath.power(
        mpmath.mpf((t - 3) ** 2 * (t - 1) ** 2) * mpmath.power(2, 2 * (t - 1))
        / mpmath.e ** (2 * (t - 3)),
        t - 1,
    )
    if not mpmath.almosteq(direct, factored, rel_eps=mpmath.mpf("1e-60")):
        bad.append("final-form-identity")
    return bad


# -- greedy homomorphism along a degeneracy order --------------------------------


class GreedyPreconditionError(ValueError):
    pass


@dataclass
class GreedyResult:
    witness: PushHomWitness | None
    stuck_vertex: int | None
    order: list[int]

    @property
    def ok(self) -> bool:
        return self.witness is not None


def greedy_push_hom(
    g: OrientedGraph,
    target: OrientedGraph,
    delta: int,
    order: list[int] | None = None,
) -> GreedyResult:
    """Greedy pushable homomorphism along a (delta-1)-degeneracy order.

    Preconditions (checked): g connected with maximum degree <= delta and
    degeneracy <= delta-1; the target has the extension property
    P(j, (delta-j)(delta-2)+1) for every j in 1..delta-1.

    Maintained invariant, asserted at every step: the already-assigned
    neighbors of every unassigned vertex have pairwise distinct images, and
    the candidate count chain |D| >= f(|A'|) > (delta-2)|A| >= |images(B)|
    holds before each choice.
    """
    if not g.is_connected():
        raise GreedyPreconditionError("input graph must be connected")
    if g.max_degree() > delta:
        raise GreedyPreconditionError(f"maximum degree exceeds {delta}")
    if order is None:
        order = degeneracy_order(g, delta - 1)
    if order is None:
        raise GreedyPreconditionError(f"graph is not {delta - 1}-degenerate")
    for j in range(1, delta):
        if j >= target.n or not has_property(target, j, ft(delta, j)):
            raise GreedyPreconditionError(
                f"target lacks extension property for {j} assigned neighbors"
            )

    position = {v: i for i, v in enumerate(order)}
    image: dict[int, int] = {}
    pushed: set[int] = set()
    full = (1 << target.n) - 1

    for step, v in enumerate(order):
        earlier = [u for u in bits(g.adj(v)) if position[u] < step]
        later = [u for u in bits(g.adj(v)) if position[u] > step]

        plain = full
        flipped = full
        for u in earlier:
            arc_to_v = g.has_arc(u, v) ^ (u in pushed)
            if arc_to_v:
                plain &= target.out[image[u]]
                flipped &= target.inn[image[u]]
            else:
                plain &= target.inn[image[u]]
                flipped &= target.out[image[u]]
        candidates = plain | flipped

        blocked = 0
        blockers = set()
        for w in later:
            for u in bits(g.adj(w)):
                if position[u] < step:
                    blocked |= 1 << image[u]
                    blockers.add(u)

        # candidate-count chain backing termination
        assert popcount(candidates) >= ft(delta, len(earlier)), "capacity bound"
        assert ft(delta, len(earlier)) > (delta - 2) * len(later), "capacity margin"
        assert (delta - 2) * len(later) >= len(blockers), "blocker count"

        usable = candidates & ~blocked
        if not usable:
            return GreedyResult(None, v, order)
        x = (usable & -usable).bit_length() - 1
        image[v] = x
        if not plain >> x & 1:
            pushed.add(v)

        # distinct-images invariant for every future vertex
        for w in later:
            seen = [image[u] for u in bits(g.adj(w)) if u in image]
            assert len(seen) == len(set(seen)), "assigned neighbors share an image"

    mapping = tuple(image[v] for v in range(g.n))
    witness = PushHomWitness(frozenset(pushed), mapping)
    assert witness.verify(g, target)
    return GreedyResult(witness, None, order)


# -- regular graphs: delete one arc, add two fresh target vertices ---------------


@dataclass
class PatchResult:
    witness: PushHomWitness
    target: OrientedGraph
    deleted_arc: tuple[int, int]
    fresh_vertices: tuple[int, int]


def regular_patch(g: OrientedGraph, target: OrientedGraph, delta: int) -> PatchResult:
    """Pushable homomorphism for a connected delta-regular graph into the
    target extended by two fresh vertices.

    The lexicographically smallest arc uv is deleted; the remainder is
    mapped greedily along a degeneracy order that removes u, then v, first
    (so all of their remaining neighbors are assigned earlier and carry
    distinct images); u and v are then remapped onto fresh vertices x, y
    whose incident arcs are oriented exactly as the pushed source requires.
    """
    if not g.is_connected():
        raise GreedyPreconditionError("input graph must be connected")
    if any(d != delta for d in g.degrees()):
        raise GreedyPreconditionError(f"input graph is not {delta}-regular")
    u, v = min(g.arcs())
    reduced = OrientedGraph.from_arcs(
        g.n, (a for a in g.arcs() if a != (u, v))
    )
    order = degeneracy_order(reduced, delta - 1, remove_first=(u, v))
    if order is None:
        raise GreedyPreconditionError("arc-deleted graph is not (delta-1)-degenerate")
    result = greedy_push_hom(reduced, target, delta, order=order)
    if not result.ok:
        raise GreedyPreconditionError(f"greedy failure at vertex {result.stuck_vertex}")

    n_t = target.n
    x, y = n_t, n_t + 1
    mapping = list(result.witness.image)
    mapping[u], mapping[v] = x, y
    pushed_mask = mask_of(result.witness.pushed)
    pushed_g = g.push(pushed_mask)

    extra_arcs = set()
    for fresh, endpoint in ((x, u), (y, v)):
        for w in bits(g.adj(endpoint)):
            img = mapping[w]
            if pushed_g.has_arc(endpoint, w):
                extra_arcs.add((fresh, img))
            else:
                extra_arcs.add((img, fresh))
    extended = OrientedGraph.from_arcs(
        n_t + 2, list(target.arcs()) + sorted(extra_arcs)
    )
    witness = PushHomWitness(result.witness.pushed, tuple(mapping))
    assert witness.verify(g, extended)
    return PatchResult(witness, extended, (u, v), (x, y))
