"""Seeded randomized property corpora shared by the CLI and the test suite.

Every runner generates `count` instances from a seed, checks one property,
and reports the violations (expected: none).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import greedy_push_hom, regular_patch
from .density import mad
from .graphs import OrientedGraph, format_arclist
from .hom import exists_pushable_hom, sandwich_check
from .randgen import (
    SplitMix64,
    random_connected_oriented,
    random_cubic_connected,
    random_pair,
    random_sparse_graph,
    random_subcubic_two_degenerate,
)
from .sparse_configs import discharge_run, find_configuration
from .tournaments import paley


@dataclass
class CorpusReport:
    kind: str
    count: int
    seed: int
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    dumps: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def flag(self, index: int, message: str, g: OrientedGraph | None = None) -> None:
        self.violations.append(f"instance {index}: {message}")
        if g is not None:
            self.dumps.append(format_arclist(g))


def run_sandwich(count: int, seed: int) -> CorpusReport:
    """chi_p <= chi_o <= 2 chi_p on random connected oriented graphs, n <= 8."""
    rng = SplitMix64(seed)
    report = CorpusReport("sandwich", count, seed)
    for i in range(count):
        g = random_connected_oriented(rng, 8)
        p, o, ok = sandwich_check(g)
        report.checked += 1
        if not ok:
            report.flag(i, f"chi_p={p}, chi_o={o}", g)
    return report


def run_strategy_agreement(count: int, seed: int) -> CorpusReport:
    """Naive and layered pushable-homomorphism deciders agree."""
    rng = SplitMix64(seed)
    report = CorpusReport("strategy-agreement", count, seed)
    for i in range(count):
        g, h = random_pair(rng)
        naive, _ = exists_pushable_hom(g, h, strategy="naive")
        layered, _ = exists_pushable_hom(g, h, strategy="anti_twin")
        report.checked += 1
        if naive != layered:
            report.flag(i, f"naive={naive}, anti_twin={layered}", g)
    return report


def run_greedy(count: int, seed: int) -> CorpusReport:
    """Greedy algorithm succeeds on subcubic 2-degenerate inputs into pal7."""
    rng = SplitMix64(seed)
    target = paley(7)
    report = CorpusReport("greedy", count, seed)
    for i in range(count):
        g = random_subcubic_two_degenerate(rng, 14)
        result = greedy_push_hom(g, target, 3)
        report.checked += 1
        if not result.ok:
            report.flag(i, f"stuck at vertex {result.stuck_vertex}", g)
        elif not result.witness.verify(g, target):
            report.flag(i, "witness failed re-verification", g)
    return report


def run_regular_patch(count: int, seed: int) -> CorpusReport:
    """Arc-deletion patch succeeds on random connected cubic graphs."""
    rng = SplitMix64(seed)
    target = paley(7)
    report = CorpusReport("regular-patch", count, seed)
    for i in range(count):
        g = random_cubic_connected(rng, 12)
        report.checked += 1
        try:
            res = regular_patch(g, target, 3)
        except ValueError as exc:
            report.flag(i, str(exc), g)
            continue
        if res.target.n != target.n + 2 or not res.witness.verify(g, res.target):
            report.flag(i, "patched witness failed re-verification", g)
    return report


def run_mad_cover(count: int, seed: int) -> CorpusReport:
    """Graphs with mad < 3 contain a sparse configuration; discharging
    conserves total charge on each."""
    rng = SplitMix64(seed)
    report = CorpusReport("mad-cover", count, seed)
    for i in range(count):
        g = random_sparse_graph(rng, 12)
        report.checked += 1
        if mad(g) >= Fraction(3):
            report.flag(i, "generator produced mad >= 3", g)
            continue
        if find_configuration(g) is None:
            report.flag(i, "no sparse configuration found", g)
        run = discharge_run(g)
        if not run["conserved"]:
            report.flag(i, f"charge not conserved: {run['total']}", g)
    return report


def run_cubic_to_pal7(count: int, seed: int) -> CorpusReport:
    """Random connected cubic graphs map pushably into pal7 via the engine."""
    rng = SplitMix64(seed)
    target = paley(7)
    report = CorpusReport("cubic-pal7", count, seed)
    for i in range(count):
        g = random_cubic_connected(rng, 12)
        found, witness = exists_pushable_hom(g, target)
        report.checked += 1
        if not found or not witness.verify(g, target):
            report.flag(i, "no verified pushable homomorphism", g)
    return report


CORPUS_RUNNERS = {
    "sandwich": run_sandwich,
    "greedy": run_greedy,
    "mad-cover": run_mad_cover,
    "strategy-agreement": run_strategy_agreement,
    "regular-patch": run_regular_patch,
    "cubic-pal7": run_cubic_to_pal7,
}
