"""Verification of matrix extension certificates and achievable-value tables.

A matrix certificate pins a family of precolored extensions: every defined
entry position must map all of the certificate's arcs onto arcs of the
target (pal7 unless stated otherwise) under the entry's push parity, and
the stated coverage / reachable-set / blocker claims must hold exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .certdata import MatrixCertificate, TypeTable, load_certificate, load_type_table
from .graphs import OrientedGraph, bits
from .tournaments import paley


@dataclass
class CertificateReport:
    name: str
    violations: list[str] = field(default_factory=list)
    entries_checked: int = 0
    free_push_entries: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _value_resolver(cert: MatrixCertificate):
    anchors = dict(cert.anchors)
    matrices = dict(cert.matrices)

    def value(vertex: str, branch: str | None, i: int, j: int):
        if vertex in anchors:
            return anchors[vertex]
        if vertex in matrices:
            return matrices[vertex][i][j]
        if branch is not None and vertex + branch in matrices:
            return matrices[vertex + branch][i][j]
        raise KeyError(f"unknown matrix or anchor name {vertex!r}")

    def is_matrix(vertex: str) -> bool:
        return vertex not in anchors

    return value, is_matrix


def verify_matrix_certificate(
    cert: MatrixCertificate, target: OrientedGraph | None = None
) -> CertificateReport:
    """Check every entry, coverage claim, and reachable-set claim of cert."""
    target = target if target is not None else paley(7)
    report = CertificateReport(cert.name)
    rows, cols = cert.shape()
    value, is_matrix = _value_resolver(cert)
    rules = {v: (axis, k) for v, axis, k in cert.push_rules}
    free = tuple(cert.push_free)

    def pushed(vertex: str, i: int, j: int, free_bits: dict[str, int]) -> int:
        if vertex in free_bits:
            return free_bits[vertex]
        rule = rules.get(vertex)
        if rule is None:
            return 0
        axis, k = rule
        return int((i + 1 if axis == "row" else j + 1) > k)

    for branch in cert.branches():
        arcs = [(t, h) for b, t, h in cert.arcs if b in (None, branch)]
        # anchor-to-anchor arcs are entry independent
        for tail, head in arcs:
            if not is_matrix(tail) and not is_matrix(head):
                if not target.has_arc(value(tail, branch, 0, 0), value(head, branch, 0, 0)):
                    report.violations.append(
                        f"branch {branch}: anchor arc {tail}->{head} is not a target arc"
                    )
        entry_arcs = [(t, h) for t, h in arcs if is_matrix(t) or is_matrix(h)]
        for i in range(rows):
            for j in range(cols):
                applicable = []
                skip_entry = False
                for tail, head in entry_arcs:
                    tv = value(tail, branch, i, j)
                    hv = value(head, branch, i, j)
                    if tv is None or hv is None:
                        continue
                    applicable.append((tail, head, tv, hv))
                if not applicable:
                    continue
                report.entries_checked += 1
                satisfied = None
                for assignment in range(1 << len(free)):
                    free_bits = {v: assignment >> k & 1 for k, v in enumerate(free)}
                    ok = True
                    for tail, head, tv, hv in applicable:
                        flip = pushed(tail, i, j, free_bits) ^ pushed(head, i, j, free_bits)
                        arc_ok = target.has_arc(hv, tv) if flip else target.has_arc(tv, hv)
                        if not arc_ok:
                            ok = False
                            break
                    if ok:
                        satisfied = assignment
                        break
                if satisfied is None:
                    report.violations.append(
                        f"branch {branch} entry ({i + 1},{j + 1}): no push state maps all arcs"
                    )
                elif satisfied:
                    report.free_push_entries.append((branch, i + 1, j + 1))

        # coverage claims
        for vertex, required in cert.covers:
            values = _entry_values(cert, vertex, branch)
            missing = [x for x in required if x not in values]
            if missing:
                report.violations.append(
                    f"branch {branch}: matrix {vertex} misses values {missing}"
                )
        for vertex, size in cert.cover_sizes:
            values = _entry_values(cert, vertex, branch)
            if len(values) != size:
                report.violations.append(
                    f"branch {branch}: matrix {vertex} carries {len(values)} values, expected {size}"
                )

    _check_reachable_sets(cert, target, report)
    return report


def _entry_values(cert: MatrixCertificate, vertex: str, branch: str | None) -> set[int]:
    matrices = dict(cert.matrices)
    name = vertex if vertex in matrices else vertex + (branch or "")
    grid = matrices[name]
    return {x for row in grid for x in row if x is not None}


def _check_reachable_sets(
    cert: MatrixCertificate, target: OrientedGraph, report: CertificateReport
) -> None:
    """Reachable-value sets: for each image m of the outside anchor of v4 and
    each edge sign, collect the v3 values over entries whose v4 value lies in
    the corresponding neighborhood of m.  The certificate states exactly
    which selections drop below 5 values, and their blockers."""
    if not cert.exceptions:
        return
    matrices = dict(cert.matrices)
    selector = matrices["v4"]
    stated = {(b, m, beta): set(vals) for b, m, beta, vals in cert.exceptions}
    blockers = {(b, m, beta): bl for b, m, beta, bl in cert.blockers}
    for branch in ("+", "-"):
        collector = matrices["v3" + branch]
        for m in range(target.n):
            for beta in ("+", "-"):
                nb = target.out[m] if beta == "+" else target.inn[m]
                reachable = {
                    collector[i][j]
                    for i in range(len(selector))
                    for j in range(len(selector[0]))
                    if selector[i][j] is not None
                    and nb >> selector[i][j] & 1
                    and collector[i][j] is not None
                }
                key = (branch, m, beta)
                if key in stated:
                    if reachable != stated[key]:
                        report.violations.append(
                            f"reachable set {key}: got {sorted(reachable)}, "
                            f"stated {sorted(stated[key])}"
                        )
                    want_blocker = blockers.get(key)
                    disjoint = [
                        (l, gamma)
                        for l in range(target.n)
                        for gamma in ("+", "-")
                        if not any(
                            (target.out[l] if gamma == "+" else target.inn[l]) >> x & 1
                            for x in reachable
                        )
                    ]
                    expect = [] if want_blocker is None else [want_blocker]
                    if disjoint != expect:
                        report.violations.append(
                            f"blocker {key}: got {disjoint}, stated {expect}"
                        )
                elif len(reachable) < 5:
                    report.violations.append(
                        f"unstated small reachable set {key}: {sorted(reachable)}"
                    )


def load_and_verify(name: str, target: OrientedGraph | None = None) -> CertificateReport:
    return verify_matrix_certificate(load_certificate(name), target)


# -- achievable-value type tables ---------------------------------------------


@dataclass
class TypeTableReport:
    name: str
    violations: list[str] = field(default_factory=list)
    computed: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations


def achievable_center_extensions(
    target: OrientedGraph, anchors: tuple[int, int], dirs: tuple[str, str, str]
) -> set[int]:
    """Values l such that the star a1-x, a2-x, b-x extends with image l on b,
    over both push states of the center x.  dirs are relative to x."""
    a1, a2 = anchors
    result: set[int] = set()

    def arc_ok(outside: int, x: int, direction: str) -> bool:
        return target.has_arc(outside, x) if direction == "in" else target.has_arc(x, outside)

    for x_pushed in (False, True):
        d = tuple(("out" if di == "in" else "in") for di in dirs) if x_pushed else dirs
        for x in range(target.n):
            if arc_ok(a1, x, d[0]) and arc_ok(a2, x, d[1]):
                result.update(
                    b for b in range(target.n) if arc_ok(b, x, d[2])
                )
    return result


def check_type_tables(
    target: OrientedGraph | None = None, table: TypeTable | None = None
) -> TypeTableReport:
    """Compare the exact achievable sets of every star type against the table."""
    target = target if target is not None else paley(7)
    table = table if table is not None else load_type_table("star-extension")
    report = TypeTableReport(table.name)
    setups = dict(table.setups)
    types = dict(table.types)
    for type_id, setup_name, expected in table.expectations:
        achieved = achievable_center_extensions(target, setups[setup_name], types[type_id])
        report.computed[(type_id, setup_name)] = frozenset(achieved)
        if achieved != set(expected):
            report.violations.append(
                f"type {type_id} with {setup_name}: achievable {sorted(achieved)}, "
                f"stated {sorted(expected)}"
            )
    return report
