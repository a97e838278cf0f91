"""Parsing and serialization of the plain-text certificate data files.

See data/FORMAT.md for the grammar.  The bundled files live in the package's
data directory; the PUSHLAB_DATA environment variable overrides that
location.  Parsing and serialization round-trip exactly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from pathlib import Path

_EMPTY = None


def data_dir() -> Path:
    override = os.environ.get("PUSHLAB_DATA")
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


def _blocks(text: str) -> list[list[str]]:
    blocks: list[list[str]] = []
    current: list[str] = []
    for raw in text.split("\n"):
        line = raw.strip()
        if not line or line.startswith("#"):
            if current and not line:
                blocks.append(current)
                current = []
            continue
        current.append(line)
    if current:
        blocks.append(current)
    return blocks


# -- configurations -----------------------------------------------------------


@dataclass(frozen=True)
class Configuration:
    """Black/white pattern: blacks carry their full depicted neighborhood."""

    name: str
    blacks: tuple[str, ...]
    whites: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def vertex_names(self) -> tuple[str, ...]:
        return self.blacks + self.whites

    def degree(self, v: str) -> int:
        return sum(1 for a, b in self.edges if v in (a, b))


def parse_configurations(text: str) -> dict[str, Configuration]:
    configs = {}
    for block in _blocks(text):
        name = None
        blacks: tuple[str, ...] = ()
        whites: tuple[str, ...] = ()
        edges = []
        for line in block:
            fields = line.split()
            if fields[0] == "config":
                name = fields[1]
            elif fields[0] == "black":
                blacks = tuple(fields[1:])
            elif fields[0] == "white":
                whites = tuple(fields[1:])
            elif fields[0] == "edge":
                edges.append((fields[1], fields[2]))
            else:
                raise ValueError(f"unknown configuration line: {line}")
        if name is None:
            raise ValueError("configuration block without a name")
        configs[name] = Configuration(name, blacks, whites, tuple(edges))
    return configs


def format_configurations(configs: dict[str, Configuration]) -> str:
    parts = []
    for cfg in configs.values():
        lines = [f"config {cfg.name}"]
        lines.append("black " + " ".join(cfg.blacks))
        lines.append("white " + " ".join(cfg.whites))
        lines.extend(f"edge {a} {b}" for a, b in cfg.edges)
        parts.append("\n".join(lines))
    return "\n\n".join(parts) + "\n"


def load_configurations() -> dict[str, Configuration]:
    return parse_configurations((data_dir() / "configurations.txt").read_text())


# -- matrix certificates --------------------------------------------------------


Grid = tuple[tuple[int | None, ...], ...]


@dataclass(frozen=True)
class MatrixCertificate:
    """Named partial matrices plus the arcs and claims they must satisfy."""

    name: str
    anchors: tuple[tuple[str, int], ...]
    matrices: tuple[tuple[str, Grid], ...]
    arcs: tuple[tuple[str | None, str, str], ...]  # (branch, tail, head)
    push_rules: tuple[tuple[str, str, int], ...]  # (vertex, row|col, threshold)
    push_free: tuple[str, ...]
    covers: tuple[tuple[str, tuple[int, ...]], ...]
    cover_sizes: tuple[tuple[str, int], ...]
    exceptions: tuple[tuple[str, int, str, tuple[int, ...]], ...]
    blockers: tuple[tuple[str, int, str, tuple[int, str] | None], ...]

    def matrix(self, name: str) -> Grid:
        for mname, grid in self.matrices:
            if mname == name:
                return grid
        raise KeyError(name)

    def branches(self) -> tuple[str, ...]:
        if any(b is not None for b, _, _ in self.arcs):
            return ("+", "-")
        return (None,)

    def shape(self) -> tuple[int, int]:
        grids = [g for _, g in self.matrices]
        shapes = {(len(g), len(g[0])) for g in grids}
        if len(shapes) != 1:
            raise ValueError(f"matrices of {self.name} have mismatched shapes")
        return shapes.pop()

    def with_entry(self, matrix_name: str, i: int, j: int, value: int | None):
        """Copy with one entry replaced (0-based indices); for mutation tests."""
        new_matrices = []
        for mname, grid in self.matrices:
            if mname == matrix_name:
                rows = [list(r) for r in grid]
                rows[i][j] = value
                grid = tuple(tuple(r) for r in rows)
            new_matrices.append((mname, grid))
        if all(m[0] != matrix_name for m in self.matrices):
            raise KeyError(matrix_name)
        return replace(self, matrices=tuple(new_matrices))

    def with_flipped_arc(self, index: int):
        arcs = list(self.arcs)
        branch, tail, head = arcs[index]
        arcs[index] = (branch, head, tail)
        return replace(self, arcs=tuple(arcs))


def parse_certificate(text: str) -> MatrixCertificate:
    name = None
    anchors = []
    matrices: list[tuple[str, Grid]] = []
    arcs = []
    push_rules = []
    push_free = []
    covers = []
    cover_sizes = []
    exceptions = []
    blockers = []
    lines = [
        line.strip()
        for line in text.split("\n")
        if line.strip() and not line.strip().startswith("#")
    ]
    i = 0
    while i < len(lines):
        fields = lines[i].split()
        key = fields[0]
        if key == "cert":
            name = fields[1]
        elif key == "anchor":
            anchors.append((fields[1], int(fields[2])))
        elif key == "matrix":
            mname = fields[1]
            rows = []
            i += 1
            while i < len(lines) and all(
                tok == "." or tok.isdigit() for tok in lines[i].split()
            ):
                row = tuple(
                    _EMPTY if tok == "." else int(tok) for tok in lines[i].split()
                )
                rows.append(row)
                i += 1
            if not rows:
                raise ValueError(f"matrix {mname} has no rows")
            matrices.append((mname, tuple(rows)))
            continue
        elif key == "arc":
            arcs.append((None, fields[1], fields[2]))
        elif key == "branch-arc":
            arcs.append((fields[1], fields[2], fields[3]))
        elif key == "push-rule":
            push_rules.append((fields[1], fields[2], int(fields[3])))
        elif key == "push-free":
            push_free.append(fields[1])
        elif key == "cover":
            covers.append((fields[1], tuple(int(x) for x in fields[2:])))
        elif key == "cover-size":
            cover_sizes.append((fields[1], int(fields[2])))
        elif key == "exception":
            exceptions.append(
                (fields[1], int(fields[2]), fields[3], tuple(int(x) for x in fields[4:]))
            )
        elif key == "blocker":
            if fields[4] == "none":
                blockers.append((fields[1], int(fields[2]), fields[3], None))
            else:
                blockers.append(
                    (fields[1], int(fields[2]), fields[3], (int(fields[4]), fields[5]))
                )
        else:
            raise ValueError(f"unknown certificate line: {lines[i]}")
        i += 1
    if name is None:
        raise ValueError("certificate block without a name")
    return MatrixCertificate(
        name,
        tuple(anchors),
        tuple(matrices),
        tuple(arcs),
        tuple(push_rules),
        tuple(push_free),
        tuple(covers),
        tuple(cover_sizes),
        tuple(exceptions),
        tuple(blockers),
    )


def format_certificate(cert: MatrixCertificate) -> str:
    lines = [f"cert {cert.name}"]
    lines.extend(f"anchor {v} {x}" for v, x in cert.anchors)
    for mname, grid in cert.matrices:
        lines.append(f"matrix {mname}")
        for row in grid:
            lines.append(" ".join("." if x is None else str(x) for x in row))
    for branch, tail, head in cert.arcs:
        if branch is None:
            lines.append(f"arc {tail} {head}")
        else:
            lines.append(f"branch-arc {branch} {tail} {head}")
    lines.extend(f"push-rule {v} {axis} {k}" for v, axis, k in cert.push_rules)
    lines.extend(f"push-free {v}" for v in cert.push_free)
    for v, values in cert.covers:
        lines.append(f"cover {v} " + " ".join(map(str, values)))
    lines.extend(f"cover-size {v} {k}" for v, k in cert.cover_sizes)
    for branch, m, beta, values in cert.exceptions:
        lines.append(f"exception {branch} {m} {beta} " + " ".join(map(str, values)))
    for branch, m, beta, blocker in cert.blockers:
        if blocker is None:
            lines.append(f"blocker {branch} {m} {beta} none")
        else:
            lines.append(f"blocker {branch} {m} {beta} {blocker[0]} {blocker[1]}")
    return "\n".join(lines) + "\n"


def load_certificate(name: str) -> MatrixCertificate:
    return parse_certificate((data_dir() / f"cert-{name}.txt").read_text())


# -- case tables ----------------------------------------------------------------


@dataclass(frozen=True)
class CaseTable:
    name: str
    outer: tuple[int, ...]
    slots: tuple[tuple[str, tuple[int, ...]], ...]
    cases: tuple[tuple[int, ...], ...]


def parse_case_table(text: str) -> CaseTable:
    name = None
    outer: tuple[int, ...] = ()
    slots = []
    cases = []
    for block in _blocks(text):
        for line in block:
            fields = line.split()
            if fields[0] == "cases":
                name = fields[1]
            elif fields[0] == "outer":
                outer = tuple(int(x) for x in fields[1:])
            elif fields[0] == "slots":
                slots.append((fields[1], tuple(int(x) for x in fields[2:])))
            elif fields[0] == "case":
                cases.append(tuple(int(x) for x in fields[1:]))
            else:
                raise ValueError(f"unknown case-table line: {line}")
    if name is None:
        raise ValueError("case table without a name")
    return CaseTable(name, outer, tuple(slots), tuple(cases))


def load_case_table(name: str) -> CaseTable:
    return parse_case_table((data_dir() / f"cases-{name}.txt").read_text())


# -- type tables ------------------------------------------------------------------


@dataclass(frozen=True)
class TypeTable:
    name: str
    setups: tuple[tuple[str, tuple[int, int]], ...]
    types: tuple[tuple[int, tuple[str, str, str]], ...]
    expectations: tuple[tuple[int, str, tuple[int, ...]], ...]


def parse_type_table(text: str) -> TypeTable:
    name = None
    setups = []
    types = []
    expectations = []
    for block in _blocks(text):
        for line in block:
            fields = line.split()
            if fields[0] == "types":
                name = fields[1]
            elif fields[0] == "setup":
                setups.append((fields[1], (int(fields[2]), int(fields[3]))))
            elif fields[0] == "type":
                types.append((int(fields[1]), (fields[2], fields[3], fields[4])))
            elif fields[0] == "expect":
                expectations.append(
                    (int(fields[1]), fields[2], tuple(int(x) for x in fields[3:]))
                )
            else:
                raise ValueError(f"unknown type-table line: {line}")
    if name is None:
        raise ValueError("type table without a name")
    return TypeTable(name, tuple(setups), tuple(types), tuple(expectations))


def load_type_table(name: str) -> TypeTable:
    return parse_type_table((data_dir() / f"types-{name}.txt").read_text())
