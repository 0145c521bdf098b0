"""File formats: edge lists, distance matrices and repair deltas.

All three formats carry exact rationals: decimal strings are converted
digit-wise (never through binary floating point) and serialized back as exact
decimals when the denominator allows, as ``p/q`` otherwise.  Canonical
serialization is deterministic, so ``serialize(parse(serialize(x)))`` is
byte-identical to ``serialize(x)``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .graphs import (
    InputFormatError,
    OmegaClass,
    RepairDelta,
    WeightedGraph,
    edge_key,
)


def parse_exact(token: str) -> Fraction:
    """Exact rational from a decimal or p/q string."""
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"bad number {token!r}: {exc}") from None


def format_exact(value: Fraction) -> str:
    """Shortest exact decimal form, falling back to p/q."""
    num, den = value.numerator, value.denominator
    if den == 1:
        return str(num)
    reduced = den
    twos = fives = 0
    while reduced % 2 == 0:
        reduced //= 2
        twos += 1
    while reduced % 5 == 0:
        reduced //= 5
        fives += 1
    if reduced != 1:
        return f"{num}/{den}"
    digits = max(twos, fives)
    scaled = abs(num) * 10 ** digits // den
    whole, frac = divmod(scaled, 10 ** digits)
    sign = "-" if num < 0 else ""
    return f"{sign}{whole}.{str(frac).zfill(digits)}"


# -- edge lists ---------------------------------------------------------------


def parse_edge_list(text: str) -> WeightedGraph:
    """Lines of ``u v w``; '#' starts a comment, blank lines are skipped.

    Vertex ids are 0-based; the vertex count is one past the largest id seen.
    """
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise InputFormatError(f"line {lineno}: expected 'u v w', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputFormatError(f"line {lineno}: vertex ids must be integers") from None
        if u < 0 or v < 0:
            raise InputFormatError(f"line {lineno}: vertex ids must be nonnegative")
        if u == v:
            raise InputFormatError(f"line {lineno}: self-loop {u}")
        key = edge_key(u, v)
        if key in seen:
            raise InputFormatError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        w = parse_exact(parts[2])
        if w < 0:
            raise InputFormatError(f"line {lineno}: negative weight {parts[2]}")
        edges.append((u, v, w))
    n = 1 + max((max(u, v) for u, v, _ in edges), default=-1)
    return WeightedGraph(n, edges)


def serialize_edge_list(g: WeightedGraph) -> str:
    lines = [f"{u} {v} {format_exact(g.weight(u, v))}" for (u, v) in g.edges]
    return "\n".join(lines) + ("\n" if lines else "")


# -- distance matrices --------------------------------------------------------


def parse_matrix_csv(text: str) -> WeightedGraph:
    """Square CSV; empty cells or "nan" mark missing edges.

    The diagonal must be zero and both values and the missing-cell pattern must
    be symmetric.  Missing cells make the graph non-complete, which is how
    partial distance information enters the solvers.
    """
    reader = csv.reader(io.StringIO(text))
    cells = [row for row in reader if row]
    n = len(cells)
    parsed: list[list[Fraction | None]] = []
    for i, row in enumerate(cells):
        if len(row) != n:
            raise InputFormatError(f"row {i}: expected {n} columns, got {len(row)}")
        out_row: list[Fraction | None] = []
        for j, cell in enumerate(row):
            token = cell.strip()
            if token == "" or token.lower() == "nan":
                out_row.append(None)
                continue
            value = parse_exact(token)
            if value < 0:
                raise InputFormatError(f"cell ({i},{j}): negative entry {token}")
            out_row.append(value)
        parsed.append(out_row)
    for i in range(n):
        if parsed[i][i] != 0:
            raise InputFormatError(f"diagonal cell ({i},{i}) must be 0")
        for j in range(i + 1, n):
            if parsed[i][j] != parsed[j][i]:
                raise InputFormatError(f"cells ({i},{j})/({j},{i}) are not symmetric")
    edges = [(i, j, parsed[i][j]) for i in range(n) for j in range(i + 1, n)
             if parsed[i][j] is not None]
    return WeightedGraph(n, edges)


def serialize_matrix_csv(g: WeightedGraph) -> str:
    n = g.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append("0")
            elif g.has_edge(i, j):
                row.append(format_exact(g.weight(i, j)))
            else:
                row.append("")
        rows.append(",".join(row))
    return "\n".join(rows) + ("\n" if rows else "")


# -- repair deltas ------------------------------------------------------------


@dataclass(frozen=True)
class DeltaDocument:
    """A repair delta plus the summary facts recorded next to it."""

    delta: RepairDelta
    is_metric_after: bool


def serialize_delta_tsv(doc: DeltaDocument) -> str:
    lines = [f"{u}\t{v}\t{format_exact(value)}" for (u, v), value in doc.delta.items()]
    lines.append(
        f"# omega={doc.delta.omega.value} support_size={doc.delta.norm0()} "
        f"is_metric_after={str(doc.is_metric_after).lower()}")
    return "\n".join(lines) + "\n"


def parse_delta_tsv(text: str) -> DeltaDocument:
    entries = {}
    summary = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            summary = dict(
                item.split("=", 1) for item in line[1:].split() if "=" in item)
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise InputFormatError(f"line {lineno}: expected 'u<TAB>v<TAB>delta'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputFormatError(f"line {lineno}: vertex ids must be integers") from None
        entries[(u, v)] = parse_exact(parts[2])
    if summary is None or "omega" not in summary:
        raise InputFormatError("missing trailing summary record with omega=")
    try:
        omega = OmegaClass.parse(summary["omega"])
        delta = RepairDelta(entries, omega)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None
    return DeltaDocument(delta=delta,
                         is_metric_after=summary.get("is_metric_after") == "true")


def serialize_delta_json(doc: DeltaDocument) -> str:
    payload = {
        "omega": doc.delta.omega.value,
        "entries": [
            {"u": u, "v": v, "delta": format_exact(value)}
            for (u, v), value in doc.delta.items()
        ],
        "support_size": doc.delta.norm0(),
        "is_metric_after": doc.is_metric_after,
    }
    return json.dumps(payload, indent=2) + "\n"


def parse_delta_json(text: str) -> DeltaDocument:
    try:
        payload = json.loads(text)
        omega = OmegaClass.parse(payload["omega"])
        entries = {
            (int(item["u"]), int(item["v"])): parse_exact(str(item["delta"]))
            for item in payload["entries"]
        }
        delta = RepairDelta(entries, omega)
        return DeltaDocument(delta=delta,
                             is_metric_after=bool(payload["is_metric_after"]))
    except InputFormatError:
        raise
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise InputFormatError(f"bad delta JSON: {exc}") from None


# -- input sniffing -----------------------------------------------------------


def parse_graph_text(text: str, fmt: str = "auto", filename: str = "") -> WeightedGraph:
    """Parse either graph format; ``auto`` keys on a .csv suffix or commas."""
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "matrix":
        return parse_matrix_csv(text)
    if fmt != "auto":
        raise ValueError(f"unknown input format {fmt!r}")
    if filename.endswith(".csv"):
        return parse_matrix_csv(text)
    body = [ln for ln in text.splitlines() if ln.split("#", 1)[0].strip()]
    if body and "," in body[0]:
        return parse_matrix_csv(text)
    return parse_edge_list(text)


def parse_support_file(text: str) -> tuple[tuple[int, int], ...]:
    """Support files list one edge per line as ``u v``; '#' comments allowed."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputFormatError(f"line {lineno}: expected 'u v'")
        try:
            out.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputFormatError(f"line {lineno}: vertex ids must be integers") from None
    return tuple(out)
