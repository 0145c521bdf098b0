"""Core data model: weighted graphs, distance matrices and repair deltas.

All weights are exact nonnegative rationals (``fractions.Fraction``).  Broken
cycles are detected through *strict* inequalities, so floating point values are
rejected outright: a float cannot participate in any weight or delta.

Every object in this module is immutable after construction and safe to share
across threads; all operations on them are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, Union

Edge = tuple[int, int]
WeightLike = Union[int, str, Fraction]


class MetricRepairError(Exception):
    """Base class for errors raised by this package."""


class InputFormatError(MetricRepairError):
    """Malformed external input (edge list, matrix or delta file)."""


class PreconditionError(MetricRepairError):
    """A solver was invoked on an instance it does not accept."""


class EnumerationBudgetError(PreconditionError):
    """An exponential enumeration guard refused to run at this size."""


def as_weight(value: WeightLike) -> Fraction:
    """Coerce ``value`` to an exact nonnegative rational weight.

    Accepts ints, Fractions and decimal/fraction strings.  Floats are rejected
    because solver comparisons must stay exact.
    """
    if isinstance(value, float):
        raise TypeError("floating point weights are not allowed; pass int, str or Fraction")
    w = Fraction(value)
    if w < 0:
        raise ValueError(f"weights must be nonnegative, got {w}")
    return w


def as_delta_value(value: WeightLike) -> Fraction:
    """Coerce ``value`` to an exact (signed) rational delta."""
    if isinstance(value, float):
        raise TypeError("floating point deltas are not allowed; pass int, str or Fraction")
    return Fraction(value)


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Normalize an unordered vertex pair; self-loops are invalid."""
    if u == v:
        raise ValueError(f"self-loop ({u},{v}) is not a valid edge")
    return (u, v) if u < v else (v, u)


class OmegaClass(Enum):
    """Sign class of permitted weight modifications."""

    DECREASE_ONLY = "decrease"
    INCREASE_ONLY = "increase"
    GENERAL = "general"

    def allows(self, delta: Fraction) -> bool:
        if self is OmegaClass.DECREASE_ONLY:
            return delta <= 0
        if self is OmegaClass.INCREASE_ONLY:
            return delta >= 0
        return True

    @classmethod
    def parse(cls, token: str) -> "OmegaClass":
        for member in cls:
            if member.value == token:
                return member
        raise ValueError(f"unknown omega class {token!r}; expected one of "
                         f"{[m.value for m in cls]}")


class WeightedGraph:
    """Undirected graph on vertices ``0..n-1`` with exact edge weights.

    Edges are stored under normalized ``(u, v)`` keys with ``u < v``; there are
    no self-loops and no duplicate edges.  Weight zero is allowed.
    """

    __slots__ = ("n", "_w", "_adj", "_edges", "_apsp_cache", "_int_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, WeightLike]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        w: dict[tuple[int, int], Fraction] = {}
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v, weight in edges:
            key = edge_key(u, v)
            if not (0 <= key[0] and key[1] < n):
                raise ValueError(f"edge {key} out of range for n={n}")
            if key in w:
                raise ValueError(f"duplicate edge {key}")
            w[key] = as_weight(weight)
            adj[key[0]].append(key[1])
            adj[key[1]].append(key[0])
        self._w = w
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self._edges = tuple(sorted(w))
        self._apsp_cache: dict = {}
        self._int_cache = None

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._w)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as normalized pairs, in lexicographic order."""
        return self._edges

    def weight(self, u: int, v: int) -> Fraction:
        return self._w[edge_key(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return edge_key(u, v) in self._w

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def common_neighbors(self, u: int, v: int) -> tuple[int, ...]:
        nu, nv = set(self._adj[u]), self._adj[v]
        return tuple(x for x in nv if x in nu)

    def max_weight(self) -> Fraction:
        """Largest edge weight (0 on an edgeless graph)."""
        return max(self._w.values(), default=Fraction(0))

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def weight_map(self) -> dict[tuple[int, int], Fraction]:
        """A fresh copy of the edge-to-weight mapping."""
        return dict(self._w)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.n == other.n and self._w == other._w

    def __hash__(self):  # pragma: no cover - mappings are unhashable by design
        raise TypeError("WeightedGraph is not hashable")

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m})"

    # -- derived graphs ----------------------------------------------------

    def replace_weights(self, new_weights: Mapping[tuple[int, int], Fraction]) -> "WeightedGraph":
        """Same topology with some edge weights overridden."""
        w = dict(self._w)
        for key, value in new_weights.items():
            key = edge_key(*key)
            if key not in w:
                raise ValueError(f"{key} is not an edge")
            w[key] = as_weight(value)
        return WeightedGraph(self.n, ((u, v, wt) for (u, v), wt in w.items()))

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "WeightedGraph":
        gone = {edge_key(*e) for e in removed}
        return WeightedGraph(
            self.n, ((u, v, wt) for (u, v), wt in self._w.items() if (u, v) not in gone))

    # -- integer scaling (internal fast paths) ------------------------------

    def integer_form(self) -> tuple[int, dict[tuple[int, int], int]]:
        """Scale all weights to integers: returns ``(scale, {edge: int})``.

        ``weight(e) == intweight(e) / scale`` exactly.  Cached.
        """
        if self._int_cache is None:
            scale = 1
            for w in self._w.values():
                scale = scale * w.denominator // gcd(scale, w.denominator)
            self._int_cache = (scale, {e: int(w * scale) for e, w in self._w.items()})
        return self._int_cache


@dataclass(frozen=True)
class BrokenCycleWitness:
    """A cycle together with the edge whose weight exceeds the rest of it.

    ``cycle`` lists distinct vertices; consecutive pairs plus the wrap-around
    pair are the cycle edges, and ``top_edge`` is the violating one.
    """

    cycle: tuple[int, ...]
    top_edge: tuple[int, int]

    def edges(self) -> tuple[tuple[int, int], ...]:
        cyc = self.cycle
        return tuple(edge_key(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))

    def bottom_edges(self) -> tuple[tuple[int, int], ...]:
        top = edge_key(*self.top_edge)
        return tuple(e for e in self.edges() if e != top)

    def check(self, g: WeightedGraph) -> None:
        """Raise if this witness does not certify a broken cycle of ``g``."""
        if len(self.cycle) < 3 or len(set(self.cycle)) != len(self.cycle):
            raise ValueError("witness cycle must list at least 3 distinct vertices")
        top = edge_key(*self.top_edge)
        if top not in self.edges():
            raise ValueError("top edge is not on the witness cycle")
        rest = sum((g.weight(*e) for e in self.bottom_edges()), Fraction(0))
        if not g.weight(*top) > rest:
            raise ValueError("cycle inequality is not strictly violated")


class RepairDelta:
    """Sparse symmetric weight modification with a declared sign class.

    Only nonzero entries are stored, keyed by normalized edge; the entry count
    is the solution size (the number of modified weights).
    """

    __slots__ = ("_entries", "omega")

    def __init__(self, entries: Mapping[tuple[int, int], WeightLike], omega: OmegaClass):
        normalized: dict[tuple[int, int], Fraction] = {}
        for key, value in entries.items():
            key = edge_key(*key)
            if key in normalized:
                raise ValueError(f"duplicate delta entry {key}")
            value = as_delta_value(value)
            if value == 0:
                continue
            if not omega.allows(value):
                raise ValueError(f"delta {value} on {key} violates sign class {omega.value}")
            normalized[key] = value
        self._entries = dict(sorted(normalized.items()))
        self.omega = omega

    @property
    def entries(self) -> Mapping[tuple[int, int], Fraction]:
        return dict(self._entries)

    @property
    def support(self) -> frozenset:
        return frozenset(self._entries)

    def get(self, u: int, v: int) -> Fraction:
        return self._entries.get(edge_key(u, v), Fraction(0))

    def norm0(self) -> int:
        return len(self._entries)

    def norm1(self) -> Fraction:
        return sum((abs(v) for v in self._entries.values()), Fraction(0))

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return iter(self._entries.items())

    def negated(self) -> "RepairDelta":
        flipped = {
            OmegaClass.DECREASE_ONLY: OmegaClass.INCREASE_ONLY,
            OmegaClass.INCREASE_ONLY: OmegaClass.DECREASE_ONLY,
            OmegaClass.GENERAL: OmegaClass.GENERAL,
        }[self.omega]
        return RepairDelta({e: -v for e, v in self._entries.items()}, flipped)

    def merged(self, other: "RepairDelta") -> "RepairDelta":
        """Entrywise sum, in the general sign class."""
        combined = dict(self._entries)
        for e, v in other._entries.items():
            combined[e] = combined.get(e, Fraction(0)) + v
        return RepairDelta(combined, OmegaClass.GENERAL)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RepairDelta):
            return NotImplemented
        return self._entries == other._entries and self.omega == other.omega

    def __repr__(self) -> str:
        return f"RepairDelta(omega={self.omega.value}, entries={len(self._entries)})"


def apply_delta(g: WeightedGraph, delta: RepairDelta) -> WeightedGraph:
    """Apply a repair to a graph: ``w'(e) = w(e) + delta(e)``.

    Raises if the delta touches a non-edge or would make a weight negative.
    The sign class of each entry was already checked when the delta was built.
    """
    updated: dict[tuple[int, int], Fraction] = {}
    for (u, v), value in delta.items():
        if not g.has_edge(u, v):
            raise ValueError(f"delta touches non-edge ({u},{v})")
        new = g.weight(u, v) + value
        if new < 0:
            raise ValueError(f"delta drives edge ({u},{v}) below zero")
        updated[(u, v)] = new
    return g.replace_weights(updated)


class DistanceMatrix:
    """Symmetric nonnegative matrix with a zero diagonal (complete-graph view)."""

    __slots__ = ("n", "_rows", "_graph_cache")

    def __init__(self, rows: Iterable[Iterable[WeightLike]]):
        mat = [tuple(as_weight(x) for x in row) for row in rows]
        n = len(mat)
        for i, row in enumerate(mat):
            if len(row) != n:
                raise ValueError("matrix must be square")
            if row[i] != 0:
                raise ValueError(f"diagonal entry ({i},{i}) must be zero")
            for j in range(i):
                if row[j] != mat[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i},{j})")
        self.n = n
        self._rows = tuple(mat)
        self._graph_cache = None

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def to_graph(self) -> WeightedGraph:
        """The complete weighted graph carrying these distances."""
        if self._graph_cache is None:
            n = self.n
            self._graph_cache = WeightedGraph(
                n, ((i, j, self._rows[i][j]) for i in range(n) for j in range(i + 1, n)))
        return self._graph_cache

    @classmethod
    def from_graph(cls, g: WeightedGraph) -> "DistanceMatrix":
        if not g.is_complete():
            raise PreconditionError("matrix view requires a complete graph")
        n = g.n
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (u, v), w in g.weight_map().items():
            rows[u][v] = w
            rows[v][u] = w
        return cls(rows)

    def apply(self, delta: RepairDelta) -> "DistanceMatrix":
        rows = [list(r) for r in self._rows]
        for (u, v), value in delta.items():
            new = rows[u][v] + value
            if new < 0:
                raise ValueError(f"delta drives entry ({u},{v}) below zero")
            rows[u][v] = new
            rows[v][u] = new
        return DistanceMatrix(rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n})"


@dataclass(frozen=True)
class InstanceStats:
    """Headline facts about an instance, for reports and benches."""

    is_metric: bool
    broken_triangle_count: int
    longest_broken_cycle: int | None = None
    cycle_length_computed: bool = False

    @property
    def ratio_parameter(self) -> int | None:
        """One less than the longest broken cycle length, when known."""
        if self.longest_broken_cycle is None:
            return None
        return self.longest_broken_cycle - 1
