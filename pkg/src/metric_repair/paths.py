"""All-pairs shortest paths with exact arithmetic.

Two engines are provided and must agree exactly:

* ``dense`` -- matrix relaxation (Floyd-Warshall).  When the weights scale to
  integers that fit comfortably in 64 bits, large instances run through a
  vectorized numpy loop; everything else uses pure Python over exact numbers.
* ``sparse`` -- per-source priority-queue search (Dijkstra; weights are
  nonnegative).

``engine="auto"`` picks dense when ``m > n^2/4`` and sparse otherwise.

Path reconstruction is canonical and engine-independent: for each source the
predecessor tree is rebuilt from the exact distances, settling vertices in
``(distance, vertex id)`` order and always attaching a vertex to its smallest
already-settled predecessor.  Repeated runs therefore return identical paths.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .graphs import WeightedGraph

_NUMPY_MIN_N = 64
_INT64_SAFE = 2 ** 62


class ApspResult:
    """Exact distances plus lazily built canonical predecessor trees."""

    __slots__ = ("graph", "_dist", "_parents")

    def __init__(self, graph: WeightedGraph, dist: list[list[Fraction | None]]):
        self.graph = graph
        self._dist = dist
        self._parents: dict[int, tuple[int | None, ...]] = {}

    def dist(self, u: int, v: int) -> Fraction | None:
        """Shortest-path distance, or None when disconnected."""
        return self._dist[u][v]

    def parents(self, source: int) -> tuple[int | None, ...]:
        """Canonical shortest-path tree rooted at ``source``.

        ``parents(s)[v]`` is the predecessor of ``v`` on the canonical shortest
        path from ``s``; it is None for the source itself and for unreachable
        vertices.
        """
        if source not in self._parents:
            self._parents[source] = _canonical_parents(self.graph, self._dist[source], source)
        return self._parents[source]

    def path(self, u: int, v: int) -> tuple[int, ...] | None:
        """One canonical shortest path from ``u`` to ``v`` (inclusive)."""
        if self._dist[u][v] is None:
            return None
        if u == v:
            return (u,)
        parents = self.parents(u)
        out = [v]
        while out[-1] != u:
            prev = parents[out[-1]]
            assert prev is not None
            out.append(prev)
        out.reverse()
        return tuple(out)


def apsp(g: WeightedGraph, engine: str = "auto") -> ApspResult:
    """All-pairs shortest paths of ``g``; results are cached per engine."""
    if engine == "auto":
        engine = "dense" if g.m > g.n * g.n / 4 else "sparse"
    if engine not in ("dense", "sparse"):
        raise ValueError(f"unknown engine {engine!r}")
    cached = g._apsp_cache.get(engine)
    if cached is not None:
        return cached
    if engine == "dense":
        dist = _dense_dist(g)
    else:
        dist = _sparse_dist(g)
    result = ApspResult(g, dist)
    g._apsp_cache[engine] = result
    return result


# -- dense engine -----------------------------------------------------------


def _dense_dist(g: WeightedGraph) -> list[list[Fraction | None]]:
    n = g.n
    scale, intw = g.integer_form()
    max_w = max(intw.values(), default=0)
    sentinel = max_w * max(n, 1) + 1
    if sentinel < _INT64_SAFE and n >= _NUMPY_MIN_N:
        return _dense_int_numpy(g, scale, intw, sentinel)
    return _dense_int_python(g, scale, intw, sentinel)


def _dense_int_python(g, scale, intw, sentinel):
    n = g.n
    d = [[sentinel] * n for _ in range(n)]
    for i in range(n):
        d[i][i] = 0
    for (u, v), w in intw.items():
        if w < d[u][v]:
            d[u][v] = w
            d[v][u] = w
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik >= sentinel:
                continue
            row = d[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < row[j]:
                    row[j] = alt
    return _descale(d, scale, sentinel, n)


def _dense_int_numpy(g, scale, intw, sentinel):
    import numpy as np

    n = g.n
    d = np.full((n, n), sentinel, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for (u, v), w in intw.items():
        if w < d[u, v]:
            d[u, v] = w
            d[v, u] = w
    for k in range(n):
        np.minimum(d, d[:, k, None] + d[None, k, :], out=d)
    return _descale(d.tolist(), scale, sentinel, n)


def _descale(int_rows, scale, sentinel, n):
    if scale == 1:
        return [[(None if x >= sentinel else Fraction(x)) for x in row] for row in int_rows]
    return [[(None if x >= sentinel else Fraction(x, scale)) for x in row] for row in int_rows]


# -- sparse engine ----------------------------------------------------------


def _sparse_dist(g: WeightedGraph) -> list[list[Fraction | None]]:
    n = g.n
    scale, intw = g.integer_form()
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for (u, v), w in intw.items():
        adj[u].append((v, w))
        adj[v].append((u, w))
    dist: list[list[Fraction | None]] = []
    for s in range(n):
        row_int = _dijkstra(adj, n, s)
        if scale == 1:
            dist.append([None if x is None else Fraction(x) for x in row_int])
        else:
            dist.append([None if x is None else Fraction(x, scale) for x in row_int])
    return dist


def _dijkstra(adj, n, source):
    dist: list[int | None] = [None] * n
    dist[source] = 0
    heap = [(0, source)]
    done = [False] * n
    while heap:
        du, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in adj[u]:
            alt = du + w
            if dist[v] is None or alt < dist[v]:
                dist[v] = alt
                heapq.heappush(heap, (alt, v))
    return dist


# -- canonical predecessor trees ---------------------------------------------


def _canonical_parents(g: WeightedGraph, drow, source: int) -> tuple[int | None, ...]:
    # Settle vertices one at a time.  A vertex becomes eligible once some
    # settled neighbor p satisfies dist[p] + w(p,v) == dist[v]; among eligible
    # vertices the smallest (dist, id) settles next, attached to its smallest
    # settled tight predecessor.  This stays acyclic even across zero-weight
    # plateaus, where a naive "smallest tight predecessor" rule can loop.
    # Candidates are maintained incrementally as vertices settle.
    n = g.n
    parent: list[int | None] = [None] * n
    settled = [False] * n
    candidate: list[int | None] = [None] * n

    def relax_from(p: int) -> None:
        dp = drow[p]
        for v in g.neighbors(p):
            if settled[v] or drow[v] is None:
                continue
            if dp + g.weight(p, v) == drow[v]:
                if candidate[v] is None or p < candidate[v]:
                    candidate[v] = p

    settled[source] = True
    relax_from(source)
    remaining = {v for v in range(n) if drow[v] is not None and v != source}
    for _ in range(len(remaining)):
        best_v = min((v for v in remaining if candidate[v] is not None),
                     key=lambda v: (drow[v], v), default=None)
        assert best_v is not None, "reachable vertex without settled tight predecessor"
        parent[best_v] = candidate[best_v]
        settled[best_v] = True
        remaining.remove(best_v)
        relax_from(best_v)
    return tuple(parent)
