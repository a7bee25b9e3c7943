"""Construction of the extremal family G(m,d) and basic graph primitives.

G(m,d) consists of 2m+1 copies of the complete graph K_{d+1}, each with an
m-edge matching removed, joined by m(2m+1) cross edges placed in a circulant
pattern.  The result is a connected d-regular graph on (2m+1)(d+1) vertices
with exactly one edge between any two of the modified cliques.

Vertices are pairs (clique, slot) with 0 <= clique <= 2m and 0 <= slot <= d,
linearized as clique*(d+1) + slot.  Under this order the adjacency matrix is
block circulant, which the spectral module exploits directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

import numpy as np

from .errors import InvalidPartitionError, ParameterDomainError


class VertexId(NamedTuple):
    clique: int
    slot: int


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with sorted adjacency lists.

    ``params`` is ``(m, d)`` for members of the extremal family and ``None``
    for ad-hoc graphs (test fixtures, oracle inputs).
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int
    params: tuple[int, int] | None = None

    @classmethod
    def from_edges(cls, n: int, edges, params=None) -> "Graph":
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        count = sum(len(s) for s in adj) // 2
        return cls(n, tuple(tuple(sorted(s)) for s in adj), count, params)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(row) for row in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix, materialized on demand."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, row in enumerate(self.adjacency):
            a[u, list(row)] = 1
        return a


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty vertex sets covering the vertex set of some graph."""

    parts: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.parts)


def linear_index(v: VertexId, d: int) -> int:
    return v.clique * (d + 1) + v.slot


def clique_slot(idx: int, d: int) -> VertexId:
    return VertexId(*divmod(idx, d + 1))


def _check_params(m: int, d: int) -> None:
    if m < 1 or d < 2 * m + 2:
        raise ParameterDomainError(
            f"family requires d >= 2m+2 >= 4; got m={m}, d={d}"
        )


def build_extremal_graph(m: int, d: int) -> Graph:
    """Build G(m,d): 2m+1 cliques K_{d+1} minus m-matchings plus circulant cross edges.

    Within clique i the matching {(i,2a-2)~(i,2a-1) : 1 <= a <= m} is removed;
    the cross edges are (i,2j+1) ~ (i+j+1 mod 2m+1, 2j) for 0 <= j <= m-1.
    Each removed-matching endpoint regains exactly one cross edge, so the
    graph is d-regular.
    """
    _check_params(m, d)
    k = 2 * m + 1
    n = k * (d + 1)
    adj: list[set[int]] = [set() for _ in range(n)]
    matching = {(2 * a - 2, 2 * a - 1) for a in range(1, m + 1)}
    for i in range(k):
        base = i * (d + 1)
        for j1 in range(d + 1):
            for j2 in range(j1 + 1, d + 1):
                if (j1, j2) in matching:
                    continue
                adj[base + j1].add(base + j2)
                adj[base + j2].add(base + j1)
    for i in range(k):
        for j in range(m):
            u = i * (d + 1) + 2 * j + 1
            v = ((i + j + 1) % k) * (d + 1) + 2 * j
            adj[u].add(v)
            adj[v].add(u)
    count = sum(len(s) for s in adj) // 2
    return Graph(n, tuple(tuple(sorted(s)) for s in adj), count, (m, d))


def clique_partition(g: Graph) -> Partition:
    """The partition {H_0, ..., H_2m} of a family graph into its modified cliques."""
    if g.params is None:
        raise ValueError("clique_partition needs a graph built by build_extremal_graph")
    m, d = g.params
    parts = tuple(
        frozenset(range(i * (d + 1), (i + 1) * (d + 1))) for i in range(2 * m + 1)
    )
    return Partition(parts)


def validate_partition(g: Graph, p: Partition) -> None:
    seen: set[int] = set()
    total = 0
    for part in p.parts:
        if not part:
            raise InvalidPartitionError("empty part")
        total += len(part)
        seen.update(part)
    if total != len(seen) or seen != set(range(g.n)):
        raise InvalidPartitionError("parts must be disjoint and cover all vertices")


def crossing_edges(g: Graph, p: Partition) -> int:
    """Number of edges whose endpoints lie in two different parts of p."""
    validate_partition(g, p)
    part_of = [0] * g.n
    for idx, part in enumerate(p.parts):
        for v in part:
            part_of[v] = idx
    return sum(1 for u, v in g.edges() if part_of[u] != part_of[v])


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    reached = 1
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = 1
                reached += 1
                stack.append(v)
    return reached == g.n


def degrees(g: Graph) -> list[int]:
    return [len(row) for row in g.adjacency]


def connected_components(g: Graph) -> list[frozenset[int]]:
    comps = []
    seen = bytearray(g.n)
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = 1
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = 1
                    comp.append(v)
                    stack.append(v)
        comps.append(frozenset(comp))
    return comps


def export(g: Graph, fmt: str) -> str:
    """Serialize a family graph; ``fmt`` is 'edgelist' or 'dot'."""
    if g.params is None:
        raise ValueError("export is defined for graphs built by build_extremal_graph")
    m, d = g.params
    if fmt == "edgelist":
        lines = [f"# m={m} d={d} n={g.n}"]
        lines.extend(f"{u} {v}" for u, v in g.edges())
        return "\n".join(lines) + "\n"
    if fmt == "dot":
        lines = [f"graph gm{m}d{d} {{"]
        for v in range(g.n):
            lines.append(f'  v{v} [clique={v // (d + 1)}];')
        for u, v in g.edges():
            lines.append(f"  v{u} -- v{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {fmt!r} (use 'edgelist' or 'dot')")
