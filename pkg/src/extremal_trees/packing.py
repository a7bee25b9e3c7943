"""Edge-disjoint spanning tree packing and partition certificates.

The packing number sigma(G) is characterized by the partition condition:
sigma(G) >= k iff every partition of V(G) into t parts has at least k(t-1)
crossing edges.  This module realizes both directions constructively:

* ``pack_spanning_trees`` runs matroid-union augmentation over k graphic
  matroids: edges are inserted one at a time into k edge-disjoint forests via
  breadth-first search over the exchange graph (an edge moves between forests
  along its fundamental cycles).  Success yields k spanning trees; failure
  yields a blocking partition extracted from the closed components of the
  failed searches, verified against the partition condition before being
  returned.

* ``clique_certificate`` instantiates the partition upper bound for G(m,d):
  the modified cliques form a partition with m(2m+1) crossing edges, fewer
  than the (m+1)(2m) that m+1 trees would need, so sigma(G(m,d)) <= m.

Edges are processed lowest index first and the search order is fixed, so
packings are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import ParameterDomainError
from .graphs import (
    Graph,
    Partition,
    build_extremal_graph,
    clique_partition,
    connected_components,
    crossing_edges,
    validate_partition,
)


@dataclass(frozen=True)
class PartitionCertificate:
    """Partition evidence for the packing bound; deficit > 0 refutes sigma >= k."""

    partition: Partition
    crossing: int
    k: int
    required: int
    deficit: int

    @property
    def refutes(self) -> bool:
        return self.deficit > 0

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "parts": [sorted(p) for p in self.partition.parts],
            "crossing": self.crossing,
            "required": self.required,
            "deficit": self.deficit,
        }


@dataclass(frozen=True)
class ForestPacking:
    """Pairwise edge-disjoint spanning trees, each an edge set of (u, v) pairs."""

    trees: tuple[frozenset[tuple[int, int]], ...]

    def to_dict(self) -> dict:
        return {"trees": [sorted(t) for t in self.trees]}


def verify_nash_williams(g: Graph, p: Partition, k: int) -> PartitionCertificate:
    """Evaluate the partition condition sum e(V_i, V_j) >= k(t-1) for p."""
    validate_partition(g, p)
    crossing = crossing_edges(g, p)
    required = k * (len(p) - 1)
    return PartitionCertificate(p, crossing, k, required, required - crossing)


def clique_certificate(m: int, d: int) -> PartitionCertificate:
    """The modified-clique partition of G(m,d) against k = m+1 trees; deficit m."""
    g = build_extremal_graph(m, d)
    return verify_nash_williams(g, clique_partition(g), m + 1)


class _Forest:
    """One of the k forests: adjacency maps v -> {neighbor: edge index}."""

    def __init__(self, n: int):
        self.adj: list[dict[int, int]] = [{} for _ in range(n)]
        self.size = 0

    def add(self, u: int, v: int, eid: int) -> None:
        self.adj[u][v] = eid
        self.adj[v][u] = eid
        self.size += 1

    def remove(self, u: int, v: int) -> None:
        del self.adj[u][v]
        del self.adj[v][u]
        self.size -= 1

    def path_edges(self, u: int, v: int) -> list[int] | None:
        """Edge ids on the tree path u..v, or None if u, v are disconnected."""
        if u == v:
            return []
        parent: dict[int, tuple[int, int]] = {u: (-1, -1)}
        queue = deque([u])
        while queue:
            w = queue.popleft()
            for x, eid in self.adj[w].items():
                if x in parent:
                    continue
                parent[x] = (w, eid)
                if x == v:
                    path = []
                    while x != u:
                        w_, eid_ = parent[x]
                        path.append(eid_)
                        x = w_
                    return path
                queue.append(x)
        return None


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union(self, u: int, v: int) -> None:
        ru, rv = self.find(u), self.find(v)
        if ru != rv:
            self.parent[rv] = ru


class _PackingState:
    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.edges = list(g.edges())
        self.forests = [_Forest(g.n) for _ in range(k)]
        self.forest_of: dict[int, int] = {}

    def try_insert(self, e0: int) -> dict[int, tuple[int, int] | None] | None:
        """Augmenting search for edge e0.

        Returns None on success.  On failure returns the label map: every
        edge reached in the exchange search, each the member of some
        fundamental cycle of its predecessor.
        """
        labels: dict[int, tuple[int, int] | None] = {e0: None}
        queue = deque([e0])
        while queue:
            f = queue.popleft()
            fu, fv = self.edges[f]
            own = self.forest_of.get(f)
            for i in range(self.k):
                if i == own:
                    continue
                path = self.forests[i].path_edges(fu, fv)
                if path is None:
                    self._augment(f, i, labels, e0)
                    return None
                for gid in path:
                    if gid not in labels:
                        labels[gid] = (f, i)
                        queue.append(gid)
        return labels

    def _augment(self, f: int, target: int, labels, e0: int) -> None:
        """Shift edges back along the label chain; e0 enters the freed forest."""
        cur = f
        while cur != e0:
            source = self.forest_of[cur]
            u, v = self.edges[cur]
            self.forests[source].remove(u, v)
            self.forests[target].add(u, v, cur)
            self.forest_of[cur] = target
            pred = labels[cur]
            assert pred is not None
            cur, target = pred[0], source
        u, v = self.edges[e0]
        self.forests[target].add(u, v, e0)
        self.forest_of[e0] = target

    def total(self) -> int:
        return sum(f.size for f in self.forests)


def _closure_components(state: _PackingState, labels, e0: int) -> list[list[int]]:
    """Vertex components of the failed search's closed edge set (labels + e0)."""
    verts: dict[int, int] = {}
    uf_ids = []
    for eid in list(labels) + [e0]:
        for v in state.edges[eid]:
            if v not in verts:
                verts[v] = len(uf_ids)
                uf_ids.append(v)
    uf = _UnionFind(len(uf_ids))
    for eid in list(labels) + [e0]:
        u, v = state.edges[eid]
        uf.union(verts[u], verts[v])
    groups: dict[int, list[int]] = {}
    for v, idx in verts.items():
        groups.setdefault(uf.find(idx), []).append(v)
    return list(groups.values())


def pack_spanning_trees(g: Graph, k: int) -> ForestPacking | PartitionCertificate:
    """k pairwise edge-disjoint spanning trees of g, or a blocking partition.

    The failure witness is a partition pi with fewer than k(|pi|-1) crossing
    edges; it is re-verified against the partition condition before being
    returned.  Disconnected inputs fail immediately with their component
    partition.
    """
    if k < 1:
        raise ParameterDomainError(f"need k >= 1, got k={k}")
    comps = connected_components(g)
    if len(comps) > 1:
        cert = verify_nash_williams(g, Partition(tuple(comps)), k)
        assert cert.refutes
        return cert

    state = _PackingState(g, k)
    clumps = _UnionFind(g.n)
    target = k * (g.n - 1)
    for eid in range(len(state.edges)):
        if state.total() == target:
            break
        u, v = state.edges[eid]
        if clumps.find(u) == clumps.find(v):
            continue  # inside a saturated clump: insertion is impossible
        labels = state.try_insert(eid)
        if labels is not None:
            for comp in _closure_components(state, labels, eid):
                for w in comp[1:]:
                    clumps.union(comp[0], w)

    if state.total() == target:
        trees = []
        for forest in state.forests:
            assert forest.size == g.n - 1
            tree = frozenset(
                (min(u, v), max(u, v))
                for u in range(g.n)
                for v in forest.adj[u]
                if u < v
            )
            trees.append(tree)
        packing = ForestPacking(tuple(trees))
        _verify_packing(g, packing)
        return packing

    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(clumps.find(v), []).append(v)
    partition = Partition(tuple(frozenset(grp) for grp in groups.values()))
    cert = verify_nash_williams(g, partition, k)
    assert cert.refutes, "blocking partition failed its own verification"
    return cert


def _verify_packing(g: Graph, packing: ForestPacking) -> None:
    seen: set[tuple[int, int]] = set()
    for tree in packing.trees:
        assert len(tree) == g.n - 1
        assert not (tree & seen), "trees share an edge"
        seen |= tree
        adj: dict[int, list[int]] = {v: [] for v in range(g.n)}
        for u, v in tree:
            assert g.has_edge(u, v)
            adj[u].append(v)
            adj[v].append(u)
        reached = {0}
        stack = [0]
        while stack:
            w = stack.pop()
            for x in adj[w]:
                if x not in reached:
                    reached.add(x)
                    stack.append(x)
        assert len(reached) == g.n, "tree does not span"


def sigma(g: Graph, k_max: int) -> int:
    """Largest k <= k_max for which k edge-disjoint spanning trees exist."""
    best = 0
    for k in range(1, k_max + 1):
        if isinstance(pack_spanning_trees(g, k), ForestPacking):
            best = k
        else:
            break
    return best
