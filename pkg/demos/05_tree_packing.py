"""sigma(G(m,d)) = m, certified in both directions.

Upper bound: the clique partition has m(2m+1) crossing edges but m+1 trees
would need (m+1)(2m) of them -- deficit m, so sigma <= m.

Lower bound: matroid-union augmentation actually constructs m pairwise
edge-disjoint spanning trees.  Asked for m+1 it fails and hands back a
blocking partition, which is re-verified against the partition condition.
"""

from extremal_trees import (
    ForestPacking,
    build_extremal_graph,
    clique_certificate,
    pack_spanning_trees,
    sigma,
)

for m, d in [(1, 4), (2, 6), (3, 8)]:
    g = build_extremal_graph(m, d)
    cert = clique_certificate(m, d)
    print(f"G({m},{d}): clique certificate crossing={cert.crossing}, "
          f"required={cert.required}, deficit={cert.deficit}  => sigma <= {m}")

    packed = pack_spanning_trees(g, m)
    assert isinstance(packed, ForestPacking)
    print(f"  packed {len(packed.trees)} edge-disjoint spanning trees "
          f"({g.n - 1} edges each)  => sigma >= {m}")

    witness = pack_spanning_trees(g, m + 1)
    print(f"  at k={m + 1}: blocking partition with {len(witness.partition)} parts, "
          f"crossing {witness.crossing} < required {witness.required}")
    print(f"  sigma = {sigma(g, m + 1)}")
    print()

print("sanity on a graph that does pack: K_4 into two trees:")
import itertools

from extremal_trees import Graph

k4 = Graph.from_edges(4, itertools.combinations(range(4), 2))
for i, tree in enumerate(pack_spanning_trees(k4, 2).trees):
    print(f"  tree {i}: {sorted(tree)}")
