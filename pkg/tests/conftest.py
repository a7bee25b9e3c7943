import itertools

from extremal_trees import Graph


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


DESK_SWEEP = [(m, d) for m in range(1, 6) for d in range(2 * m + 2, 2 * m + 9)]
CROSS_CHECK_CASES = [(1, 4), (1, 5), (2, 6), (2, 7), (3, 8)]
