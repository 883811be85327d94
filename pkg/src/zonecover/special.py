"""Median construction over a base graph, vertex covers, and edge covers of trees."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .cover import DEFAULT_NODE_CAP, min_hitting_set
from .errors import LimitExceeded, NotATree
from .graph import SimpleGraph, bits
from .pcube import PartialCube, from_words

MAX_VERTEX_COVER_N = 30


@dataclass(frozen=True)
class MedianizedGraph:
    base: SimpleGraph
    graph: SimpleGraph      # apex 0, then v_i = 1 + i, then one w per base edge
    roles: tuple            # ("x",), ("v", i) or ("w", i, j) per vertex of ``graph``
    labels: tuple           # embedding word per vertex of ``graph``
    cube: PartialCube
    triangle_free: bool

    def cube_vertex(self, v: int) -> int:
        return self.cube.index[self.labels[v]]

    def roles_json(self) -> dict:
        return {
            "roles": [list(r) for r in self.roles],
            "cube_vertex": [self.cube_vertex(v) for v in range(self.graph.n)],
            "triangle_free": self.triangle_free,
        }


def medianize(g: SimpleGraph) -> MedianizedGraph:
    """Add an apex joined to every vertex and subdivide every edge once.

    Apex gets the zero word, ``v_i`` the unit word ``e_i`` and the subdivision
    vertex of ``v_i v_j`` the word ``e_i + e_j``, so zone ``i`` of the cube
    belongs to base vertex ``i``.
    """
    n = g.n
    roles = [("x",)] + [("v", i) for i in range(n)]
    labels = [0] + [1 << i for i in range(n)]
    edges = [(0, 1 + i) for i in range(n)]
    for k, (i, j) in enumerate(g.edges):
        w = 1 + n + k
        roles.append(("w", i, j))
        labels.append((1 << i) | (1 << j))
        edges.append((1 + i, w))
        edges.append((1 + j, w))
    graph = SimpleGraph(1 + n + g.m, tuple(edges))
    cube = from_words(labels, n)
    return MedianizedGraph(g, graph, tuple(roles), tuple(labels), cube, not g.has_triangle())


def medians(graph: SimpleGraph, dist, a: int, b: int, c: int) -> list:
    dab, dbc, dac = dist[a][b], dist[b][c], dist[a][c]
    return [
        m for m in range(graph.n)
        if dist[a][m] + dist[m][b] == dab
        and dist[b][m] + dist[m][c] == dbc
        and dist[a][m] + dist[m][c] == dac
    ]


def is_median_graph(graph: SimpleGraph) -> bool:
    """Every vertex triple has exactly one median (brute force, O(n^4))."""
    if not graph.is_connected():
        return False
    dist = graph.distance_matrix()
    return all(
        len(medians(graph, dist, a, b, c)) == 1
        for a, b, c in combinations(range(graph.n), 3)
    )


def min_vertex_cover(g: SimpleGraph, node_cap=DEFAULT_NODE_CAP) -> tuple:
    """Minimum vertex cover, lexicographically first among optima."""
    if g.n > MAX_VERTEX_COVER_N:
        raise LimitExceeded(f"vertex cover limited to {MAX_VERTEX_COVER_N} vertices")
    return tuple(bits(min_hitting_set([(1 << u) | (1 << v) for u, v in g.edges], node_cap)))


def is_vertex_cover(g: SimpleGraph, s) -> bool:
    s = set(s)
    return all(u in s or v in s for u, v in g.edges)


def _require_tree(t: SimpleGraph):
    if t.m < 1 or t.m != t.n - 1 or not t.is_connected():
        raise NotATree(f"graph with {t.n} vertices and {t.m} edges is not a tree with an edge")


def tree_min_edge_cover(t: SimpleGraph) -> tuple:
    """Minimum edge cover of a tree by a two-state dynamic program.

    ``free[v]``: cheapest cover of the subtree below ``v`` when ``v`` is
    already covered from above. ``need[v]``: same, but some child edge must
    cover ``v``.
    """
    _require_tree(t)
    parent = [-1] * t.n
    order = [0]
    seen = {0}
    for v in order:
        for w in t.neighbors(v):
            if w not in seen:
                seen.add(w)
                parent[w] = v
                order.append(w)
    children = [[] for _ in range(t.n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    inf = float("inf")
    free = [0] * t.n
    need = [inf] * t.n
    for v in reversed(order):
        total = 0
        extra = inf
        for c in children[v]:
            take = 1 + free[c]
            total += min(need[c], take)
            extra = min(extra, take - min(need[c], take))
        free[v] = total
        need[v] = total + extra
    chosen = []
    stack = [(0, True)]
    while stack:
        v, must = stack.pop()
        kids = children[v]
        take = [1 + free[c] < need[c] for c in kids]
        if must and kids and not any(take):
            best = min(range(len(kids)), key=lambda k: (1 + free[kids[k]] - need[kids[k]], kids[k]))
            take[best] = True
        for c, tk in zip(kids, take):
            if tk:
                chosen.append(t.edge_index(v, c))
            stack.append((c, not tk))
    return tuple(sorted(chosen))


def max_matching(g: SimpleGraph) -> tuple:
    """Maximum-cardinality matching as sorted edge indices."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return tuple(sorted(g.edge_index(u, v) for u, v in nx.max_weight_matching(h, maxcardinality=True)))


def is_edge_cover(g: SimpleGraph, s) -> bool:
    touched = set()
    for i in s:
        touched.update(g.edges[i])
    return len(touched) == g.n
