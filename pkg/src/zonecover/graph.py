"""Undirected simple graphs and the seeded generators used across the package."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import BadParameters, NotConnected


@dataclass(frozen=True)
class SimpleGraph:
    """Vertices ``0..n-1``; ``edges`` is a sorted tuple of pairs ``(u, v)`` with ``u < v``."""

    n: int
    edges: tuple
    _adj: tuple = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise BadParameters("negative vertex count")
        norm = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise BadParameters(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise BadParameters(f"edge ({u},{v}) out of range for n={self.n}")
            e = (min(u, v), max(u, v))
            if e in norm:
                raise BadParameters(f"duplicate edge {e}")
            norm.add(e)
        edges = tuple(sorted(norm))
        adj = [0] * self.n
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_adj", tuple(adj))
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(edges)})

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "SimpleGraph":
        return cls(n, tuple(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency_masks(self) -> tuple:
        """Per-vertex neighbourhood as an int bitmask."""
        return self._adj

    def neighbors(self, v: int) -> list:
        return _bits(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edge_index(self, u: int, v: int) -> int:
        return self._index[(min(u, v), max(u, v))]

    def bfs(self, source: int) -> list:
        """Distances from ``source``; -1 for unreachable vertices."""
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        adj = self._adj
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for w in _bits(adj[u]):
                if dist[w] < 0:
                    dist[w] = du
                    queue.append(w)
        return dist

    def distance_matrix(self) -> list:
        return [self.bfs(s) for s in range(self.n)]

    def is_connected(self) -> bool:
        return self.n <= 1 or min(self.bfs(0)) >= 0

    def require_connected(self):
        if not self.is_connected():
            raise NotConnected(f"graph with {self.n} vertices is not connected")

    def without_edges(self, indices) -> "SimpleGraph":
        drop = set(indices)
        return SimpleGraph(self.n, tuple(e for i, e in enumerate(self.edges) if i not in drop))

    def has_triangle(self) -> bool:
        adj = self._adj
        return any(adj[u] & adj[v] for u, v in self.edges)


def _bits(mask: int) -> list:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def bits(mask: int) -> list:
    """Indices of set bits, ascending."""
    return _bits(mask)


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


# -- named families ----------------------------------------------------------

def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple(combinations(range(n), 2)))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise BadParameters("cycle needs at least 3 vertices")
    return SimpleGraph(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))


def star_graph(leaves: int) -> SimpleGraph:
    """Centre 0 joined to leaves ``1..leaves``."""
    return SimpleGraph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return SimpleGraph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


# -- seeded random families ----------------------------------------------------

def random_tree(n_edges: int, seed: int) -> SimpleGraph:
    """Uniform random recursive tree: vertex k attaches to a uniform earlier vertex."""
    if n_edges < 0:
        raise BadParameters("tree needs a non-negative edge count")
    rng = random.Random(seed)
    return SimpleGraph(n_edges + 1, tuple((rng.randrange(k), k) for k in range(1, n_edges + 1)))


def random_connected_graph(n: int, p: float, seed: int) -> SimpleGraph:
    """Random spanning tree plus each remaining pair with probability ``p``."""
    rng = random.Random(seed)
    edges = {(rng.randrange(k), k) for k in range(1, n)}
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < p:
            edges.add((u, v))
    return SimpleGraph(n, tuple(edges))


def random_chordal_graph(n: int, seed: int, p: float = 0.5) -> SimpleGraph:
    """Connected chordal graph built by repeatedly adding a simplicial vertex.

    The new vertex is joined to an anchor vertex plus a random subset of the
    anchor's neighbours that keeps the attachment set a clique.
    """
    rng = random.Random(seed)
    adj = [set() for _ in range(n)]
    for k in range(1, n):
        anchor = rng.randrange(k)
        clique = [anchor]
        cand = sorted(adj[anchor])
        rng.shuffle(cand)
        for w in cand:
            if rng.random() < p and all(w in adj[c] for c in clique):
                clique.append(w)
        for c in clique:
            adj[k].add(c)
            adj[c].add(k)
    return SimpleGraph(n, tuple((u, v) for u in range(n) for v in adj[u] if u < v))


def random_triangle_free_graph(n: int, seed: int, p: float = 0.4) -> SimpleGraph:
    """Random triangle-free graph; pairs are tried in shuffled order."""
    rng = random.Random(seed)
    adj = [0] * n
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    edges = []
    for u, v in pairs:
        if rng.random() < p and not (adj[u] & adj[v]):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            edges.append((u, v))
    return SimpleGraph(n, tuple(edges))
