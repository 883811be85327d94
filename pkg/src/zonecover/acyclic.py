"""Acyclic orientations, flip graphs and guarding sets of edges.

An orientation is stored as an int word over the sorted edge list: bit ``i``
is 0 when edge ``(u, v)`` (``u < v``) points ``u -> v``. A set ``S`` of edges
guards ``G`` when every acyclic orientation has a flippable edge in ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import _kernels
from .cover import DEFAULT_NODE_CAP, min_hitting_set
from .errors import BadParameters, NotConnected, TooManyOrientations
from .graph import SimpleGraph, bits, complete_graph, mask_of
from .pcube import PartialCube, from_words

ORIENTATION_CAP = 10**6


@dataclass(frozen=True)
class AcyclicOrientation:
    graph: SimpleGraph
    word: int

    def __post_init__(self):
        if not is_acyclic(self.graph, self.word):
            raise BadParameters("orientation contains a directed cycle")

    def arcs(self) -> list:
        return arcs(self.graph, self.word)

    def bitstring(self) -> str:
        return "".join(str(self.word >> i & 1) for i in range(self.graph.m))


def arcs(g: SimpleGraph, word: int) -> list:
    return [(v, u) if word >> i & 1 else (u, v) for i, (u, v) in enumerate(g.edges)]


def _out_masks(g: SimpleGraph, word: int) -> list:
    out = [0] * g.n
    for t, h in arcs(g, word):
        out[t] |= 1 << h
    return out


def _reach_from(out, source, skip=None) -> int:
    """Vertices reachable from ``source`` by a non-empty directed path, optionally avoiding arc ``skip``."""
    seen = 0
    stack = [source]
    while stack:
        x = stack.pop()
        nxt = out[x]
        if skip is not None and x == skip[0]:
            nxt &= ~(1 << skip[1])
        nxt &= ~seen
        seen |= nxt
        stack.extend(bits(nxt))
    return seen


def is_acyclic(g: SimpleGraph, word: int) -> bool:
    out = _out_masks(g, word)
    return all(not _reach_from(out, v) >> v & 1 for v in range(g.n))


def flippable(g: SimpleGraph, o, e: int) -> bool:
    """Edge ``e`` can be reversed without creating a cycle, i.e. its arc is the only path between its ends."""
    word = o.word if isinstance(o, AcyclicOrientation) else o
    tail, head = arcs(g, word)[e]
    return not _reach_from(_out_masks(g, word), tail, skip=(tail, head)) >> head & 1


def flip_mask(g: SimpleGraph, word: int) -> int:
    out = _out_masks(g, word)
    reach = [_reach_from(out, v) for v in range(g.n)]
    mask = 0
    for i, (t, h) in enumerate(arcs(g, word)):
        if not any(reach[w] >> h & 1 for w in bits(out[t] & ~(1 << h))):
            mask |= 1 << i
    return mask


def orientation_from_order(g: SimpleGraph, order) -> int:
    pos = {v: i for i, v in enumerate(order)}
    word = 0
    for i, (u, v) in enumerate(g.edges):
        if pos[v] < pos[u]:
            word |= 1 << i
    return word


def enumerate_orientations(g: SimpleGraph, cap: int = ORIENTATION_CAP, backend=None):
    """All acyclic orientations as ``(words, flip_masks)``, in branching order."""
    return _kernels.acyclic_orientations(g.n, g.edges, cap, backend=backend)


def count_acyclic_orientations(g: SimpleGraph, cap: int = ORIENTATION_CAP) -> int:
    return len(enumerate_orientations(g, cap)[0])


def flip_graph(g: SimpleGraph, cap: int = ORIENTATION_CAP) -> PartialCube:
    """Partial cube of acyclic orientations under single-edge flips; zone ``i`` is edge ``i``."""
    if not g.is_connected():
        raise NotConnected("flip graph requested for a disconnected graph")
    words, _ = enumerate_orientations(g, cap)
    return from_words(words, g.m)


def permutohedron(n: int) -> PartialCube:
    return flip_graph(complete_graph(n))


# -- guarding sets ---------------------------------------------------------------

def _edge_mask(g: SimpleGraph, s) -> int:
    for i in s:
        if not 0 <= i < g.m:
            raise BadParameters(f"edge index {i} not in 0..{g.m - 1}")
    return mask_of(s)


def find_transitive_order(g: SimpleGraph, s) -> list | None:
    """A vertex order whose induced orientation makes every edge of ``s`` transitive, or ``None``.

    ``None`` means ``s`` is guarding. Vertices are placed left to right. For
    each placed ``u`` the search keeps ``front[u]``, the unplaced vertices
    adjacent to something ``u`` already reaches: placing ``y`` extends
    ``u``'s reach iff ``y`` is in ``front[u]`` or adjacent to ``u``, and an
    edge ``uy`` of ``s`` becomes transitive iff ``y`` is in ``front[u]``.
    So the placed set plus the fronts of ``s``-endpoints still waiting for a
    partner determine the future, and failed states are memoised on exactly
    that. Interchangeable twins outside ``s`` are placed in index order.
    """
    smask = _edge_mask(g, s)
    n = g.n
    adj = g.adjacency_masks
    partners = [0] * n
    for i in bits(smask):
        u, v = g.edges[i]
        partners[u] |= 1 << v
        partners[v] |= 1 << u
    ends = mask_of(v for v in range(n) if partners[v])
    classes = {}
    for v in range(n):
        if not ends >> v & 1:
            classes.setdefault(adj[v] | (1 << v), []).append(v)
    before = [0] * n
    for members in classes.values():
        for a, b in zip(members, members[1:]):
            before[b] = 1 << a
    return _kernels.transitive_order_search(n, list(adj), partners, before)


def is_guarding(g: SimpleGraph, s, method: str = "search", cap: int = ORIENTATION_CAP) -> bool:
    """Whether every acyclic orientation has a flippable edge in ``s``.

    ``method="enumerate"`` sweeps all orientations (bounded by ``cap``);
    ``"search"`` looks for a single orientation making ``s`` transitive.
    """
    smask = _edge_mask(g, s)
    if method == "enumerate":
        _, flips = enumerate_orientations(g, cap)
        return all(f & smask for f in flips)
    if method == "search":
        return find_transitive_order(g, bits(smask)) is None
    raise BadParameters(f"unknown method {method!r}")


def min_guarding(g: SimpleGraph, method: str = "implicit", cap: int = ORIENTATION_CAP,
                 node_cap: int = DEFAULT_NODE_CAP) -> tuple:
    """Smallest guarding edge set, lexicographically first among the smallest.

    ``"enumerate"`` solves the hitting-set problem over every orientation's
    flippable-edge mask. ``"implicit"`` grows that family lazily: solve over
    the masks seen so far, ask :func:`find_transitive_order` for an
    orientation the candidate misses, add its mask, repeat. A candidate with
    no such orientation is optimal, because every true guarding set also
    hits the partial family.
    """
    if g.m == 0:
        raise BadParameters("graph has no edges to guard with")
    if method == "enumerate":
        _, flips = enumerate_orientations(g, cap)
        return tuple(bits(min_hitting_set(flips, node_cap)))
    if method != "implicit":
        raise BadParameters(f"unknown method {method!r}")
    core = []
    while True:
        cand = min_hitting_set(core, node_cap)
        order = find_transitive_order(g, bits(cand))
        if order is None:
            return tuple(bits(cand))
        core.append(flip_mask(g, orientation_from_order(g, order)))


# -- edge cuts and chordality --------------------------------------------------------

def min_edge_cut(g: SimpleGraph) -> tuple:
    """Global minimum edge cut by Stoer-Wagner with unit weights; ties go to the first phase found."""
    if g.n < 2:
        raise BadParameters("edge cut needs at least two vertices")
    g.require_connected()
    weight = [dict() for _ in range(g.n)]
    for u, v in g.edges:
        weight[u][v] = 1
        weight[v][u] = 1
    group = {v: {v} for v in range(g.n)}
    active = list(range(g.n))
    best_w, best_side = None, None
    while len(active) > 1:
        start = active[0]
        conn = {v: weight[start].get(v, 0) for v in active if v != start}
        prev, last, cut_w = start, start, 0
        while conn:
            z = max(conn, key=lambda v: (conn[v], -v))
            cut_w = conn.pop(z)
            for y, w in weight[z].items():
                if y in conn:
                    conn[y] += w
            prev, last = last, z
        if best_w is None or cut_w < best_w:
            best_w, best_side = cut_w, set(group[last])
        group[prev] |= group.pop(last)
        for y, w in weight[last].items():
            if y == prev:
                continue
            weight[prev][y] = weight[prev].get(y, 0) + w
            weight[y][prev] = weight[y].get(prev, 0) + w
            del weight[y][last]
        weight[prev].pop(last, None)
        weight[last] = {}
        active.remove(last)
    return tuple(i for i, (u, v) in enumerate(g.edges) if (u in best_side) != (v in best_side))


def is_edge_cut(g: SimpleGraph, s) -> bool:
    return not g.without_edges(s).is_connected()


def is_chordal(g: SimpleGraph):
    """``(True, perfect elimination order)`` or ``(False, None)``, via maximum cardinality search."""
    n = g.n
    weight = [0] * n
    numbered = [False] * n
    visit = []
    for _ in range(n):
        v = max((x for x in range(n) if not numbered[x]), key=lambda x: (weight[x], -x))
        numbered[v] = True
        visit.append(v)
        for w in g.neighbors(v):
            if not numbered[w]:
                weight[w] += 1
    peo = visit[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    adj = g.adjacency_masks
    for v in peo:
        later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
        if later:
            f = min(later, key=pos.__getitem__)
            rest = mask_of(later) & ~(1 << f)
            if rest & ~adj[f]:
                return False, None
    return True, peo


# -- constructions -------------------------------------------------------------------

def gen_wheel_blob(t: int, g: int):
    """Wheel on ``g + 1`` vertices with every spoke replaced by a ``K_{t-1}`` joined to both spoke ends.

    Vertex 0 is the centre, ``1..g`` the rim in cyclic order, then the blobs
    spoke by spoke. Returns ``(graph, rim cycle edge indices)``.
    """
    if t < 2 or g < 3 or g % 2 == 0 or g > t:
        raise BadParameters("need t >= 2 and odd g with 3 <= g <= t")
    edges = [(1 + i, 1 + (i + 1) % g) for i in range(g)]
    rim = [tuple(sorted(e)) for e in edges]
    nxt = g + 1
    for i in range(g):
        blob = list(range(nxt, nxt + t - 1))
        nxt += t - 1
        edges.extend(combinations(blob, 2))
        for b in blob:
            edges.append((0, b))
            edges.append((1 + i, b))
    graph = SimpleGraph(nxt, tuple(edges))
    return graph, tuple(sorted(graph.edge_index(u, v) for u, v in rim))


def hamilton_reduction(h: SimpleGraph):
    """``(K_n, non-edges of h)``; the edge set guards ``K_n`` iff ``h`` has no Hamilton path."""
    kn = complete_graph(h.n)
    return kn, tuple(i for i, (u, v) in enumerate(kn.edges) if not h.has_edge(u, v))
