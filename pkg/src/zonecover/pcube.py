"""Partial cubes: labelled vertex sets, isometry checks, zones and recognition."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import (
    BadVertexId,
    DimensionTooLarge,
    EmptyInput,
    FormatError,
    NotBipartite,
    NotIsometric,
    NotPartialCube,
)
from .graph import SimpleGraph, bits

MAX_DIM = 128


def word_to_int(word: str) -> int:
    """Character ``i`` of the word becomes bit ``i`` of the int."""
    value = 0
    for i, ch in enumerate(word):
        if ch == "1":
            value |= 1 << i
        elif ch != "0":
            raise FormatError(f"bad character {ch!r} in word {word!r}")
    return value


def int_to_word(value: int, dim: int) -> str:
    return "".join("1" if value >> i & 1 else "0" for i in range(dim))


def _lex_key(dim):
    # int whose natural order equals the lexicographic order of the word
    def key(x):
        return int(int_to_word(x, dim), 2) if dim else 0

    return key


@dataclass(frozen=True)
class PartialCube:
    """Vertices are distinct ``dim``-bit labels kept in lexicographic word order.

    Edges are implicit (pairs at Hamming distance 1) and zone ``i`` is the set
    of edges flipping coordinate ``i``. Build through :func:`from_labels` or
    :func:`from_words`, which verify the invariants.
    """

    dim: int
    labels: tuple
    index: dict = field(repr=False, compare=False)
    incidence: tuple = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    def word(self, v: int) -> str:
        return int_to_word(self.labels[v], self.dim)

    def words(self) -> list:
        return [int_to_word(x, self.dim) for x in self.labels]

    def neighbor(self, v: int, zone: int) -> int | None:
        """Vertex reached by flipping coordinate ``zone`` of ``v``, if any."""
        return self.index.get(self.labels[v] ^ (1 << zone))

    def neighbors(self, v: int) -> list:
        return [self.index[self.labels[v] ^ (1 << i)] for i in bits(self.incidence[v])]

    def edges(self) -> list:
        """``(u, v, zone)`` triples with ``u < v``."""
        out = []
        for u, x in enumerate(self.labels):
            for i in bits(self.incidence[u]):
                w = self.index[x ^ (1 << i)]
                if u < w:
                    out.append((u, w, i))
        return sorted(out)

    def zone_edges(self, zone: int) -> list:
        bit = 1 << zone
        out = []
        for u, x in enumerate(self.labels):
            if self.incidence[u] & bit and not x & bit:
                out.append((u, self.index[x | bit]))
        return out

    def zone_sizes(self) -> list:
        counts = [0] * self.dim
        for u, x in enumerate(self.labels):
            for i in bits(self.incidence[u]):
                if not x >> i & 1:
                    counts[i] += 1
        return counts

    def hamming_graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, tuple((u, v) for u, v, _ in self.edges()))

    def to_text(self) -> str:
        lines = [f"pcube {self.n} {self.dim}"]
        lines.extend(self.words())
        return "\n".join(lines) + "\n"


def isometry_violation(labels, incidence):
    """First ``(u, v)`` with no neighbour of ``u`` strictly closer to ``v`` in Hamming distance.

    A Hamming-1 graph on the labels is isometric iff every ordered pair has
    such a neighbour (induct on Hamming distance), so ``None`` certifies
    isometry and connectivity. Vertices sharing an incidence mask ``m`` are
    checked together: ``u`` fails iff another label agrees with it on ``m``.
    """
    groups = {}
    for u, m in enumerate(incidence):
        groups.setdefault(m, []).append(u)
    for m, members in groups.items():
        seen = Counter(x & m for x in labels)
        for u in members:
            if seen[labels[u] & m] > 1:
                xu = labels[u] & m
                for v, y in enumerate(labels):
                    if v != u and y & m == xu:
                        return (u, v)
    return None


def from_words(values, dim: int) -> PartialCube:
    """Build from int labels (bit ``i`` = coordinate ``i``), dropping constant coordinates."""
    values = list(values)
    if not values:
        raise EmptyInput("no labels given")
    if len(set(values)) != len(values):
        raise FormatError("duplicate labels")
    full = (1 << dim) - 1
    ones = 0
    zeros = 0
    for x in values:
        if x >> dim:
            raise FormatError(f"label wider than {dim} bits")
        ones |= x
        zeros |= full & ~x
    live = ones & zeros
    if live != full:
        keep = bits(live)
        values = [_compress(x, keep) for x in values]
        dim = len(keep)
    if dim > MAX_DIM:
        raise DimensionTooLarge(f"dimension {dim} exceeds {MAX_DIM}")
    values.sort(key=_lex_key(dim))
    index = {x: i for i, x in enumerate(values)}
    incidence = []
    for x in values:
        m = 0
        for i in range(dim):
            if x ^ (1 << i) in index:
                m |= 1 << i
        incidence.append(m)
    bad = isometry_violation(values, incidence)
    if bad is not None:
        u, v = bad
        raise NotIsometric(
            f"graph distance between {int_to_word(values[u], dim)} and "
            f"{int_to_word(values[v], dim)} exceeds their Hamming distance"
        )
    return PartialCube(dim, tuple(values), index, tuple(incidence))


def _compress(x, keep):
    out = 0
    for j, i in enumerate(keep):
        if x >> i & 1:
            out |= 1 << j
    return out


def from_labels(labels) -> PartialCube:
    """Build from equal-length binary words such as ``["00", "01", "11"]``."""
    labels = list(labels)
    if not labels:
        raise EmptyInput("no labels given")
    dim = len(labels[0])
    if any(len(w) != dim for w in labels):
        raise FormatError("labels differ in length")
    return from_words([word_to_int(w) for w in labels], dim)


def zone_incidence(pc: PartialCube, v: int) -> tuple:
    if not 0 <= v < pc.n:
        raise BadVertexId(f"vertex {v} not in 0..{pc.n - 1}")
    return tuple(bits(pc.incidence[v]))


def hypercube(n: int) -> PartialCube:
    return from_words(range(1 << n), n)


# -- recognition ---------------------------------------------------------------

def embed_graph(g: SimpleGraph) -> tuple:
    """Label every vertex of ``g`` isometrically; returns ``(labels, dim)``.

    Edges related by ``d(x,u) + d(y,v) != d(x,v) + d(y,u)`` are merged into
    classes (union-find gives the transitive closure). Each class becomes one
    coordinate, numbered by its first edge in sorted edge order.
    """
    if g.n == 0:
        raise EmptyInput("empty graph")
    g.require_connected()
    dist = g.distance_matrix()
    for v in sorted(range(g.n), key=lambda v: dist[0][v]):
        for w in g.neighbors(v):
            if dist[0][w] == dist[0][v]:
                raise NotBipartite(f"edge ({v},{w}) closes an odd cycle")
    edges = g.edges
    m = len(edges)
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(m):
        x, y = edges[i]
        dx, dy = dist[x], dist[y]
        for j in range(i + 1, m):
            u, v = edges[j]
            if dx[u] + dy[v] != dx[v] + dy[u]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    roots = []
    for i in range(m):
        r = find(i)
        if r not in roots:
            roots.append(r)
    dim = len(roots)
    if dim > MAX_DIM:
        raise DimensionTooLarge(f"dimension {dim} exceeds {MAX_DIM}")
    labels = [0] * g.n
    for coord, r in enumerate(roots):
        a, b = edges[r]
        da, db = dist[a], dist[b]
        for w in range(g.n):
            if db[w] < da[w]:
                labels[w] |= 1 << coord
    # every edge must flip exactly its own class, non-edges must not be Hamming-1
    for i, (u, v) in enumerate(edges):
        if labels[u] ^ labels[v] != 1 << roots.index(find(i)):
            raise NotPartialCube(f"edge ({u},{v}) is not split by its class alone")
    if len(set(labels)) != g.n:
        raise NotPartialCube("two vertices received the same label")
    index = {x: i for i, x in enumerate(labels)}
    for u, x in enumerate(labels):
        for c in range(dim):
            w = index.get(x ^ (1 << c))
            if w is not None and not g.has_edge(u, w):
                raise NotPartialCube(f"non-adjacent vertices {u},{w} differ in one coordinate")
    incidence = [0] * g.n
    for u, v in edges:
        bit = labels[u] ^ labels[v]
        incidence[u] |= bit
        incidence[v] |= bit
    if isometry_violation(labels, incidence) is not None:
        raise NotPartialCube("labelling is not isometric")
    return labels, dim


def recognize_graph(g: SimpleGraph) -> PartialCube:
    labels, dim = embed_graph(g)
    return from_words(labels, dim)


def zone_classes(labels) -> set:
    """Zones as a set of frozensets of vertex-id edges, independent of coordinate order.

    ``labels[v]`` is the label of vertex ``v``; two labellings of one vertex
    set induce the same zone partition iff these sets are equal.
    """
    labels = list(labels)
    index = {x: v for v, x in enumerate(labels)}
    width = max(labels).bit_length() if labels else 0
    classes = {}
    for u, x in enumerate(labels):
        for c in range(width):
            w = index.get(x ^ (1 << c))
            if w is not None and u < w:
                classes.setdefault(c, set()).add((u, w))
    return {frozenset(c) for c in classes.values()}
