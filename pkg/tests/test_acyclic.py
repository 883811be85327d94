import random

import networkx as nx
import pytest

from oracles import (
    acyclic_orientation_count,
    brute_guarding,
    brute_min_cut_size,
    edge_connectivity,
    has_hamilton_path,
    nx_chordal,
    transitive_arcs,
)
from zonecover.acyclic import (
    AcyclicOrientation,
    arcs,
    count_acyclic_orientations,
    enumerate_orientations,
    find_transitive_order,
    flip_graph,
    flip_mask,
    flippable,
    gen_wheel_blob,
    hamilton_reduction,
    is_chordal,
    is_edge_cut,
    is_guarding,
    min_edge_cut,
    min_guarding,
    orientation_from_order,
    permutohedron,
)
from zonecover.cover import is_cover
from zonecover.errors import BadParameters, NotConnected, TooManyOrientations
from zonecover.graph import (
    SimpleGraph,
    bits,
    complete_graph,
    cycle_graph,
    path_graph,
    random_chordal_graph,
    random_connected_graph,
    random_tree,
    star_graph,
)


def atlas(max_nodes, connected=True):
    out = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > max_nodes:
            break
        if connected and not nx.is_connected(h):
            continue
        out.append(SimpleGraph(h.number_of_nodes(), tuple(h.edges())))
    return out


def word_for(g, wanted):
    """Orientation word realising the given arcs."""
    word = 0
    for t, h in wanted:
        i = g.edge_index(t, h)
        if (t, h) != g.edges[i]:
            word |= 1 << i
    return word


def test_flippable_examples():
    p = path_graph(3)
    assert flippable(p, 0, p.edge_index(0, 1))
    tri = complete_graph(3)
    w = word_for(tri, [(0, 1), (1, 2), (0, 2)])
    assert not flippable(tri, w, tri.edge_index(0, 2))
    assert flippable(tri, w, tri.edge_index(0, 1))


def test_flippable_c4_directed_path():
    c4 = cycle_graph(4)
    want = [(0, 1), (1, 2), (2, 3), (0, 3)]
    w = word_for(c4, want)
    trans = transitive_arcs(arcs(c4, w))
    assert trans == {(0, 3)}
    for i in range(c4.m):
        assert flippable(c4, AcyclicOrientation(c4, w), i) == (arcs(c4, w)[i] not in trans)


def test_cyclic_orientation_rejected():
    c3 = cycle_graph(3)
    with pytest.raises(BadParameters):
        AcyclicOrientation(c3, word_for(c3, [(0, 1), (1, 2), (2, 0)]))
    assert AcyclicOrientation(c3, 0).bitstring() == "000"


def test_flip_graph_examples():
    assert flip_graph(cycle_graph(4)).n == 14
    assert flip_graph(complete_graph(3)).n == 6
    pc = permutohedron(4)
    assert pc.n == 24 and pc.dim == 6


def test_flip_graph_needs_connected():
    with pytest.raises(NotConnected):
        flip_graph(SimpleGraph(4, ((0, 1), (2, 3))))


def test_orientation_cap():
    with pytest.raises(TooManyOrientations):
        count_acyclic_orientations(complete_graph(6), cap=100)


@pytest.mark.parametrize("seed", range(25))
def test_orientation_count_matches_chromatic_oracle(seed):
    g = random_connected_graph(2 + seed % 6, 0.45, seed)
    assert count_acyclic_orientations(g) == acyclic_orientation_count(g.n, g.edges)


@pytest.mark.parametrize("seed", range(10))
def test_flip_masks_match_definition(seed):
    g = random_connected_graph(3 + seed % 4, 0.5, seed)
    words, flips = enumerate_orientations(g)
    for w, f in zip(words, flips):
        trans = transitive_arcs(arcs(g, w))
        expect = sum(1 << i for i, a in enumerate(arcs(g, w)) if a not in trans)
        assert f == expect == flip_mask(g, w)


def test_is_guarding_examples():
    k4 = complete_graph(4)
    star0 = [k4.edge_index(0, v) for v in (1, 2, 3)]
    assert is_guarding(k4, star0)
    assert is_guarding(k4, star0, method="enumerate")
    for i in range(k4.m):
        for j in range(i + 1, k4.m):
            assert not is_guarding(k4, [i, j])
    assert not is_guarding(cycle_graph(4), [0])


def test_min_guarding_examples():
    assert len(min_guarding(complete_graph(4))) == 3
    for seed in range(5):
        assert len(min_guarding(random_tree(1 + seed, seed))) == 1
    assert len(min_guarding(cycle_graph(4))) == 2


def test_guarding_bad_edge():
    with pytest.raises(BadParameters):
        is_guarding(cycle_graph(4), [9])
    with pytest.raises(BadParameters):
        is_guarding(cycle_graph(4), [0], method="magic")


@pytest.mark.parametrize("seed", range(40))
def test_search_and_enumeration_agree_with_brute_force(seed):
    rng = random.Random(seed)
    g = random_connected_graph(3 + seed % 4, 0.5, seed)
    s = [i for i in range(g.m) if rng.random() < 0.5]
    expect = brute_guarding(g.n, g.edges, s)
    assert is_guarding(g, s) == expect
    assert is_guarding(g, s, method="enumerate") == expect
    order = find_transitive_order(g, s)
    if order is not None:
        w = orientation_from_order(g, order)
        assert not flip_mask(g, w) & sum(1 << i for i in s)


@pytest.mark.parametrize("g", atlas(6), ids=lambda g: f"n{g.n}m{g.m}")
def test_min_guarding_methods_agree(g):
    if g.m == 0:
        return
    implicit = min_guarding(g)
    assert implicit == min_guarding(g, method="enumerate")
    assert is_guarding(g, implicit, method="enumerate")


def test_flip_graph_cover_iff_guarding():
    for g in atlas(5):
        if g.m == 0:
            continue
        pc = flip_graph(g)
        for m in range(1 << g.m):
            s = bits(m)
            assert is_cover(pc, s) == is_guarding(g, s), (g, s)


def test_min_cut_examples():
    assert len(min_edge_cut(cycle_graph(4))) == 2
    assert len(min_edge_cut(complete_graph(4))) == 3
    g, _ = gen_wheel_blob(6, 3)
    assert len(min_edge_cut(g)) == 6


@pytest.mark.parametrize("seed", range(30))
def test_min_cut_matches_oracles(seed):
    g = random_connected_graph(2 + seed % 7, 0.4, seed)
    cut = min_edge_cut(g)
    assert is_edge_cut(g, cut)
    assert len(cut) == brute_min_cut_size(g.n, g.edges) == edge_connectivity(g.n, g.edges)


@pytest.mark.parametrize("seed", range(30))
def test_sampled_edge_cuts_guard(seed):
    rng = random.Random(seed)
    g = random_connected_graph(3 + seed % 4, 0.5, seed)
    side = {v for v in range(g.n) if rng.random() < 0.5} or {0}
    if len(side) == g.n:
        side.discard(g.n - 1)
    cut = [i for i, (u, v) in enumerate(g.edges) if (u in side) != (v in side)]
    assert is_edge_cut(g, cut)
    assert is_guarding(g, cut)


def test_chordal_examples():
    assert is_chordal(complete_graph(4))[0]
    assert not is_chordal(cycle_graph(4))[0]
    k4e = complete_graph(4).without_edges([0])
    ok, peo = is_chordal(k4e)
    assert ok and sorted(peo) == [0, 1, 2, 3]


@pytest.mark.parametrize("g", atlas(6, connected=False), ids=lambda g: f"n{g.n}m{g.m}")
def test_chordal_matches_networkx(g):
    ok, peo = is_chordal(g)
    assert ok == nx_chordal(g.n, g.edges)
    if ok:
        pos = {v: i for i, v in enumerate(peo)}
        for v in peo:
            later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
            assert all(g.has_edge(a, b) for a in later for b in later if a < b)


@pytest.mark.parametrize("seed", range(15))
def test_chordal_guarding_equals_cut(seed):
    g = random_chordal_graph(3 + seed % 5, seed)
    assert len(min_guarding(g)) == len(min_edge_cut(g))


def test_wheel_blob_shape():
    g, rim = gen_wheel_blob(6, 3)
    assert g.n == 19 and len(rim) == 3
    assert edge_connectivity(g.n, g.edges) == 6
    assert is_guarding(g, rim)
    g3, rim3 = gen_wheel_blob(3, 3)
    assert edge_connectivity(g3.n, g3.edges) == 3
    assert not is_chordal(g3)[0]


def test_wheel_blob_brute_force_small():
    g, rim = gen_wheel_blob(4, 3)
    # 3628800 acyclic orientations, above the default cap
    assert is_guarding(g, rim, method="enumerate", cap=10**7)
    assert not is_guarding(g, rim[:2])


@pytest.mark.parametrize("t,g", [(3, 3), (4, 3), (5, 3)])
def test_wheel_blob_min_guarding_at_most_g(t, g):
    graph, rim = gen_wheel_blob(t, g)
    size = len(min_guarding(graph))
    assert size <= g
    if g < t:
        assert size < t


@pytest.mark.parametrize("t,g", [(1, 3), (4, 4), (4, 5), (3, 1)])
def test_wheel_blob_bad_parameters(t, g):
    with pytest.raises(BadParameters):
        gen_wheel_blob(t, g)


def test_hamilton_examples():
    kn, s = hamilton_reduction(path_graph(4))
    assert not is_guarding(kn, s)
    kn, s = hamilton_reduction(star_graph(3))
    assert is_guarding(kn, s)
    assert not has_hamilton_path(4, star_graph(3).edges)
    kn, s = hamilton_reduction(SimpleGraph(3, ()))
    assert len(s) == 3 and is_guarding(kn, s)
