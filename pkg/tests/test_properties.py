from hypothesis import given, settings, strategies as st

from oracles import is_partial_cube_labelling, max_independent_size
from zonecover.acyclic import enumerate_orientations, flip_graph
from zonecover.cover import (
    greedy_cover,
    is_cover,
    is_independent,
    max_independent_zones,
    min_cover_exact,
)
from zonecover.errors import NotIsometric
from zonecover.graph import SimpleGraph, bits, random_connected_graph, random_tree
from zonecover.pcube import embed_graph, from_words, recognize_graph, zone_classes
from zonecover.poset import guard_mask, downset_masks, random_poset

SETTINGS = settings(max_examples=60, deadline=None)


@st.composite
def cubes(draw):
    kind = draw(st.sampled_from(["tree", "flip", "words"]))
    seed = draw(st.integers(0, 10**6))
    if kind == "tree":
        return recognize_graph(random_tree(draw(st.integers(1, 12)), seed))
    if kind == "flip":
        return flip_graph(random_connected_graph(draw(st.integers(2, 5)), 0.5, seed))
    dim = draw(st.integers(1, 5))
    words = draw(st.sets(st.integers(0, (1 << dim) - 1), min_size=2, max_size=1 << dim))
    try:
        return from_words(sorted(words), dim)
    except NotIsometric:
        return from_words(range(1 << dim), dim)


@SETTINGS
@given(cubes())
def test_cover_invariants(pc):
    exact = min_cover_exact(pc)
    greedy = greedy_cover(pc)
    assert is_cover(pc, exact.zones) and is_cover(pc, greedy.zones)
    assert 1 <= exact.size <= greedy.size <= pc.dim
    assert exact.size == pc.dim - max_independent_size(pc.incidence, pc.dim)
    ind = max_independent_zones(pc)
    assert is_independent(pc, ind)
    for v, (z, w) in exact.witness.items():
        assert pc.labels[v] ^ (1 << z) == pc.labels[w]


@SETTINGS
@given(cubes())
def test_incidence_is_exactly_the_neighbours(pc):
    for v, x in enumerate(pc.labels):
        for i in range(pc.dim):
            assert ((x ^ (1 << i)) in pc.index) == bool(pc.incidence[v] >> i & 1)


@SETTINGS
@given(cubes())
def test_recognition_roundtrip(pc):
    labels, dim = embed_graph(pc.hamming_graph())
    assert dim == pc.dim
    assert zone_classes(labels) == zone_classes(pc.labels)


@SETTINGS
@given(st.integers(1, 4), st.sets(st.integers(0, 15), min_size=1, max_size=16))
def test_from_words_agrees_with_distance_oracle(dim, words):
    words = sorted(w & ((1 << dim) - 1) for w in words)
    words = sorted(set(words))
    try:
        from_words(words, dim)
        ok = True
    except NotIsometric:
        ok = False
    assert ok == (len(words) == 1 or is_partial_cube_labelling(words))


@SETTINGS
@given(st.integers(2, 6), st.integers(0, 10**6))
def test_flippable_edges_span_and_connect(n, seed):
    g = random_connected_graph(n, 0.5, seed)
    _, flips = enumerate_orientations(g)
    for f in flips:
        h = SimpleGraph(g.n, tuple(g.edges[i] for i in bits(f)))
        assert h.is_connected()


@SETTINGS
@given(st.integers(1, 7), st.integers(0, 10**6))
def test_guard_masks_are_lattice_incidence(n, seed):
    p = random_poset(n, seed)
    ds = set(downset_masks(p))
    for d in ds:
        expect = sum(1 << x for x in range(n) if (d ^ (1 << x)) in ds)
        assert guard_mask(p, d) == expect
