import random
from itertools import combinations

import pytest

from oracles import max_independent_size, min_hitting_set_size
from zonecover.acyclic import permutohedron
from zonecover.cover import (
    certificate,
    first_uncovered,
    greedy_cover,
    greedy_hitting_set,
    hitting_set_at_most,
    independent_complement_cover,
    is_cover,
    is_independent,
    max_independent_zones,
    min_cover_exact,
    min_hitting_set,
)
from zonecover.errors import BadParameters, SearchLimitExceeded, UncoverableVertex
from zonecover.graph import bits, cycle_graph, random_tree, star_graph
from zonecover.pcube import from_labels, hypercube, recognize_graph


def c6():
    return recognize_graph(cycle_graph(6))


def star(n):
    return recognize_graph(star_graph(n))


def test_is_cover_examples():
    assert is_cover(hypercube(3), [0])
    s5 = star(5)
    assert all(not is_cover(s5, [z for z in range(5) if z != skip]) for skip in range(5))
    assert is_cover(c6(), [0, 1])


def test_exact_examples():
    cert = min_cover_exact(hypercube(4))
    assert cert.size == 1 and cert.zones == (0,) and cert.optimal
    assert min_cover_exact(star(6)).size == 6
    assert min_cover_exact(c6()).size == 2


def test_greedy_examples():
    assert greedy_cover(hypercube(3)).size == 1
    for n in range(1, 8):
        assert greedy_cover(star(n)).size == n
    assert greedy_cover(c6()).size == 2


def test_independent_examples():
    assert max_independent_zones(star(5)) == ()
    assert max_independent_zones(hypercube(3)) == (0, 1)


def test_single_vertex_uncoverable():
    pc = from_labels(["0"])
    with pytest.raises(UncoverableVertex):
        min_cover_exact(pc)


def test_certificate_witness_is_valid():
    pc = c6()
    cert = min_cover_exact(pc)
    for v, (z, w) in cert.witness.items():
        assert z in cert.zones
        assert pc.labels[v] ^ (1 << z) == pc.labels[w]
    js = cert.to_json()
    assert js["size"] == 2 and js["optimal"] is True


def test_certificate_rejects_non_cover():
    with pytest.raises(BadParameters):
        certificate(star(3), [0])


def test_first_uncovered():
    pc = star(3)
    v = first_uncovered(pc, [0, 1])
    assert v is not None and pc.incidence[v] == 1 << 2
    with pytest.raises(BadParameters):
        first_uncovered(pc, [7])


def test_budget():
    pc = c6()
    assert min_cover_exact(pc, budget=1) is None
    cert = min_cover_exact(pc, budget=3)
    assert cert.size <= 3 and not cert.optimal and is_cover(pc, cert.zones)


def test_node_cap():
    pc = permutohedron(4)
    with pytest.raises(SearchLimitExceeded):
        min_cover_exact(pc, node_cap=1)


def random_family(rng, universe, count):
    return [rng.randrange(1, 1 << universe) for _ in range(count)]


@pytest.mark.parametrize("seed", range(60))
def test_min_hitting_set_matches_brute_force(seed):
    rng = random.Random(seed)
    u = rng.randint(2, 10)
    fam = random_family(rng, u, rng.randint(1, 15))
    best = min_hitting_set(fam)
    assert all(f & best for f in fam)
    assert best.bit_count() == min_hitting_set_size(fam, u)
    greedy = greedy_hitting_set(fam)
    assert all(f & greedy for f in fam) and greedy.bit_count() >= best.bit_count()
    found = hitting_set_at_most(fam, best.bit_count())
    assert found is not None and found.bit_count() <= best.bit_count()
    assert hitting_set_at_most(fam, best.bit_count() - 1) is None


@pytest.mark.parametrize("seed", range(30))
def test_lexicographic_tie_break(seed):
    rng = random.Random(100 + seed)
    u = rng.randint(2, 8)
    fam = random_family(rng, u, rng.randint(1, 10))
    best = min_hitting_set(fam)
    k = best.bit_count()
    first = next(c for c in combinations(range(u), k) if all(f & sum(1 << i for i in c) for f in fam))
    assert tuple(bits(best)) == first


@pytest.mark.parametrize("seed", range(20))
def test_duality_on_trees(seed):
    pc = recognize_graph(random_tree(1 + seed % 12, seed))
    exact = min_cover_exact(pc)
    ind = max_independent_zones(pc)
    assert is_independent(pc, ind)
    for z in range(pc.dim):
        if z not in ind:
            assert not is_independent(pc, ind + (z,))
    assert exact.size == pc.dim - max_independent_size(pc.incidence, pc.dim)
    comp = independent_complement_cover(pc)
    assert is_cover(pc, comp.zones) and comp.size == pc.dim - len(ind)
    assert 1 <= exact.size <= pc.dim


def test_cover_iff_complement_independent():
    pc = c6()
    full = set(range(pc.dim))
    for m in range(1 << pc.dim):
        s = bits(m)
        assert is_cover(pc, s) == is_independent(pc, sorted(full - set(s)))
