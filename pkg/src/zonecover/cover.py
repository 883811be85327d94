"""Zone covers: checking, exact minimisation, greedy baseline, independent sets.

Every cover question here reduces to a hitting-set problem over per-vertex
incidence masks: a zone set covers the cube iff it meets every mask. The
same solver backs the edge, element and vertex guarding problems of the
other modules.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import _kernels
from .errors import BadParameters, UncoverableVertex
from .graph import bits, mask_of
from .pcube import PartialCube

DEFAULT_NODE_CAP = 10**8
_REDUCE_LIMIT = 20000


@dataclass(frozen=True)
class CoverCertificate:
    zones: tuple
    witness: dict  # vertex -> (zone, neighbour)
    optimal: bool

    @property
    def size(self) -> int:
        return len(self.zones)

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "zones": list(self.zones),
            "optimal": self.optimal,
            "witness": {str(v): [z, w] for v, (z, w) in sorted(self.witness.items())},
        }


def _zone_mask(pc: PartialCube, s) -> int:
    m = 0
    for i in s:
        if not 0 <= i < pc.dim:
            raise BadParameters(f"zone {i} not in 0..{pc.dim - 1}")
        m |= 1 << i
    return m


def first_uncovered(pc: PartialCube, s) -> int | None:
    m = _zone_mask(pc, s)
    for v, inc in enumerate(pc.incidence):
        if not inc & m:
            return v
    return None


def is_cover(pc: PartialCube, s) -> bool:
    return first_uncovered(pc, s) is None


def certificate(pc: PartialCube, zones, optimal=False) -> CoverCertificate:
    zones = tuple(sorted(set(zones)))
    m = _zone_mask(pc, zones)
    witness = {}
    for v, inc in enumerate(pc.incidence):
        hit = inc & m
        if not hit:
            raise BadParameters(f"zones {list(zones)} leave vertex {v} uncovered")
        z = (hit & -hit).bit_length() - 1
        witness[v] = (z, pc.neighbor(v, z))
    return CoverCertificate(zones, witness, optimal)


# -- generic hitting-set machinery ---------------------------------------------

def reduce_family(family) -> list:
    """Distinct masks with strict supersets removed (hitting the rest hits them)."""
    fam = sorted(set(family), key=lambda f: (f.bit_count(), f))
    if len(fam) > _REDUCE_LIMIT:
        return fam
    kept = []
    for f in fam:
        if not any(k & f == k for k in kept):
            kept.append(f)
    return kept


def packing_bound(family) -> int:
    used = 0
    count = 0
    for f in sorted(family, key=lambda f: (f.bit_count(), f)):
        if not f & used:
            used |= f
            count += 1
    return count


def greedy_hitting_set(family, weights=None) -> int:
    """Repeatedly take the bit meeting the most (weighted) unhit masks; lowest bit on ties."""
    pending = Counter()
    for i, f in enumerate(family):
        pending[f] += 1 if weights is None else weights[i]
    chosen = 0
    while pending:
        score = Counter()
        for f, w in pending.items():
            if not f:
                raise UncoverableVertex("a member has no available element")
            for b in bits(f):
                score[b] += w
        best = min(score, key=lambda b: (-score[b], b))
        bit = 1 << best
        chosen |= bit
        pending = Counter({f: w for f, w in pending.items() if not f & bit})
    return chosen


class _Budget:
    def __init__(self, cap):
        self.left = cap

    def search(self, fam, k, allowed):
        found, used = _kernels.hitting_set_search(fam, k, allowed, self.left)
        self.left -= used
        return found


def hitting_set_at_most(family, k, node_cap=DEFAULT_NODE_CAP):
    """Some hitting set with at most ``k`` bits, or ``None``."""
    fam = reduce_family(family)
    if any(f == 0 for f in fam):
        raise UncoverableVertex("a member has no available element")
    allowed = 0
    for f in fam:
        allowed |= f
    return _Budget(node_cap).search(fam, k, allowed)


def min_hitting_set(family, node_cap=DEFAULT_NODE_CAP) -> int:
    """Minimum-cardinality hitting set; among optima the lexicographically smallest sorted index tuple."""
    fam = reduce_family(family)
    if any(f == 0 for f in fam):
        raise UncoverableVertex("a member has no available element")
    if not fam:
        return 0
    allowed = 0
    for f in fam:
        allowed |= f
    budget = _Budget(node_cap)
    upper = greedy_hitting_set(fam).bit_count()
    size = upper
    for k in range(packing_bound(fam), upper):
        if budget.search(fam, k, allowed) is not None:
            size = k
            break
    return _lex_smallest(fam, size, allowed, budget)


def _lex_smallest(fam, size, allowed, budget) -> int:
    chosen = 0
    last = -1
    for slot in range(size):
        left = size - slot - 1
        for z in bits(allowed):
            if z <= last:
                continue
            bit = 1 << z
            sub = [f for f in fam if not f & bit]
            later = allowed & ~((bit << 1) - 1)
            ok = not sub if left == 0 else budget.search(sub, left, later) is not None
            if ok:
                chosen |= bit
                fam = sub
                last = z
                break
        else:
            raise AssertionError("minimum size not attainable in lexicographic pass")
    return chosen


def max_independent_mask(family, universe: int) -> int:
    """Ascending greedy: keep bit ``i`` unless some member would lie entirely inside the kept set."""
    fam = reduce_family(family)
    kept = 0
    for i in bits(universe):
        trial = kept | (1 << i)
        if all(f & ~trial for f in fam):
            kept = trial
    return kept


# -- partial-cube front ends -----------------------------------------------------

def _check_coverable(pc: PartialCube):
    if pc.n < 2:
        raise UncoverableVertex("a single-vertex cube has no zones")


def min_cover_exact(pc: PartialCube, budget: int | None = None, node_cap=DEFAULT_NODE_CAP):
    """Exact minimum zone cover.

    Without ``budget`` the result is optimal with the lexicographically
    smallest zone tuple among optima. With ``budget=k`` returns any cover of
    size at most ``k`` (not flagged optimal) or ``None``.
    """
    _check_coverable(pc)
    if budget is not None:
        found = hitting_set_at_most(pc.incidence, budget, node_cap)
        return None if found is None else certificate(pc, bits(found), optimal=False)
    return certificate(pc, bits(min_hitting_set(pc.incidence, node_cap)), optimal=True)


def greedy_cover(pc: PartialCube) -> CoverCertificate:
    _check_coverable(pc)
    return certificate(pc, bits(greedy_hitting_set(pc.incidence)), optimal=False)


def max_independent_zones(pc: PartialCube) -> tuple:
    """Inclusion-maximal zone set containing no vertex's whole incidence set."""
    _check_coverable(pc)
    return tuple(bits(max_independent_mask(pc.incidence, (1 << pc.dim) - 1)))


def is_independent(pc: PartialCube, s) -> bool:
    m = _zone_mask(pc, s)
    return all(inc & ~m for inc in pc.incidence)


def independent_complement_cover(pc: PartialCube) -> CoverCertificate:
    ind = mask_of(max_independent_zones(pc))
    return certificate(pc, bits(((1 << pc.dim) - 1) & ~ind), optimal=False)
