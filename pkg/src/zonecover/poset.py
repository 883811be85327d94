"""Posets, their downset lattices, guarding sets of elements and fibres.

Elements are ``0..n-1``; sets of elements (downsets, antichains, guards)
are int bitmasks internally and sorted tuples at the API boundary.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .cover import DEFAULT_NODE_CAP, min_hitting_set
from .errors import LimitExceeded, NotAPoset, TooManyDownsets
from .graph import bits, mask_of
from .pcube import PartialCube, from_words

DOWNSET_CAP = 10**6
ANTICHAIN_CAP = 10**6


@dataclass(frozen=True)
class Poset:
    """Strict order given by its cover pairs ``(a, b)`` meaning ``a < b`` with nothing in between."""

    n: int
    covers: tuple
    below: tuple = field(init=False, repr=False, compare=False)  # strictly smaller elements
    above: tuple = field(init=False, repr=False, compare=False)  # strictly larger elements

    def __post_init__(self):
        pairs = tuple(sorted({(int(a), int(b)) for a, b in self.covers}))
        for a, b in pairs:
            if not (0 <= a < self.n and 0 <= b < self.n) or a == b:
                raise NotAPoset(f"bad cover pair ({a},{b})")
        below, above = _closure(self.n, pairs)
        for a, b in pairs:
            if any(below[b] >> c & 1 for c in bits(above[a])):
                raise NotAPoset(f"pair ({a},{b}) is implied by others and is not a cover")
        object.__setattr__(self, "covers", pairs)
        object.__setattr__(self, "below", below)
        object.__setattr__(self, "above", above)

    @classmethod
    def from_relations(cls, n: int, pairs) -> "Poset":
        """Poset generated by arbitrary ``a < b`` pairs (transitively reduced here)."""
        pairs = {(int(a), int(b)) for a, b in pairs}
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise NotAPoset(f"bad relation ({a},{b})")
        below, above = _closure(n, pairs)
        covers = [
            (a, b) for a in range(n) for b in bits(above[a])
            if not any(below[b] >> c & 1 for c in bits(above[a]))
        ]
        return cls(n, tuple(covers))

    def less(self, a: int, b: int) -> bool:
        return bool(self.above[a] >> b & 1)

    def comparable(self, a: int, b: int) -> bool:
        return a == b or self.less(a, b) or self.less(b, a)

    def is_bipartite(self) -> bool:
        """Height at most two: no element has something both below and above it."""
        return not any(self.below[x] and self.above[x] for x in range(self.n))

    def to_text(self) -> str:
        lines = [f"poset {self.n} {len(self.covers)}"]
        lines.extend(f"{a} {b}" for a, b in self.covers)
        return "\n".join(lines) + "\n"


def _closure(n, pairs):
    succ = [0] * n
    for a, b in pairs:
        succ[a] |= 1 << b
    above = [0] * n
    state = [0] * n  # 0 new, 1 on stack, 2 done

    def visit(x):
        state[x] = 1
        acc = 0
        for y in bits(succ[x]):
            if state[y] == 1:
                raise NotAPoset(f"cover relation has a cycle through {y}")
            if state[y] == 0:
                visit(y)
            acc |= (1 << y) | above[y]
        above[x] = acc
        state[x] = 2

    for x in range(n):
        if state[x] == 0:
            visit(x)
    below = [0] * n
    for a in range(n):
        for b in bits(above[a]):
            below[b] |= 1 << a
    return tuple(below), tuple(above)


def chain(n: int) -> Poset:
    return Poset(n, tuple((i, i + 1) for i in range(n - 1)))


def antichain(n: int) -> Poset:
    return Poset(n, ())


def random_poset(n: int, seed: int, p: float = 1 / 3) -> Poset:
    """Keep each forward pair ``i < j`` with probability ``p``, then reduce to covers."""
    rng = random.Random(seed)
    return Poset.from_relations(n, [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p])


def all_posets(n: int):
    """Every naturally labelled poset on ``n`` elements (one per transitively closed pair set)."""
    pairs = list(combinations(range(n), 2))
    for m in range(1 << len(pairs)):
        rel = {pairs[i] for i in bits(m)}
        if all((a, c) in rel for a, b in rel for b2, c in rel if b == b2):
            yield Poset.from_relations(n, rel)


# -- downsets and the lattice cube ----------------------------------------------

def _word_key(n):
    def key(mask):
        return int("".join("1" if mask >> i & 1 else "0" for i in range(n)), 2) if n else 0

    return key


def downset_masks(p: Poset, cap: int = DOWNSET_CAP) -> list:
    """All downsets as masks, sorted by their membership word."""
    seen = {0}
    frontier = [0]
    full = (1 << p.n) - 1
    while frontier:
        nxt = []
        for d in frontier:
            for x in bits(full & ~d):
                if p.below[x] & ~d == 0:
                    e = d | (1 << x)
                    if e not in seen:
                        if len(seen) >= cap:
                            raise TooManyDownsets(f"more than {cap} downsets")
                        seen.add(e)
                        nxt.append(e)
        frontier = nxt
    return sorted(seen, key=_word_key(p.n))


def downsets(p: Poset, cap: int = DOWNSET_CAP) -> list:
    return [tuple(bits(d)) for d in downset_masks(p, cap)]


def lattice_cube(p: Poset, cap: int = DOWNSET_CAP) -> PartialCube:
    """Cover graph of the downset lattice; zone ``i`` is element ``i``."""
    return from_words(downset_masks(p, cap), p.n)


def guard_mask(p: Poset, d: int) -> int:
    """Elements whose addition to or removal from downset ``d`` gives another downset."""
    full = (1 << p.n) - 1
    out = 0
    for x in bits(full & ~d):
        if p.below[x] & ~d == 0:
            out |= 1 << x
    for x in bits(d):
        if p.above[x] & d == 0:
            out |= 1 << x
    return out


def is_guarding_poset(p: Poset, s, cap: int = DOWNSET_CAP) -> bool:
    m = mask_of(s)
    return all(guard_mask(p, d) & m for d in downset_masks(p, cap))


def min_guarding_poset(p: Poset, cap: int = DOWNSET_CAP, node_cap=DEFAULT_NODE_CAP) -> tuple:
    return tuple(bits(min_hitting_set([guard_mask(p, d) for d in downset_masks(p, cap)], node_cap)))


# -- antichains and fibres ------------------------------------------------------------

def maximal_antichain_masks(p: Poset, cap: int = ANTICHAIN_CAP) -> list:
    """Maximal cliques of the incomparability graph (Bron-Kerbosch with pivoting)."""
    full = (1 << p.n) - 1
    incomp = [full & ~(p.below[x] | p.above[x] | (1 << x)) for x in range(p.n)]
    out = []

    def expand(r, cand, excl):
        if not cand and not excl:
            if len(out) >= cap:
                raise LimitExceeded(f"more than {cap} maximal antichains")
            out.append(r)
            return
        pivot = max(bits(cand | excl), key=lambda u: (incomp[u] & cand).bit_count())
        for v in bits(cand & ~incomp[pivot]):
            bit = 1 << v
            expand(r | bit, cand & incomp[v], excl & incomp[v])
            cand &= ~bit
            excl |= bit

    if p.n:
        expand(0, full, 0)
    return sorted(out, key=lambda m: tuple(bits(m)))


def maximal_antichains(p: Poset, cap: int = ANTICHAIN_CAP) -> list:
    return [tuple(bits(m)) for m in maximal_antichain_masks(p, cap)]


def nontrivial_maximal_antichains(p: Poset, cap: int = ANTICHAIN_CAP) -> list:
    """Maximal antichains with at least two elements."""
    return [a for a in maximal_antichains(p, cap) if len(a) >= 2]


def is_fibre(p: Poset, s, cap: int = ANTICHAIN_CAP) -> bool:
    m = mask_of(s)
    return all(mask_of(a) & m for a in nontrivial_maximal_antichains(p, cap))


def min_fibre(p: Poset, cap: int = ANTICHAIN_CAP, node_cap=DEFAULT_NODE_CAP) -> tuple:
    family = [mask_of(a) for a in nontrivial_maximal_antichains(p, cap)]
    return tuple(bits(min_hitting_set(family, node_cap)))


def witness_antichain(p: Poset, d) -> tuple:
    """``max(D)`` together with the minimal elements outside ``D`` incomparable to all of it."""
    dm = d if isinstance(d, int) else mask_of(d)
    if any(p.below[x] & ~dm for x in bits(dm)):
        raise NotAPoset(f"{sorted(bits(dm))} is not a downset")
    full = (1 << p.n) - 1
    top = [x for x in bits(dm) if not p.above[x] & dm]
    top_mask = mask_of(top)
    out = set(top)
    for b in bits(full & ~dm):
        if p.below[b] & ~dm == 0 and not (p.below[b] | p.above[b]) & top_mask:
            out.add(b)
    return tuple(sorted(out))


def is_antichain(p: Poset, s) -> bool:
    return all(not p.comparable(a, b) for a, b in combinations(s, 2))


def is_maximal_antichain(p: Poset, s) -> bool:
    s = set(s)
    return is_antichain(p, s) and all(
        any(p.comparable(x, y) for y in s) for x in range(p.n) if x not in s
    )
