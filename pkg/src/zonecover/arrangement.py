"""Exact cell enumeration for hyperplane arrangements and their dual partial cubes.

All predicates use :class:`fractions.Fraction`; nothing here touches floats.
Sign ``+`` at hyperplane ``a.x = c`` means ``a.x > c`` and maps to bit 0 of
the dual label, ``-`` maps to bit 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import CellCountMismatch, DegenerateArrangement, LimitExceeded
from .pcube import PartialCube, from_labels

MAX_LINES_2D = 24
MAX_N_ND = 16
MAX_D = 4


@dataclass(frozen=True)
class Arrangement:
    d: int
    hyperplanes: tuple  # ((normal tuple of Fraction), offset Fraction)

    def __post_init__(self):
        hs = []
        for normal, offset in self.hyperplanes:
            normal = tuple(Fraction(x) for x in normal)
            if len(normal) != self.d:
                raise DegenerateArrangement(f"normal {normal} is not {self.d}-dimensional")
            if not any(normal):
                raise DegenerateArrangement("zero normal vector")
            hs.append((normal, Fraction(offset)))
        object.__setattr__(self, "hyperplanes", tuple(hs))

    @property
    def n(self) -> int:
        return len(self.hyperplanes)

    @classmethod
    def lines(cls, triples) -> "Arrangement":
        """Lines ``a x + b y = c`` from ``(a, b, c)`` triples."""
        return cls(2, tuple(((a, b), c) for a, b, c in triples))

    def side(self, i: int, point) -> int:
        normal, offset = self.hyperplanes[i]
        s = sum(a * x for a, x in zip(normal, point)) - offset
        return (s > 0) - (s < 0)

    def sign_vector(self, point) -> str | None:
        out = []
        for i in range(self.n):
            s = self.side(i, point)
            if s == 0:
                return None
            out.append("+" if s > 0 else "-")
        return "".join(out)


@dataclass(frozen=True)
class CellList:
    cells: tuple       # sorted sign strings
    witnesses: tuple   # one interior rational point per cell
    boundary: tuple    # per cell, hyperplane ids whose sign flip is another cell

    def to_json(self) -> list:
        return list(self.cells)


def expected_cell_count(n: int, d: int) -> int:
    return sum(comb(n, k) for k in range(d + 1))


# -- exact linear algebra ------------------------------------------------------

def _det(rows) -> Fraction:
    m = [list(map(Fraction, r)) for r in rows]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, size):
            f = m[r][col] / m[col][col]
            if f:
                for c in range(col, size):
                    m[r][c] -= f * m[col][c]
    return det


def _rank(rows) -> int:
    m = [list(map(Fraction, r)) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col] / m[rank][col]
                for c in range(col, cols):
                    m[r][c] -= f * m[rank][c]
        rank += 1
    return rank


def _violation_with(hs, d, new_idx, pool):
    """Degeneracy introduced by hyperplane ``new_idx`` against the ids in ``pool``."""
    normal, offset = hs[new_idx]
    if not any(normal):
        return f"hyperplane {new_idx} has a zero normal"
    k = min(d, len(pool) + 1)
    for rest in combinations(pool, k - 1):
        ids = (*rest, new_idx)
        if _rank([hs[i][0] for i in ids]) < k:
            if k == 2:
                return f"hyperplanes {sorted(ids)} are parallel"
            return f"normals of hyperplanes {sorted(ids)} are linearly dependent"
    if len(pool) >= d:
        for rest in combinations(pool, d):
            ids = (*rest, new_idx)
            if _det([(*hs[i][0], hs[i][1]) for i in ids]) == 0:
                return f"hyperplanes {sorted(ids)} pass through a common point"
    return None


def general_position_violation(a: Arrangement) -> str | None:
    """Human-readable description of the first violating tuple, or ``None``."""
    hs = a.hyperplanes
    for j in range(a.n):
        msg = _violation_with(hs, a.d, j, range(j))
        if msg:
            return msg
    return None


def check_general_position(a: Arrangement) -> bool:
    return general_position_violation(a) is None


def _require_general_position(a: Arrangement):
    msg = general_position_violation(a)
    if msg:
        raise DegenerateArrangement(msg)


# -- Fourier-Motzkin over strict inequalities ---------------------------------

def _normalize(coefs, rhs):
    lead = next((abs(c) for c in coefs if c), None)
    if lead is None:
        return None, rhs
    return tuple(c / lead for c in coefs), rhs / lead


def strict_feasible_point(constraints, d):
    """A rational point with ``a.x < b`` for every ``(a, b)``, or ``None``.

    Eliminates variables from the last one down, then back-substitutes
    choosing each coordinate strictly inside its interval.
    """
    stages = []
    cur = set()
    for a, b in constraints:
        key, rhs = _normalize(tuple(a), Fraction(b))
        if key is None:
            if rhs <= 0:
                return None
            continue
        cur.add((key, rhs))
    for k in reversed(range(d)):
        stages.append(cur)
        pos, neg, nxt = [], [], set()
        for a, b in cur:
            if a[k] > 0:
                pos.append((a, b, a[k]))
            elif a[k] < 0:
                neg.append((a, b, -a[k]))
            else:
                nxt.add((a, b))
        for pa, pb, ps in pos:
            for na, nb, ns in neg:
                coefs = tuple(x / ps + y / ns for x, y in zip(pa, na))
                key, rhs = _normalize(coefs, pb / ps + nb / ns)
                if key is None:
                    if rhs <= 0:
                        return None
                    continue
                nxt.add((key, rhs))
        cur = nxt
    point = [Fraction(0)] * d
    for k in range(d):
        cons = stages[d - 1 - k]
        lo = hi = None
        for a, b in cons:
            ak = a[k]
            if not ak:
                continue
            bound = (b - sum(a[j] * point[j] for j in range(k))) / ak
            if ak > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is not None and hi is not None:
            if not lo < hi:
                raise AssertionError("elimination reported feasibility but interval is empty")
            point[k] = (lo + hi) / 2
        elif lo is not None:
            point[k] = lo + 1
        elif hi is not None:
            point[k] = hi - 1
    return tuple(point)


def _cell_constraints(a: Arrangement, signs: str, skip=None):
    out = []
    for i, s in enumerate(signs):
        if i == skip:
            continue
        normal, offset = a.hyperplanes[i]
        if s == "+":
            out.append((tuple(-x for x in normal), -offset))
        else:
            out.append((normal, offset))
    return out


def bounds_cell(a: Arrangement, signs: str, i: int) -> bool:
    """Whether hyperplane ``i`` carries a facet of the cell: some point on it satisfies every other strict sign."""
    normal, offset = a.hyperplanes[i]
    p = next(j for j, x in enumerate(normal) if x)
    free = [j for j in range(a.d) if j != p]
    # x_p = (offset - sum_{j != p} normal_j x_j) / normal_p
    cons = []
    for coefs, rhs in _cell_constraints(a, signs, skip=i):
        scale = coefs[p] / normal[p]
        reduced = tuple(coefs[j] - scale * normal[j] for j in free)
        cons.append((reduced, rhs - scale * offset))
    return strict_feasible_point(cons, len(free)) is not None


# -- enumeration -----------------------------------------------------------------

def _finish(a: Arrangement, found: dict) -> CellList:
    expected = expected_cell_count(a.n, a.d)
    if len(found) != expected:
        raise CellCountMismatch(f"found {len(found)} cells, expected {expected}")
    cells = tuple(sorted(found))
    present = set(cells)
    flip = {"+": "-", "-": "+"}
    boundary = tuple(
        tuple(i for i in range(a.n) if c[:i] + flip[c[i]] + c[i + 1:] in present) for c in cells
    )
    return CellList(cells, tuple(found[c] for c in cells), boundary)


def _line_point(normal, offset):
    a, b = normal
    s = a * a + b * b
    return (a * offset / s, b * offset / s)


def cells_2d(a: Arrangement) -> CellList:
    """Cells of a line arrangement by probing around every vertex and along a bounding box."""
    if a.d != 2:
        raise DegenerateArrangement("cells_2d needs d = 2")
    if not 1 <= a.n <= MAX_LINES_2D:
        raise LimitExceeded(f"cells_2d handles 1..{MAX_LINES_2D} lines, got {a.n}")
    _require_general_position(a)
    hs = a.hyperplanes
    found = {}

    def record(pt):
        sv = a.sign_vector(pt)
        if sv is not None and sv not in found:
            found[sv] = pt

    vertices = []
    for i, j in combinations(range(a.n), 2):
        (a1, b1), c1 = hs[i]
        (a2, b2), c2 = hs[j]
        det = a1 * b2 - a2 * b1
        p = ((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)
        vertices.append(p)
        u = (-b1, a1)
        w = (-b2, a2)
        others = [k for k in range(a.n) if k not in (i, j)]
        base = {k: a.side(k, p) for k in others}
        for su in (1, -1):
            for sw in (1, -1):
                t = Fraction(1)
                while True:
                    q = (p[0] + t * (su * u[0] + sw * w[0]), p[1] + t * (su * u[1] + sw * w[1]))
                    if all(a.side(k, q) == base[k] for k in others):
                        break
                    t /= 2
                record(q)
    anchors = vertices + [_line_point(*h) for h in hs]
    xmin = min(p[0] for p in anchors) - 1
    xmax = max(p[0] for p in anchors) + 1
    ymin = min(p[1] for p in anchors) - 1
    ymax = max(p[1] for p in anchors) + 1
    for corner in ((xmin, ymin), (xmin, ymax), (xmax, ymin), (xmax, ymax)):
        record(corner)
    for axis, fixed_values, lo, hi in ((1, (ymin, ymax), xmin, xmax), (0, (xmin, xmax), ymin, ymax)):
        for fixed in fixed_values:
            stops = {lo, hi}
            for (na, nb), c in hs:
                along, across = (na, nb) if axis == 1 else (nb, na)
                if along:
                    t = (c - across * fixed) / along
                    if lo <= t <= hi:
                        stops.add(t)
            stops = sorted(stops)
            for s, e in zip(stops, stops[1:]):
                mid = (s + e) / 2
                record((mid, fixed) if axis == 1 else (fixed, mid))
    return _finish(a, found)


def cells_nd(a: Arrangement) -> CellList:
    """Cells as the feasible strict sign systems, grown hyperplane by hyperplane.

    A sign prefix is extended only when feasible, so infeasible vectors are
    discarded without visiting their 2^k completions; the retained witness
    point decides most extensions without re-solving.
    """
    if not 2 <= a.d <= MAX_D or a.n > MAX_N_ND:
        raise LimitExceeded(f"cells_nd handles 2 <= d <= {MAX_D}, n <= {MAX_N_ND}")
    _require_general_position(a)
    found = {}

    def grow(prefix, point):
        j = len(prefix)
        if j == a.n:
            found[prefix] = point
            return
        side = a.side(j, point)
        for s in "+-":
            want = 1 if s == "+" else -1
            if side == want:
                grow(prefix + s, point)
                continue
            pt = strict_feasible_point(_cell_constraints(a, prefix + s), a.d)
            if pt is not None:
                grow(prefix + s, pt)

    grow("", tuple(Fraction(0) for _ in range(a.d)))
    return _finish(a, found)


def dual_cube(cells: CellList) -> PartialCube:
    """Cells become vertices; zone ``i`` is hyperplane ``i``."""
    return from_labels(c.replace("+", "0").replace("-", "1") for c in cells.cells)


# -- random instances ------------------------------------------------------------

def random_arrangement(n: int, d: int, seed: int, bound: int = 1000) -> Arrangement:
    """Integer coefficients uniform in ``[-bound, bound]``, each candidate rejected if it breaks general position."""
    rng = random.Random(seed)
    hs = []
    while len(hs) < n:
        normal = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(d))
        cand = hs + [(normal, Fraction(rng.randint(-bound, bound)))]
        if _violation_with(cand, d, len(hs), range(len(hs))) is None:
            hs = cand
    return Arrangement(d, tuple(hs))


def random_lines(n: int, seed: int) -> Arrangement:
    return random_arrangement(n, 2, seed)
