"""Pure-Python versions of the hot kernels.

Masks are arbitrary-precision ints, so these also serve instances too wide
for the compiled 64-bit versions.
"""

from ..errors import SearchLimitExceeded, TooManyOrientations


class _Budget(Exception):
    pass


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def hitting_set_search(family, k, allowed, budget):
    """Find a set of at most ``k`` bits from ``allowed`` meeting every mask in ``family``.

    Returns ``(mask_or_None, nodes_used)``. Branches on the member with the
    fewest allowed bits, bits ascending; a greedy packing of pairwise
    disjoint members gives the lower bound.
    """
    nodes = 0

    def rec(fam, k, allowed):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        if not fam:
            return 0
        if k <= 0:
            return None
        used = 0
        packed = 0
        best = 0
        best_count = 1 << 30
        for f in fam:
            fa = f & allowed
            if not fa:
                return None
            c = fa.bit_count()
            if c < best_count:
                best, best_count = fa, c
            if not fa & used:
                used |= fa
                packed += 1
        if packed > k:
            return None
        rest = allowed
        for z in _bits(best):
            bit = 1 << z
            rest &= ~bit
            r = rec([f for f in fam if not f & bit], k - 1, rest)
            if r is not None:
                return r | bit
        return None

    fam = sorted(family, key=lambda f: ((f & allowed).bit_count(), f))
    try:
        found = rec(fam, k, allowed)
    except _Budget:
        raise SearchLimitExceeded(f"hitting-set search exceeded {budget} nodes") from None
    return found, nodes


def acyclic_orientations(n, edges, cap):
    """Enumerate acyclic orientations edge by edge with reachability pruning.

    Bit ``i`` of a word is 0 when edge ``edges[i] = (u, v)`` points ``u -> v``.
    Returns ``(words, flip_masks)`` where bit ``i`` of a flip mask marks edge
    ``i`` as flippable (not transitive).
    """
    m = len(edges)
    words = []
    flips = []

    def leaf(word, reach):
        out = [0] * n
        heads = []
        for i, (u, v) in enumerate(edges):
            if word >> i & 1:
                u, v = v, u
            out[u] |= 1 << v
            heads.append((u, v))
        fm = 0
        for i, (u, v) in enumerate(heads):
            others = out[u] & ~(1 << v)
            transitive = False
            for w in _bits(others):
                if reach[w] >> v & 1:
                    transitive = True
                    break
            if not transitive:
                fm |= 1 << i
        return fm

    def rec(i, word, reach):
        if i == m:
            if len(words) >= cap:
                raise TooManyOrientations(f"more than {cap} acyclic orientations")
            words.append(word)
            flips.append(leaf(word, reach))
            return
        u, v = edges[i]
        for bit, (a, b) in ((0, (u, v)), (1, (v, u))):
            if reach[b] >> a & 1:
                continue
            gain = (1 << b) | reach[b]
            nr = list(reach)
            for x in range(n):
                if x == a or reach[x] >> a & 1:
                    nr[x] |= gain
            rec(i + 1, word | (bit << i), nr)

    rec(0, 0, [0] * n)
    return words, flips


def transitive_order_search(n, adj, partners, before):
    """Depth-first placement of vertices with memoised dead states.

    ``adj``/``partners``/``before`` are per-vertex masks: neighbours, the
    edges that must end up transitive, and twins that must be placed first.
    Returns the order as a list, or ``None`` when no order works.
    """
    plain = [adj[u] & ~partners[u] for u in range(n)]
    ends = 0
    for v in range(n):
        if partners[v]:
            ends |= 1 << v
    full = (1 << n) - 1
    front = [0] * n
    order = []
    failed = set()

    def rec(placed):
        if placed == full:
            return True
        open_ = full & ~placed
        key = [placed]
        for u in _bits(placed & ends):
            if partners[u] & open_:
                key.append((front[u] | plain[u]) & open_)
        key = tuple(key)
        if key in failed:
            return False
        for v in _bits(open_):
            if before[v] & ~placed:
                continue
            bit = 1 << v
            if any(not front[u] & bit for u in _bits(partners[v] & placed)):
                continue
            saved = front[:]
            for u in _bits(placed):
                if (adj[u] | front[u]) & bit:
                    front[u] |= adj[v]
                front[u] &= ~bit
            order.append(v)
            if rec(placed | bit):
                return True
            order.pop()
            front[:] = saved
        failed.add(key)
        return False

    return list(order) if rec(0) else None
