# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; 64-bit masks only (dimension and edge count <= 64).

Search order and output order match ``_pykernels`` exactly.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free
from libcpp.string cimport string
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

from ..errors import SearchLimitExceeded, TooManyOrientations


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef struct HSState:
    uint64_t* arena
    Py_ssize_t top
    int64_t nodes
    int64_t budget


cdef int hs_rec(uint64_t* fam, Py_ssize_t nf, int k, uint64_t allowed,
                uint64_t* out, HSState* st) nogil:
    # 1 found, 0 infeasible, -1 budget exhausted
    cdef Py_ssize_t i, nsub
    cdef uint64_t f, fa, used = 0, best = 0, rest, bit, r
    cdef int c, best_count = 1 << 30, packed = 0, res
    cdef uint64_t* sub
    st.nodes += 1
    if st.nodes > st.budget:
        return -1
    if nf == 0:
        out[0] = 0
        return 1
    if k <= 0:
        return 0
    for i in range(nf):
        f = fam[i]
        fa = f & allowed
        if fa == 0:
            return 0
        c = popcount(fa)
        if c < best_count:
            best = fa
            best_count = c
        if (fa & used) == 0:
            used |= fa
            packed += 1
    if packed > k:
        return 0
    rest = allowed
    sub = st.arena + st.top
    while best:
        bit = best & (~best + 1)
        best ^= bit
        rest &= ~bit
        nsub = 0
        for i in range(nf):
            if (fam[i] & bit) == 0:
                sub[nsub] = fam[i]
                nsub += 1
        st.top += nsub
        res = hs_rec(sub, nsub, k - 1, rest, &r, st)
        st.top -= nsub
        if res < 0:
            return -1
        if res == 1:
            out[0] = r | bit
            return 1
    return 0


def hitting_set_search(family, int k, uint64_t allowed, int64_t budget):
    """Same contract as ``_pykernels.hitting_set_search``."""
    fam = sorted(family, key=lambda f: (bin(f & allowed).count("1"), f))
    cdef Py_ssize_t nf = len(fam), i
    cdef HSState st
    cdef uint64_t result = 0
    cdef int res
    cdef Py_ssize_t cap = nf * (k + 2) + 1
    st.arena = <uint64_t*> malloc(cap * sizeof(uint64_t))
    if st.arena == NULL:
        raise MemoryError()
    try:
        for i in range(nf):
            st.arena[i] = fam[i]
        st.top = nf
        st.nodes = 0
        st.budget = budget
        with nogil:
            res = hs_rec(st.arena, nf, k, allowed, &result, &st)
    finally:
        free(st.arena)
    if res < 0:
        raise SearchLimitExceeded(f"hitting-set search exceeded {budget} nodes")
    return (result if res == 1 else None), st.nodes


cdef struct AOState:
    int n
    int m
    int* eu
    int* ev
    uint64_t* reach      # (m + 1) rows of n masks
    vector[uint64_t]* words
    vector[uint64_t]* flips
    Py_ssize_t cap
    bint overflow


cdef uint64_t ao_flipmask(AOState* st, uint64_t word, uint64_t* reach) nogil:
    cdef uint64_t out[64]
    cdef int i, u, v, w
    cdef uint64_t fm = 0, others
    for i in range(st.n):
        out[i] = 0
    for i in range(st.m):
        u = st.eu[i]
        v = st.ev[i]
        if (word >> i) & 1:
            u, v = v, u
        out[u] |= (<uint64_t>1) << v
    for i in range(st.m):
        u = st.eu[i]
        v = st.ev[i]
        if (word >> i) & 1:
            u, v = v, u
        others = out[u] & ~((<uint64_t>1) << v)
        while others:
            w = lowbit(others)
            others &= others - 1
            if (reach[w] >> v) & 1:
                break
        else:
            fm |= (<uint64_t>1) << i
    return fm


cdef void ao_rec(AOState* st, int i, uint64_t word) nogil:
    cdef uint64_t* reach = st.reach + i * st.n
    cdef uint64_t* nr = st.reach + (i + 1) * st.n
    cdef int bit, a, b, x
    cdef uint64_t gain
    if st.overflow:
        return
    if i == st.m:
        if <Py_ssize_t> st.words.size() >= st.cap:
            st.overflow = True
            return
        st.words.push_back(word)
        st.flips.push_back(ao_flipmask(st, word, reach))
        return
    for bit in range(2):
        if bit == 0:
            a = st.eu[i]
            b = st.ev[i]
        else:
            a = st.ev[i]
            b = st.eu[i]
        if (reach[b] >> a) & 1:
            continue
        gain = ((<uint64_t>1) << b) | reach[b]
        for x in range(st.n):
            nr[x] = reach[x]
            if x == a or ((reach[x] >> a) & 1):
                nr[x] |= gain
        ao_rec(st, i + 1, word | ((<uint64_t>bit) << i))


def acyclic_orientations(int n, edges, Py_ssize_t cap):
    """Same contract as ``_pykernels.acyclic_orientations``."""
    cdef AOState st
    cdef vector[uint64_t] words
    cdef vector[uint64_t] flips
    cdef int i
    st.n = n
    st.m = len(edges)
    st.eu = <int*> malloc((st.m + 1) * sizeof(int))
    st.ev = <int*> malloc((st.m + 1) * sizeof(int))
    st.reach = <uint64_t*> malloc((st.m + 1) * (n + 1) * sizeof(uint64_t))
    if st.eu == NULL or st.ev == NULL or st.reach == NULL:
        free(st.eu)
        free(st.ev)
        free(st.reach)
        raise MemoryError()
    try:
        for i, (u, v) in enumerate(edges):
            st.eu[i] = u
            st.ev[i] = v
        for i in range(n):
            st.reach[i] = 0
        st.words = &words
        st.flips = &flips
        st.cap = cap
        st.overflow = False
        with nogil:
            ao_rec(&st, 0, 0)
    finally:
        free(st.eu)
        free(st.ev)
        free(st.reach)
    if st.overflow:
        raise TooManyOrientations(f"more than {cap} acyclic orientations")
    return [w for w in words], [f for f in flips]


cdef struct TOState:
    int n
    uint64_t adj[64]
    uint64_t partners[64]
    uint64_t before[64]
    uint64_t plain[64]
    uint64_t ends
    uint64_t full
    uint64_t* front      # (n + 1) rows of n masks, one row per depth
    int order[64]
    unordered_set[string]* failed


cdef bint to_rec(TOState* st, int depth, uint64_t placed) nogil:
    cdef uint64_t* front = st.front + depth * st.n
    cdef uint64_t* nf = st.front + (depth + 1) * st.n
    cdef uint64_t open_, m, bit, key[65]
    cdef int u, v, nk = 1
    cdef bint ok
    cdef string skey
    if placed == st.full:
        return True
    open_ = st.full & ~placed
    key[0] = placed
    m = placed & st.ends
    while m:
        u = lowbit(m)
        m &= m - 1
        if st.partners[u] & open_:
            key[nk] = (front[u] | st.plain[u]) & open_
            nk += 1
    skey = string(<char*> key, nk * sizeof(uint64_t))
    if st.failed.count(skey):
        return False
    m = open_
    while m:
        v = lowbit(m)
        m &= m - 1
        if st.before[v] & ~placed:
            continue
        bit = (<uint64_t>1) << v
        ok = True
        u = 0
        while u < st.n:
            if ((st.partners[v] & placed) >> u) & 1 and not (front[u] & bit):
                ok = False
                break
            u += 1
        if not ok:
            continue
        for u in range(st.n):
            nf[u] = front[u]
            if (placed >> u) & 1:
                if (st.adj[u] | front[u]) & bit:
                    nf[u] |= st.adj[v]
                nf[u] &= ~bit
        st.order[depth] = v
        if to_rec(st, depth + 1, placed | bit):
            return True
    st.failed.insert(skey)
    return False


def transitive_order_search(int n, adj, partners, before):
    """Same contract as ``_pykernels.transitive_order_search``."""
    cdef TOState st
    cdef unordered_set[string] failed
    cdef int v
    cdef bint found
    st.n = n
    st.ends = 0
    st.full = ((<uint64_t>1) << n) - 1 if n < 64 else ~(<uint64_t>0)
    for v in range(n):
        st.adj[v] = adj[v]
        st.partners[v] = partners[v]
        st.before[v] = before[v]
        st.plain[v] = st.adj[v] & ~st.partners[v]
        if st.partners[v]:
            st.ends |= (<uint64_t>1) << v
    st.front = <uint64_t*> malloc((n + 1) * (n + 1) * sizeof(uint64_t))
    if st.front == NULL:
        raise MemoryError()
    try:
        for v in range(n):
            st.front[v] = 0
        st.failed = &failed
        with nogil:
            found = to_rec(&st, 0, 0)
    finally:
        free(st.front)
    return [st.order[v] for v in range(n)] if found else None
