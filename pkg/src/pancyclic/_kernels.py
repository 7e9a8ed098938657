"""Numba kernels for the hot loops: subset path DPs, refinement, labelling.

Graphs enter as ``int64`` arrays of adjacency rows.  Everything here works on
raw arrays; the typed wrappers live in the public modules.
"""

import numpy as np
from numba import njit

MAX_AUTOS = 64


@njit(cache=True, inline="always")
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True, inline="always")
def lowbit_index(x):
    i = 0
    while not (x >> i) & 1:
        i += 1
    return i


# cycle / path spectra -------------------------------------------------------


@njit(cache=True)
def _min_rooted_dp(adj, n, dp):
    """``dp[S]`` := endpoints of paths that start at min(S) and visit exactly S.

    S spans a cycle iff |S| >= 3 and some endpoint is adjacent to min(S).
    """
    size = 1 << n
    for S in range(size):
        dp[S] = 0
    for v in range(n):
        dp[1 << v] = 1 << v
    for S in range(1, size):
        ends = dp[S]
        if ends == 0:
            continue
        lo = lowbit_index(S)
        above = ~((2 << lo) - 1)
        for e in range(lo, n):
            if (ends >> e) & 1:
                cand = adj[e] & ~S & above
                while cand:
                    low = cand & -cand
                    dp[S | low] |= low
                    cand ^= low


@njit(cache=True, inline="always")
def _spans_cycle(adj, dp, S):
    return dp[S] & adj[lowbit_index(S)] != 0 and popcount(S) >= 3


@njit(cache=True)
def _min_rooted_cycles(adj, n, dp, vl):
    """Fill ``vl[v]`` with the cycle-length bitmask of every vertex."""
    _min_rooted_dp(adj, n, dp)
    for v in range(n):
        vl[v] = 0
    for S in range(7, 1 << n):
        if dp[S] and _spans_cycle(adj, dp, S):
            bit = 1 << popcount(S)
            T = S
            while T:
                low = T & -T
                vl[lowbit_index(low)] |= bit
                T ^= low


@njit(cache=True)
def longest_cycle_sets_batch(rows, n, circ, small_deg):
    """For each graph, count the vertex sets of longest cycles, and how many
    of them leave no vertex of degree <= ``small_deg`` outside."""
    K = rows.shape[0]
    total = np.zeros(K, np.int64)
    bad = np.zeros(K, np.int64)
    dp = np.empty(1 << n, np.int64)
    full = (1 << n) - 1
    for g in range(K):
        adj = rows[g]
        c = circ[g]
        if c < 3:
            continue
        small = 0
        for v in range(n):
            if popcount(adj[v]) <= small_deg:
                small |= 1 << v
        _min_rooted_dp(adj, n, dp)
        for S in range(7, 1 << n):
            if dp[S] and popcount(S) == c and _spans_cycle(adj, dp, S):
                total[g] += 1
                if small & (full & ~S) == 0:
                    bad[g] += 1
    return total, bad


@njit(cache=True)
def vertex_lengths(adj, n):
    dp = np.empty(1 << n, np.int64)
    vl = np.empty(n, np.int64)
    _min_rooted_cycles(adj, n, dp, vl)
    return vl


@njit(cache=True)
def vertex_lengths_batch(rows, n):
    """Per-vertex cycle-length masks for a (K, n) stack of graphs."""
    K = rows.shape[0]
    out = np.empty((K, n), np.int64)
    dp = np.empty(1 << n, np.int64)
    vl = np.empty(n, np.int64)
    for g in range(K):
        _min_rooted_cycles(rows[g], n, dp, vl)
        for v in range(n):
            out[g, v] = vl[v]
    return out


@njit(cache=True)
def _rooted_paths(adj, n, u, dp, pl):
    """``pl[w]`` gets bit L iff some (u, w)-path has exactly L edges."""
    size = 1 << n
    for S in range(size):
        dp[S] = 0
    for w in range(n):
        pl[w] = 0
    dp[1 << u] = 1 << u
    ubit = 1 << u
    for S in range(ubit, size):
        if not S & ubit:
            continue
        ends = dp[S]
        if ends == 0:
            continue
        bit = 1 << (popcount(S) - 1)
        for e in range(n):
            if (ends >> e) & 1:
                pl[e] |= bit
                cand = adj[e] & ~S
                while cand:
                    low = cand & -cand
                    dp[S | low] |= low
                    cand ^= low


@njit(cache=True)
def path_lengths_from(adj, n, u):
    dp = np.empty(1 << n, np.int64)
    pl = np.empty(n, np.int64)
    _rooted_paths(adj, n, u, dp, pl)
    return pl


@njit(cache=True)
def rooted_vertex_lengths(adj, n, u):
    """Cycle lengths through ``u`` from paths rooted at ``u`` only."""
    pl = path_lengths_from(adj, n, u)
    out = 0
    for w in range(n):
        if (adj[u] >> w) & 1:
            # a (u, w)-path with L >= 2 edges closes into an (L+1)-cycle
            out |= (pl[w] >> 2) << 3
    return out


@njit(cache=True)
def pancyclic_edge_stats_batch(rows, n, vmasks, target):
    """Per graph: pancyclic edges, and pancyclic edges with a non-pancyclic end.

    Every edge is examined, so the second count is a genuine check that
    both ends of a pancyclic edge are pancyclic vertices.
    """
    K = rows.shape[0]
    edges = np.zeros(K, np.int64)
    bad = np.zeros(K, np.int64)
    dp = np.empty(1 << n, np.int64)
    pl = np.empty(n, np.int64)
    for g in range(K):
        adj = rows[g]
        for u in range(n):
            later = adj[u] & ~((2 << u) - 1)
            if later == 0:
                continue
            _rooted_paths(adj, n, u, dp, pl)
            while later:
                low = later & -later
                w = lowbit_index(low)
                later ^= low
                if ((pl[w] >> 2) << 3) & target == target:
                    edges[g] += 1
                    if vmasks[g, u] & target != target or vmasks[g, w] & target != target:
                        bad[g] += 1
    return edges, bad


@njit(cache=True)
def bipartite_path_failures_batch(rows, n, part1):
    """Vertex pairs missing a required path length in a balanced bipartite graph.

    Opposite-side pairs need every odd length 3..n-1; same-side pairs need
    every even length 2..n-2 (n = 2k).
    """
    K = rows.shape[0]
    fails = np.zeros(K, np.int64)
    dp = np.empty(1 << n, np.int64)
    pl = np.empty(n, np.int64)
    odd = 0
    for L in range(3, n, 2):
        odd |= 1 << L
    even = 0
    for L in range(2, n - 1, 2):
        even |= 1 << L
    for g in range(K):
        adj = rows[g]
        for u in range(n):
            _rooted_paths(adj, n, u, dp, pl)
            for w in range(u + 1, n):
                same = ((part1[g] >> u) & 1) == ((part1[g] >> w) & 1)
                need = even if same else odd
                if pl[w] & need != need:
                    fails[g] += 1
    return fails


@njit(cache=True)
def bipartite_batch(rows, n):
    K = rows.shape[0]
    out = np.empty(K, np.bool_)
    color = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    for g in range(K):
        adj = rows[g]
        for v in range(n):
            color[v] = -1
        ok = True
        for r in range(n):
            if color[r] >= 0 or not ok:
                continue
            color[r] = 0
            head = 0
            tail = 1
            queue[0] = r
            while head < tail and ok:
                x = queue[head]
                head += 1
                nb = adj[x]
                while nb:
                    low = nb & -nb
                    w = lowbit_index(low)
                    nb ^= low
                    if color[w] < 0:
                        color[w] = 1 - color[x]
                        queue[tail] = w
                        tail += 1
                    elif color[w] == color[x]:
                        ok = False
                        break
        out[g] = ok
    return out


@njit(cache=True)
def connected_batch(rows, n):
    K = rows.shape[0]
    out = np.empty(K, np.bool_)
    full = (1 << n) - 1
    for g in range(K):
        if n == 0:
            out[g] = True
            continue
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= rows[g, lowbit_index(low)]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        out[g] = seen == full
    return out


# canonical labelling --------------------------------------------------------


@njit(cache=True)
def _refine(adj, n, cells, k, counts, buckets):
    """Refine the ordered partition ``cells[:k]`` to an equitable one.

    Cells are vertex bitmasks.  A cell is split by neighbour counts into a
    splitter cell, pieces ordered by ascending count.  Returns the new k.
    """
    c = 0
    while c < k:
        sm = cells[c]
        split_any = False
        x = 0
        while x < k:
            X = cells[x]
            if X & (X - 1) == 0:
                x += 1
                continue
            lo_c = n + 1
            hi_c = -1
            T = X
            while T:
                low = T & -T
                v = lowbit_index(low)
                T ^= low
                cnt = popcount(adj[v] & sm)
                counts[v] = cnt
                if cnt < lo_c:
                    lo_c = cnt
                if cnt > hi_c:
                    hi_c = cnt
            if lo_c == hi_c:
                x += 1
                continue
            for b in range(lo_c, hi_c + 1):
                buckets[b] = 0
            T = X
            while T:
                low = T & -T
                buckets[counts[lowbit_index(low)]] |= low
                T ^= low
            nb = 0
            for b in range(lo_c, hi_c + 1):
                if buckets[b]:
                    nb += 1
            for i in range(k - 1, x, -1):
                cells[i + nb - 1] = cells[i]
            j = x
            for b in range(lo_c, hi_c + 1):
                if buckets[b]:
                    cells[j] = buckets[b]
                    j += 1
            k += nb - 1
            split_any = True
            x += nb
        if split_any:
            c = 0
        else:
            c += 1
    return k


@njit(cache=True)
def _cert_of(adj, n, lab, cert):
    """Upper triangle of the relabelled graph, column-major, as one word per column."""
    for j in range(n):
        col = 0
        rj = adj[lab[j]]
        for i in range(j):
            col = (col << 1) | ((rj >> lab[i]) & 1)
        cert[j] = col


@njit(cache=True)
def _cmp(a, b, n):
    for j in range(n):
        if a[j] < b[j]:
            return -1
        if a[j] > b[j]:
            return 1
    return 0


@njit(cache=True)
def _orbit(v, autos, na, path, depth, n):
    """Orbit of v under the stored automorphisms that fix path[:depth]."""
    orb = 1 << v
    changed = True
    while changed:
        changed = False
        for a in range(na):
            fixes = True
            for d in range(depth):
                if autos[a, path[d]] != path[d]:
                    fixes = False
                    break
            if not fixes:
                continue
            T = orb
            while T:
                low = T & -T
                img = 1 << autos[a, lowbit_index(low)]
                T ^= low
                if not orb & img:
                    orb |= img
                    changed = True
    return orb


@njit(cache=True)
def canon_label(adj, n):
    """Return ``lab`` (position -> vertex) of the canonical ordering.

    Individualisation-refinement search; the canonical ordering is the leaf
    with the lexicographically least column-major upper-triangle string.
    Sibling branches are pruned through vertex twins and automorphisms
    found at equal leaves.
    """
    best_lab = np.arange(n)
    if n <= 1:
        return best_lab
    best_cert = np.empty(n, np.int64)
    cert = np.empty(n, np.int64)
    lab = np.empty(n, np.int64)
    counts = np.empty(n, np.int64)
    buckets = np.empty(n + 1, np.int64)
    st_cells = np.zeros((n + 1, n), np.int64)
    st_k = np.zeros(n + 1, np.int64)
    st_t = np.zeros(n + 1, np.int64)
    st_rem = np.zeros(n + 1, np.int64)
    st_tried = np.zeros(n + 1, np.int64)
    path = np.zeros(n + 1, np.int64)
    autos = np.zeros((MAX_AUTOS, n), np.int64)
    na = 0
    have_best = False

    st_cells[0, 0] = (1 << n) - 1
    k = _refine(adj, n, st_cells[0], 1, counts, buckets)
    if k == n:
        for i in range(n):
            best_lab[i] = lowbit_index(st_cells[0, i])
        return best_lab
    st_k[0] = k
    for t in range(k):
        X = st_cells[0, t]
        if X & (X - 1):
            st_t[0] = t
            st_rem[0] = X
            break
    depth = 0
    while depth >= 0:
        rem = st_rem[depth]
        if rem == 0:
            depth -= 1
            continue
        v = lowbit_index(rem)
        st_rem[depth] = rem & ~(1 << v)
        tried = st_tried[depth]
        skip = False
        T = tried
        while T:
            low = T & -T
            u = lowbit_index(low)
            T ^= low
            if (adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u)):
                skip = True
                break
        if not skip and na > 0 and tried:
            if _orbit(v, autos, na, path, depth, n) & tried:
                skip = True
        if skip:
            continue
        st_tried[depth] = tried | (1 << v)

        child = st_cells[depth + 1]
        kk = st_k[depth]
        t = st_t[depth]
        for i in range(kk):
            child[i] = st_cells[depth, i]
        for i in range(kk - 1, t, -1):
            child[i + 1] = child[i]
        child[t] = 1 << v
        child[t + 1] = st_cells[depth, t] & ~(1 << v)
        k2 = _refine(adj, n, child, kk + 1, counts, buckets)
        if k2 == n:
            for i in range(n):
                lab[i] = lowbit_index(child[i])
            _cert_of(adj, n, lab, cert)
            if not have_best:
                c = -1
            else:
                c = _cmp(cert, best_cert, n)
            if c < 0:
                have_best = True
                for i in range(n):
                    best_cert[i] = cert[i]
                    best_lab[i] = lab[i]
            elif c == 0 and na < MAX_AUTOS:
                for i in range(n):
                    autos[na, lab[i]] = best_lab[i]
                na += 1
            continue
        path[depth] = v
        depth += 1
        st_k[depth] = k2
        st_tried[depth] = 0
        for t2 in range(k2):
            X = child[t2]
            if X & (X - 1):
                st_t[depth] = t2
                st_rem[depth] = X
                break
    return best_lab


@njit(cache=True)
def relabel_rows(adj, n, lab, out):
    inv = np.empty(n, np.int64)
    for i in range(n):
        inv[lab[i]] = i
    for i in range(n):
        r = adj[lab[i]]
        row = 0
        while r:
            low = r & -r
            row |= 1 << inv[lowbit_index(low)]
            r ^= low
        out[i] = row


@njit(cache=True)
def canonical_rows(adj, n):
    lab = canon_label(adj, n)
    out = np.empty(n, np.int64)
    relabel_rows(adj, n, lab, out)
    return out


@njit(cache=True)
def canonical_rows_batch(rows, n):
    K = rows.shape[0]
    out = np.empty((K, n), np.int64)
    for g in range(K):
        lab = canon_label(rows[g], n)
        relabel_rows(rows[g], n, lab, out[g])
    return out


# edge-deletion generation ---------------------------------------------------


@njit(cache=True, inline="always")
def _pair_key(adj, deg, n, x, y):
    a = deg[x]
    b = deg[y]
    if a > b:
        a, b = b, a
    return (a * (n + 1) + b) * (n + 1) + popcount(adj[x] & adj[y])


@njit(cache=True)
def expand(parents, n):
    """Children of each canonical parent under single-edge deletion.

    A child H = G - e is kept iff G is isomorphic to H's canonical parent
    H + e*, where e* is a non-edge of H chosen by an isomorphism-invariant
    rule, and H is not isomorphic to an earlier child of the same G.  The
    test is local to G, so disjoint sets of parents can be expanded
    independently.  Returns canonical child rows and the parent index of
    each child.
    """
    P = parents.shape[0]
    maxc = n * (n - 1) // 2
    out = np.empty((max(P * maxc, 1), n), np.int64)
    owner = np.empty(max(P * maxc, 1), np.int64)
    cnt = 0
    H = np.empty(n, np.int64)
    deg = np.empty(n, np.int64)
    cH = np.empty(n, np.int64)
    cE = np.empty(n, np.int64)
    degc = np.empty(n, np.int64)
    for p in range(P):
        G = parents[p]
        start = cnt
        for a in range(n):
            for b in range(a + 1, n):
                if not (G[a] >> b) & 1:
                    continue
                for i in range(n):
                    H[i] = G[i]
                    deg[i] = popcount(G[i])
                H[a] ^= 1 << b
                H[b] ^= 1 << a
                deg[a] -= 1
                deg[b] -= 1
                kab = _pair_key(H, deg, n, a, b)
                reject = False
                ties = 0
                for x in range(n):
                    if reject:
                        break
                    for y in range(x + 1, n):
                        if (H[x] >> y) & 1:
                            continue
                        kk = _pair_key(H, deg, n, x, y)
                        if kk > kab:
                            reject = True
                            break
                        if kk == kab:
                            ties += 1
                if reject:
                    continue
                lab = canon_label(H, n)
                relabel_rows(H, n, lab, cH)
                if ties > 1:
                    for i in range(n):
                        degc[i] = popcount(cH[i])
                    ex = -1
                    ey = -1
                    for y in range(1, n):
                        if ex >= 0:
                            break
                        for x in range(y):
                            if (cH[x] >> y) & 1:
                                continue
                            if _pair_key(cH, degc, n, x, y) == kab:
                                ex = x
                                ey = y
                                break
                    ia = -1
                    ib = -1
                    for i in range(n):
                        if lab[i] == a:
                            ia = i
                        if lab[i] == b:
                            ib = i
                    if ia > ib:
                        ia, ib = ib, ia
                    if not (ia == ex and ib == ey):
                        for i in range(n):
                            cE[i] = cH[i]
                        cE[ex] |= 1 << ey
                        cE[ey] |= 1 << ex
                        cE2 = canonical_rows(cE, n)
                        same = True
                        for i in range(n):
                            if cE2[i] != G[i]:
                                same = False
                                break
                        if not same:
                            continue
                dup = False
                for c in range(start, cnt):
                    same = True
                    for i in range(n):
                        if out[c, i] != cH[i]:
                            same = False
                            break
                    if same:
                        dup = True
                        break
                if dup:
                    continue
                for i in range(n):
                    out[cnt, i] = cH[i]
                owner[cnt] = p
                cnt += 1
    return out[:cnt].copy(), owner[:cnt].copy()
