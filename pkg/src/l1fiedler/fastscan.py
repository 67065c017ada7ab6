"""Compiled enumeration kernels (numba) shared by the cut solvers and the
exhaustive verification harness.

Graphs enter as an int64 array of adjacency bitsets (``adj[v]`` has bit u set
iff u~v).  Every value that feeds an exact comparison is kept in integer
numerator/denominator form; callers reduce to ``Fraction`` at the boundary.
All minimizations break ties toward the smallest witness bitmask so serial
runs are fully deterministic.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# ---------------------------------------------------------------------------
# bit helpers


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _bit_index(b):
    v = 0
    while b > 1:
        b >>= 1
        v += 1
    return v


@njit(cache=True)
def _mask_connected(adj, mask):
    """Is the subgraph induced by ``mask`` connected (mask nonempty)?"""
    comp = mask & (-mask)
    frontier = comp
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & (-f)
            nxt |= adj[_bit_index(b)]
            f ^= b
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp == mask


@njit(cache=True)
def _boundary(adj, mask, full):
    c = 0
    f = mask
    while f:
        b = f & (-f)
        c += _popcount(adj[_bit_index(b)] & full & ~mask)
        f ^= b
    return c


# ---------------------------------------------------------------------------
# cut minimizers (Gray-code subset walks with incremental cut size)


@njit(cache=True)
def b_restricted_core(adj, n, seed_cut, seed_ss, seed_mask):
    """min rho over S with vertex 0 fixed in S^c and both sides connected.

    Returns (cut, ss, mask, scanned) where rho = cut / ss and
    ss = |S| * (n - |S|).  ``seed_*`` may supply a valid incumbent cut
    (pass seed_cut < 0 for none); it only changes the evaluation order.
    A partial subset is skipped without the connectivity test whenever its
    density can no longer beat the incumbent.
    """
    full = (1 << n) - 1
    best_c = seed_cut
    best_ss = seed_ss
    best_mask = seed_mask
    S = 0
    s = 0
    c = 0
    scanned = 0
    top = 1 << (n - 1)
    for i in range(1, top):
        j = 0
        while ((i >> j) & 1) == 0:
            j += 1
        v = j + 1
        bit = 1 << v
        if S & bit:
            S ^= bit
            c -= _popcount(adj[v] & full & ~S) - _popcount(adj[v] & S)
            s -= 1
        else:
            c += _popcount(adj[v] & full & ~S) - _popcount(adj[v] & S)
            S |= bit
            s += 1
        scanned += 1
        ss = s * (n - s)
        if best_c >= 0:
            lhs = c * best_ss
            rhs = best_c * ss
            if lhs > rhs or (lhs == rhs and S >= best_mask):
                continue
        if c == 1:
            ok = True  # one crossing edge in a connected graph: both sides connected
        else:
            ok = _mask_connected(adj, S) and _mask_connected(adj, full & ~S)
        if ok:
            best_c = c
            best_ss = ss
            best_mask = S
    return best_c, best_ss, best_mask, scanned


@njit(cache=True)
def min_rho_core(adj, n):
    """min rho over ALL nonempty proper S (vertex 0 fixed in S^c)."""
    full = (1 << n) - 1
    best_c = -1
    best_ss = 1
    best_mask = 0
    S = 0
    s = 0
    c = 0
    scanned = 0
    top = 1 << (n - 1)
    for i in range(1, top):
        j = 0
        while ((i >> j) & 1) == 0:
            j += 1
        v = j + 1
        bit = 1 << v
        if S & bit:
            S ^= bit
            c -= _popcount(adj[v] & full & ~S) - _popcount(adj[v] & S)
            s -= 1
        else:
            c += _popcount(adj[v] & full & ~S) - _popcount(adj[v] & S)
            S |= bit
            s += 1
        scanned += 1
        ss = s * (n - s)
        if best_c < 0 or c * best_ss < best_c * ss or (c * best_ss == best_c * ss and S < best_mask):
            best_c = c
            best_ss = ss
            best_mask = S
    return best_c, best_ss, best_mask, scanned


@njit(cache=True)
def subset_stats_core(adj, n):
    """One pass over all nonempty proper subsets.

    Returns (iso_c, iso_s, iso_mask, xi_c, xi_s, xi_mask, h_c, h_v, h_mask,
    mincut): the isoperimetric minimum of cut/|S| over |S| <= n//2, the
    unrestricted minimum of cut/|S|, the conductance minimum of
    cut/min(vol S, vol S^c) and the global minimum cut size.
    """
    full = (1 << n) - 1
    deg = np.empty(n, np.int64)
    tot = 0
    for v in range(n):
        deg[v] = _popcount(adj[v])
        tot += deg[v]
    iso_c = -1
    iso_s = 1
    iso_mask = 0
    xi_c = -1
    xi_s = 1
    xi_mask = 0
    h_c = -1
    h_v = 1
    h_mask = 0
    mincut = -1
    half = n // 2
    S = 0
    s = 0
    c = 0
    vol = 0
    top = 1 << n
    for i in range(1, top):
        j = 0
        while ((i >> j) & 1) == 0:
            j += 1
        v = j
        bit = 1 << v
        if S & bit:
            S ^= bit
            c -= _popcount(adj[v] & full & ~S) - _popcount(adj[v] & S)
            s -= 1
            vol -= deg[v]
        else:
            c += _popcount(adj[v] & full & ~S) - _popcount(adj[v] & S)
            S |= bit
            s += 1
            vol += deg[v]
        if s == 0 or s == n:
            continue
        if mincut < 0 or c < mincut:
            mincut = c
        if s <= half:
            if iso_c < 0 or c * iso_s < iso_c * s or (c * iso_s == iso_c * s and S < iso_mask):
                iso_c = c
                iso_s = s
                iso_mask = S
        if xi_c < 0 or c * xi_s < xi_c * s or (c * xi_s == xi_c * s and S < xi_mask):
            xi_c = c
            xi_s = s
            xi_mask = S
        mv = vol if vol <= tot - vol else tot - vol
        if mv > 0:
            if h_c < 0 or c * h_v < h_c * mv or (c * h_v == h_c * mv and S < h_mask):
                h_c = c
                h_v = mv
                h_mask = S
    return iso_c, iso_s, iso_mask, xi_c, xi_s, xi_mask, h_c, h_v, h_mask, mincut


# ---------------------------------------------------------------------------
# exhaustive sweep over all labeled graphs of a given order

N_GRAPH_CHECKS = 16
# indices into the violation-count array of graph_sweep:
CHK_ORACLE = 0            # restricted minimum != unrestricted minimum
CHK_LAP_IDENTITY = 1      # Laplacian row sums against the two-valued cut vector
CHK_XI_LOWER = 2          # min xi <= b
CHK_DMIN_UPPER = 3        # b <= n*dmin/(2(n-1))
CHK_EDGE_AVG = 4          # b <= m/(n-1)
CHK_EDGE_AVG_EQ = 5       # equality above on a non-complete graph
CHK_PATH_MIN = 6          # b >= b(P_n)
CHK_COMP_SUM_LOWER = 7    # b + b(complement) > 1/2
CHK_COMP_SUM_UPPER = 8    # b + b(complement) <= n/2
CHK_COMP_SUM_EQ = 9       # equality above on a non-complete graph
CHK_EDGE_CONN = 10        # b <= n*lambda/(2(n-1))
CHK_PENDANT = 11          # single-pendant product bound, any attachment point
CHK_ISO_UPPER = 12        # b <= iso
CHK_REG_HALF_ISO = 13     # regular graphs: b >= iso/2
CHK_BALANCED_ISO = 14     # balanced sparsest cut forces iso == b
CHK_SINGLETON_ISO = 15    # singleton iso set induces a sparsest cut


@njit(cache=True)
def graph_sweep(n, pn_num, pn_den, eq61_cap):
    """Scan every labeled graph on n vertices; run all integer-exact checks
    on the connected ones.

    Returns (viols, connected_count, eq61_masks, eq61_count,
    edge-average equality count, complement-sum equality count,
    mask_arr, bnum_arr, bden_arr, m_arr, dmax_arr, reg_arr, rec_count).
    The trailing arrays carry per-graph data for the float spectral checks
    done outside this kernel.
    """
    npairs = n * (n - 1) // 2
    us = np.empty(npairs, np.int64)
    vs = np.empty(npairs, np.int64)
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            us[k] = u
            vs[k] = v
            k += 1
    total = 1 << npairs
    full = (1 << n) - 1
    viols = np.zeros(N_GRAPH_CHECKS, np.int64)
    eq61 = np.empty(eq61_cap, np.int64)
    eq61_count = 0
    eq_edge_avg = 0
    eq_comp_sum = 0
    connected_count = 0
    cap = total
    mask_arr = np.empty(cap, np.int64)
    bnum_arr = np.empty(cap, np.int32)
    bden_arr = np.empty(cap, np.int32)
    m_arr = np.empty(cap, np.int32)
    dmax_arr = np.empty(cap, np.int32)
    reg_arr = np.empty(cap, np.int8)
    rec = 0
    adj = np.empty(n, np.int64)
    cadj = np.empty(n, np.int64)
    adj2 = np.empty(n + 1, np.int64)
    deg = np.empty(n, np.int64)
    for em in range(total):
        for v in range(n):
            adj[v] = 0
        t = em
        while t:
            b = t & (-t)
            i = _bit_index(b)
            adj[us[i]] |= 1 << vs[i]
            adj[vs[i]] |= 1 << us[i]
            t ^= b
        if not _mask_connected(adj, full):
            continue
        connected_count += 1
        m = 0
        dmin = n
        dmax = 0
        for v in range(n):
            deg[v] = _popcount(adj[v])
            m += deg[v]
            if deg[v] < dmin:
                dmin = deg[v]
            if deg[v] > dmax:
                dmax = deg[v]
        m //= 2
        complete = m == npairs

        bc, bss, bw, _ = b_restricted_core(adj, n, -1, 1, 0)
        oc, oss, ow, _ = min_rho_core(adj, n)
        if bc * oss != oc * bss:
            viols[CHK_ORACLE] += 1
        iso_c, iso_s, _, xi_c, xi_s, _, _, _, _, mincut = subset_stats_core(adj, n)

        # Laplacian identity against the witness cut (all integers, scaled
        # by 2|S||S^c|): row sums must be +/- n*|N_other(u)| vertexwise.
        s_w = _popcount(bw)
        cut_w = _boundary(adj, bw, full)
        if cut_w * bss != bc * s_w * (n - s_w):
            viols[CHK_LAP_IDENTITY] += 1
        else:
            sum_in = 0
            sum_out = 0
            ok = True
            for u in range(n):
                in_s = (bw >> u) & 1
                xd_u = (n - s_w) if in_s else -s_w
                row = deg[u] * xd_u
                f = adj[u]
                while f:
                    b = f & (-f)
                    w = _bit_index(b)
                    row -= (n - s_w) if ((bw >> w) & 1) else -s_w
                    f ^= b
                if in_s:
                    if row != n * _popcount(adj[u] & full & ~bw):
                        ok = False
                    sum_in += row
                else:
                    if row != -n * _popcount(adj[u] & bw):
                        ok = False
                    sum_out += row
            if not ok or sum_in != n * cut_w or sum_out != -n * cut_w:
                viols[CHK_LAP_IDENTITY] += 1

        # b = n*bc/(2*bss) throughout; comparisons are cross-multiplied.
        if xi_c * 2 * bss > xi_s * n * bc:
            viols[CHK_XI_LOWER] += 1
        if bc * (n - 1) > dmin * bss:
            viols[CHK_DMIN_UPPER] += 1
        lhs_avg = n * bc * (n - 1)
        rhs_avg = 2 * m * bss
        if lhs_avg > rhs_avg:
            viols[CHK_EDGE_AVG] += 1
        elif lhs_avg == rhs_avg:
            eq_edge_avg += 1
            if not complete:
                viols[CHK_EDGE_AVG_EQ] += 1
        if n * bc * pn_den < 2 * bss * pn_num:
            viols[CHK_PATH_MIN] += 1

        # complement sum
        for v in range(n):
            cadj[v] = full & ~adj[v] & ~(1 << v)
        if _mask_connected(cadj, full):
            cc, css, _, _ = b_restricted_core(cadj, n, -1, 1, 0)
        else:
            cc, css = 0, 1
        # sum = n/2 * (bc/bss + cc/css); compare with 1/2 and n/2
        sum_num = n * (bc * css + cc * bss)
        sum_den = 2 * bss * css
        if sum_num * 2 <= sum_den:
            viols[CHK_COMP_SUM_LOWER] += 1
        if sum_num * 2 > sum_den * n:
            viols[CHK_COMP_SUM_UPPER] += 1
        elif sum_num * 2 == sum_den * n:
            eq_comp_sum += 1
            if not complete:
                viols[CHK_COMP_SUM_EQ] += 1

        lhs_ec = bc * (n - 1)
        rhs_ec = mincut * bss
        if lhs_ec > rhs_ec:
            viols[CHK_EDGE_CONN] += 1
        elif lhs_ec == rhs_ec:
            if eq61_count < eq61_cap:
                eq61[eq61_count] = em
            eq61_count += 1

        # single pendant at every host: b' <= b * (n^2-1)/n^2
        for host in range(n):
            for v in range(n):
                adj2[v] = adj[v]
            adj2[host] |= 1 << n
            adj2[n] = 1 << host
            pc, pss, _, _ = b_restricted_core(adj2, n + 1, -1, 1, 0)
            if (n + 1) * pc * bss * n * n > n * bc * (n * n - 1) * pss:
                viols[CHK_PENDANT] += 1

        if n * bc * iso_s > 2 * bss * iso_c:
            viols[CHK_ISO_UPPER] += 1
        if dmin == dmax:
            if n * bc * iso_s < bss * iso_c:
                viols[CHK_REG_HALF_ISO] += 1

        if n % 2 == 0:
            # does some balanced subset attain the (unrestricted) minimum?
            balanced = False
            half = n // 2
            hs2 = half * half
            for S in range(2, 1 << n, 2):  # vertex 0 in S^c; complement is balanced too
                if _popcount(S) != half:
                    continue
                if _boundary(adj, S, full) * oss == oc * hs2:
                    balanced = True
                    break
            if balanced:
                if iso_c * 2 * bss != iso_s * n * bc:
                    viols[CHK_BALANCED_ISO] += 1

        for v in range(n):
            if deg[v] * iso_s == iso_c:  # xi({v}) attains iso
                if deg[v] * oss != oc * (n - 1):  # rho({v}) must attain min rho
                    viols[CHK_SINGLETON_ISO] += 1

        mask_arr[rec] = em
        bnum_arr[rec] = n * bc
        bden_arr[rec] = 2 * bss
        m_arr[rec] = m
        dmax_arr[rec] = dmax
        reg_arr[rec] = 1 if dmin == dmax else 0
        rec += 1
    return (viols, connected_count, eq61[:eq61_count if eq61_count < eq61_cap else eq61_cap],
            eq61_count, eq_edge_avg, eq_comp_sum,
            mask_arr[:rec], bnum_arr[:rec], bden_arr[:rec], m_arr[:rec],
            dmax_arr[:rec], reg_arr[:rec], rec)


# ---------------------------------------------------------------------------
# exhaustive sweeps over labeled trees (Prüfer codes)


@njit(cache=True)
def _decode_prufer_code(code, n, seq, deg, adj):
    """Fill adj (bitsets) with the tree for Prüfer integer code in [0, n^(n-2))."""
    for v in range(n):
        adj[v] = 0
        deg[v] = 1
    for i in range(n - 2):
        seq[i] = code % n
        code //= n
    for i in range(n - 2):
        deg[seq[i]] += 1
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for i in range(n - 2):
        s = seq[i]
        adj[leaf] |= 1 << s
        adj[s] |= 1 << leaf
        deg[s] -= 1
        if deg[s] == 1 and s < ptr:
            leaf = s
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    adj[leaf] |= 1 << (n - 1)
    adj[n - 1] |= 1 << leaf


@njit(cache=True)
def _tree_dfs(adj, n, parent, size, tin, tout, stack, rem):
    """Iterative DFS from vertex 0: parents, subtree sizes, entry/exit times."""
    for v in range(n):
        size[v] = 1
    parent[0] = -1
    rem[0] = adj[0]
    tin[0] = 0
    t = 1
    sp = 0
    stack[0] = 0
    while sp >= 0:
        v = stack[sp]
        if rem[v]:
            b = rem[v] & (-rem[v])
            rem[v] ^= b
            u = _bit_index(b)
            if u != parent[v]:
                parent[u] = v
                rem[u] = adj[u] & ~(1 << v)
                tin[u] = t
                t += 1
                size[u] = 1
                sp += 1
                stack[sp] = u
        else:
            tout[v] = t
            if parent[v] >= 0:
                size[parent[v]] += size[v]
            sp -= 1


N_TREE_CHECKS = 6
TCHK_FORMULA = 0     # centre-edge closed form != restricted enumeration
TCHK_NONCENTRE = 1   # a non-centre edge matched the maximal split product
TCHK_SUBSTAR = 2     # centre edges with no common vertex
TCHK_STARROOT = 3    # star-root vertex with a strictly larger neighbor side
TCHK_DOMINATION = 4  # centre-edge side not strictly larger (edge off the substar)
TCHK_STAR_IFF = 5    # imbalance n-2 without being a star (or vice versa)


@njit(cache=True)
def tree_sweep(n, start, stop):
    """Check every labeled tree with Prüfer code in [start, stop).

    Compares the centre-edge closed form against the pruned bipartition
    enumeration and verifies the centre-edge structure lemmas.
    Returns (violation-count array, star_count, min_split_product,
    max_split_product) where star_count is the number of scanned trees whose
    maximal split product is n-1 (i.e. attaining the maximum of b).
    """
    viols = np.zeros(N_TREE_CHECKS, np.int64)
    nstar = 0
    glo = n * n
    ghi = 0
    adj = np.empty(n, np.int64)
    deg = np.empty(n, np.int64)
    seq = np.empty(max(n - 2, 1), np.int64)
    parent = np.empty(n, np.int64)
    size = np.empty(n, np.int64)
    tin = np.empty(n, np.int64)
    tout = np.empty(n, np.int64)
    stack = np.empty(n, np.int64)
    rem = np.empty(n, np.int64)
    centre = np.empty(n, np.int64)
    for code in range(start, stop):
        _decode_prufer_code(code, n, seq, deg, adj)
        _tree_dfs(adj, n, parent, size, tin, tout, stack, rem)
        min_imb = n
        maxprod = 0
        for c in range(n):
            if c == 0:
                continue
            imb = n - 2 * size[c]
            if imb < 0:
                imb = -imb
            if imb < min_imb:
                min_imb = imb
        ncentre = 0
        for c in range(n):
            if c == 0:
                continue
            imb = n - 2 * size[c]
            if imb < 0:
                imb = -imb
            prod = size[c] * (n - size[c])
            if imb == min_imb:
                centre[ncentre] = c
                ncentre += 1
                if prod > maxprod:
                    maxprod = prod
            else:
                if prod >= (n * n - min_imb * min_imb) // 4:
                    viols[TCHK_NONCENTRE] += 1
        if maxprod == n - 1:
            nstar += 1
        if maxprod < glo:
            glo = maxprod
        if maxprod > ghi:
            ghi = maxprod

        # enumeration seeded with a leaf-singleton cut (valid for any tree)
        seed_v = -1
        for v in range(1, n):
            if _popcount(adj[v]) == 1:
                seed_v = v
                break
        ec, ess, _, _ = b_restricted_core(adj, n, 1, n - 1, 1 << seed_v)
        if ec * maxprod != ess:
            viols[TCHK_FORMULA] += 1

        # substar: all centre edges share one vertex
        common = (1 << centre[0]) | (1 << parent[centre[0]])
        for i in range(1, ncentre):
            common &= (1 << centre[i]) | (1 << parent[centre[i]])
        if common == 0:
            viols[TCHK_SUBSTAR] += 1
            continue

        # star roots
        if ncentre >= 2:
            roots = common
        else:
            c0 = centre[0]
            p0 = parent[c0]
            if 2 * size[c0] > n:
                roots = 1 << c0
            elif 2 * size[c0] < n:
                roots = 1 << p0
            else:
                roots = (1 << c0) | (1 << p0)
        f = roots
        while f:
            b = f & (-f)
            u = _bit_index(b)
            f ^= b
            nb = adj[u]
            while nb:
                nbb = nb & (-nb)
                v = _bit_index(nbb)
                nb ^= nbb
                if parent[v] == u:
                    side_u = n - size[v]
                    side_v = size[v]
                else:  # u is the child of v
                    side_u = size[u]
                    side_v = n - size[u]
                if side_u < side_v:
                    viols[TCHK_STARROOT] += 1

        # for every edge: the side holding a centre edge is strictly larger
        for c in range(1, n):
            for i in range(ncentre):
                cp = centre[i]
                if cp == c:
                    continue  # the edge itself separates its own endpoints
                p = parent[cp]
                inside = tin[c] <= tin[p] < tout[c]
                if inside:
                    if size[c] <= n - size[c]:
                        viols[TCHK_DOMINATION] += 1
                else:
                    if n - size[c] <= size[c]:
                        viols[TCHK_DOMINATION] += 1

        dmax = 0
        for v in range(n):
            d = _popcount(adj[v])
            if d > dmax:
                dmax = d
        if (min_imb == n - 2) != (dmax == n - 1):
            viols[TCHK_STAR_IFF] += 1
    return viols, nstar, glo, ghi


@njit(cache=True)
def _bfs_far(adj, n, src):
    """(eccentricity, a farthest vertex) from src."""
    seen = 1 << src
    frontier = seen
    d = 0
    last = frontier
    while True:
        nxt = 0
        f = frontier
        while f:
            b = f & (-f)
            nxt |= adj[_bit_index(b)]
            f ^= b
        nxt &= ~seen
        if nxt == 0:
            return d, _bit_index(last & (-last))
        seen |= nxt
        frontier = nxt
        last = nxt
        d += 1


@njit(cache=True)
def tree_class_sweep(n):
    """Aggregate split-product extremes of all labeled trees on n vertices,
    per diameter, per maximum degree and per pendant count.

    b(T) = n / (2 * prod) where prod is the maximal split product, so the
    per-class extremes of b follow from the extremes of prod.  Also counts
    trees attaining the global minimum product n-1 (the stars).
    Returns (count, prod_lo_by_diam, prod_hi_by_diam, prod_lo_by_dmax,
    prod_hi_by_dmax, prod_lo_by_pend, prod_hi_by_pend, global_lo, global_hi,
    min_prod_tree_count).
    """
    adj = np.empty(n, np.int64)
    deg = np.empty(n, np.int64)
    seq = np.empty(max(n - 2, 1), np.int64)
    parent = np.empty(n, np.int64)
    size = np.empty(n, np.int64)
    tin = np.empty(n, np.int64)
    tout = np.empty(n, np.int64)
    stack = np.empty(n, np.int64)
    rem = np.empty(n, np.int64)
    big = n * n
    lo_d = np.full(n + 1, big, np.int64)
    hi_d = np.zeros(n + 1, np.int64)
    lo_dm = np.full(n + 1, big, np.int64)
    hi_dm = np.zeros(n + 1, np.int64)
    lo_p = np.full(n + 1, big, np.int64)
    hi_p = np.zeros(n + 1, np.int64)
    glo = big
    ghi = 0
    nstar = 0
    total = 1
    for _ in range(n - 2):
        total *= n
    for code in range(total):
        _decode_prufer_code(code, n, seq, deg, adj)
        _tree_dfs(adj, n, parent, size, tin, tout, stack, rem)
        maxprod = 0
        for c in range(1, n):
            prod = size[c] * (n - size[c])
            if prod > maxprod:
                maxprod = prod
        _, far = _bfs_far(adj, n, 0)
        diam, _ = _bfs_far(adj, n, far)
        dmax = 0
        pend = 0
        for v in range(n):
            d = _popcount(adj[v])
            if d > dmax:
                dmax = d
            if d == 1:
                pend += 1
        if maxprod < lo_d[diam]:
            lo_d[diam] = maxprod
        if maxprod > hi_d[diam]:
            hi_d[diam] = maxprod
        if maxprod < lo_dm[dmax]:
            lo_dm[dmax] = maxprod
        if maxprod > hi_dm[dmax]:
            hi_dm[dmax] = maxprod
        if maxprod < lo_p[pend]:
            lo_p[pend] = maxprod
        if maxprod > hi_p[pend]:
            hi_p[pend] = maxprod
        if maxprod < glo:
            glo = maxprod
        if maxprod > ghi:
            ghi = maxprod
        if maxprod == n - 1:
            nstar += 1
    return total, lo_d, hi_d, lo_dm, hi_dm, lo_p, hi_p, glo, ghi, nstar


@njit(cache=True)
def tree_pendant_growth_sweep(n):
    """For every labeled tree on n vertices and every attachment point:
    the smaller centre-edge side never shrinks when a pendant is added.
    Returns the violation count."""
    adj = np.empty(n + 1, np.int64)
    deg = np.empty(n, np.int64)
    seq = np.empty(max(n - 2, 1), np.int64)
    parent = np.empty(n + 1, np.int64)
    size = np.empty(n + 1, np.int64)
    tin = np.empty(n + 1, np.int64)
    tout = np.empty(n + 1, np.int64)
    stack = np.empty(n + 1, np.int64)
    rem = np.empty(n + 1, np.int64)
    saved_rows = np.empty(n, np.int64)
    viols = 0
    total = 1
    for _ in range(n - 2):
        total *= n
    for code in range(total):
        _decode_prufer_code(code, n, seq, deg, adj[:n])
        _tree_dfs(adj[:n], n, parent[:n], size[:n], tin[:n], tout[:n],
                  stack[:n], rem[:n])
        min_imb = n
        for c in range(1, n):
            imb = n - 2 * size[c]
            if imb < 0:
                imb = -imb
            if imb < min_imb:
                min_imb = imb
        small_side = (n - min_imb) // 2
        for v in range(n):
            saved_rows[v] = adj[v]
        for host in range(n):
            for v in range(n):
                adj[v] = saved_rows[v]
            adj[host] |= 1 << n
            adj[n] = 1 << host
            _tree_dfs(adj, n + 1, parent, size, tin, tout, stack, rem)
            min_imb2 = n + 1
            for c in range(1, n + 1):
                imb = n + 1 - 2 * size[c]
                if imb < 0:
                    imb = -imb
                if imb < min_imb2:
                    min_imb2 = imb
            if (n + 1 - min_imb2) // 2 < small_side:
                viols += 1
        for v in range(n):
            adj[v] = saved_rows[v]
    return viols


# ---------------------------------------------------------------------------
# growth certificates for the edge-connectivity equality characterization


@njit(cache=True)
def _singleton_sparsest(adj, n, v, subset_deg):
    """With v's incident edges reduced to ``subset_deg`` of them (already
    applied to adj): does {v} attain the unrestricted minimum of rho?"""
    c, ss, _, _ = min_rho_core(adj, n)
    return subset_deg * ss == c * (n - 1)


@njit(cache=True)
def growth_cert_exists(adj, n, lam):
    """Does some vertex v of degree lam admit an ordering of its incident
    edges along which {v} stays a sparsest subset at every step?  Feasibility
    of a prefix depends only on the edge *set*, so a subset DP over the
    incident edges decides it."""
    work = np.empty(n, np.int64)
    inc = np.empty(n, np.int64)
    feas = np.empty(1 << n, np.uint8)
    for v in range(n):
        if _popcount(adj[v]) != lam:
            continue
        ninc = 0
        f = adj[v]
        while f:
            b = f & (-f)
            inc[ninc] = _bit_index(b)
            ninc += 1
            f ^= b
        top = 1 << ninc
        feas[0] = 1
        for s in range(1, top):
            feas[s] = 0
            ok = False
            for e in range(ninc):
                if (s >> e) & 1 and feas[s & ~(1 << e)]:
                    ok = True
                    break
            if not ok:
                continue
            for u in range(n):
                work[u] = adj[u] & ~(1 << v)
            work[v] = 0
            d = 0
            for e in range(ninc):
                if (s >> e) & 1:
                    u = inc[e]
                    work[v] |= 1 << u
                    work[u] |= 1 << v
                    d += 1
            if _singleton_sparsest(work, n, v, d):
                feas[s] = 1
        if feas[top - 1]:
            return True
    return False


@njit(cache=True)
def cert_sweep(edgemasks, n):
    """For each graph (given as an upper-triangle edge mask), require a
    growth certificate; every listed graph is expected to attain the
    edge-connectivity upper bound.  Returns the number failing."""
    npairs = n * (n - 1) // 2
    us = np.empty(npairs, np.int64)
    vs = np.empty(npairs, np.int64)
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            us[k] = u
            vs[k] = v
            k += 1
    adj = np.empty(n, np.int64)
    missing = 0
    for idx in range(len(edgemasks)):
        em = edgemasks[idx]
        for v in range(n):
            adj[v] = 0
        t = em
        while t:
            b = t & (-t)
            i = _bit_index(b)
            adj[us[i]] |= 1 << vs[i]
            adj[vs[i]] |= 1 << us[i]
            t ^= b
        lam = n  # minimum cut over all subsets
        full = (1 << n) - 1
        for S in range(1, 1 << (n - 1)):
            c = _boundary(adj, S << 1, full)
            if c < lam:
                lam = c
        if not growth_cert_exists(adj, n, lam):
            missing += 1
    return missing


# ---------------------------------------------------------------------------
# grid oracle for the max-edge-difference minimization


@njit(cache=True)
def gamma_grid_min(n, steps, loff, lflat, cap):
    """Exhaustive grid minimum of the maximum edge difference.

    Coordinates run over multiples of 1/steps in [-1, 1] (stored as integers
    in [-steps, steps]); the last coordinate is forced by the zero-sum
    constraint and assignments without a coordinate of modulus 1 are
    rejected.  ``loff``/``lflat`` list, per vertex, its neighbors of smaller
    index.  Depth-first with pruning on the running objective; returns the
    minimum in units of 1/steps, or ``cap`` when no grid point beats it
    (pass cap = 2*steps + 1 for an unconditional minimum).
    """
    x = np.empty(n, np.int64)
    psum = np.zeros(n, np.int64)
    pobj = np.zeros(n, np.int64)
    pabs = np.zeros(n, np.int64)
    best = cap
    k = 0
    x[0] = -steps - 1
    while k >= 0:
        x[k] += 1
        if x[k] > steps:
            k -= 1
            continue
        o = pobj[k]
        for t in range(loff[k], loff[k + 1]):
            d = x[k] - x[lflat[t]]
            if d < 0:
                d = -d
            if d > o:
                o = d
        if o >= best:
            continue
        s = psum[k] + x[k]
        a = pabs[k]
        xa = x[k] if x[k] >= 0 else -x[k]
        if xa > a:
            a = xa
        if k == n - 2:
            xl = -s
            if xl > steps or xl < -steps:
                continue
            xla = xl if xl >= 0 else -xl
            if (a if a > xla else xla) != steps:
                continue
            x[n - 1] = xl
            oo = o
            for t in range(loff[n - 1], loff[n]):
                d = xl - x[lflat[t]]
                if d < 0:
                    d = -d
                if d > oo:
                    oo = d
            if oo < best:
                best = oo
            continue
        lim = (n - 1 - k) * steps
        if s > lim or -s > lim:
            continue
        k += 1
        x[k] = -steps - 1
        psum[k] = s
        pobj[k] = o
        pabs[k] = a
    return best
