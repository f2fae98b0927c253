# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: the hot twin of ``_pure``.

Same function names, same argument order, same semantics; inputs and outputs
are int64 ndarrays where the pure versions take or return lists.  All work
buffers are O(q)-sized numpy allocations (plus the inputs themselves), so
the space accounting of the pure versions carries over.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64
ctypedef cnp.int32_t i32
ctypedef cnp.uint8_t u8

BACKEND = "c"


cdef inline Py_ssize_t pmod(i64 x, i64 m):
    # C % keeps the dividend's sign; slots must be non-negative
    cdef i64 r = x % m
    if r < 0:
        r += m
    return <Py_ssize_t>r


def find_max(i64[::1] a):
    cdef Py_ssize_t i
    cdef i64 best = a[0]
    for i in range(1, a.shape[0]):
        if a[i] > best:
            best = a[i]
    return best


def contract(i64[::1] a, i64[::1] qi, i64[::1] qj, mu_in):
    cdef i64 mu = mu_in
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t q = qi.shape[0]
    cdef Py_ssize_t two_q = 2 * q
    cdef Py_ssize_t cap = n if n < 4 * q + 1 else 4 * q + 1

    z0_arr = np.zeros(two_q, dtype=np.int64)
    z1h_arr = np.full(two_q, -1, dtype=np.int64)
    z1n_arr = np.full(two_q, -1, dtype=np.int64)
    aq_arr = np.empty(cap, dtype=np.int64)
    f_arr = np.empty(cap, dtype=np.int64)
    ri_arr = np.zeros(q, dtype=np.int64)
    rj_arr = np.zeros(q, dtype=np.int64)
    mpos_arr = np.empty(two_q, dtype=np.int64)
    cdef i64[::1] z0 = z0_arr
    cdef i64[::1] z1h = z1h_arr
    cdef i64[::1] z1n = z1n_arr
    cdef i64[::1] aq = aq_arr
    cdef i64[::1] f = f_arr
    cdef i64[::1] ri = ri_arr
    cdef i64[::1] rj = rj_arr
    cdef i64[::1] mpos = mpos_arr

    cdef Py_ssize_t t, side, pos, slot, e
    cdef Py_ssize_t cnt = 0, nmarks = 0, run_pos = -1
    cdef i64 v, run_min = 0

    for t in range(q):
        for side in range(2):
            pos = <Py_ssize_t>(qi[t] if side == 0 else qj[t])
            v = a[pos]
            if v <= mu:  # not marked yet
                nmarks += 1
                slot = pmod(mu + nmarks, two_q)
                z0[slot] = v
                a[pos] = mu + nmarks
                mpos[nmarks - 1] = pos
            else:
                slot = pmod(v, two_q)
            e = 2 * t + side
            z1n[e] = z1h[slot]
            z1h[slot] = e

    for pos in range(n):
        v = a[pos]
        if v > mu:  # marked: emit saved value, remap its queries
            if run_pos >= 0:
                aq[cnt] = run_min
                f[cnt] = run_pos
                cnt += 1
                run_pos = -1
            slot = pmod(v, two_q)
            aq[cnt] = z0[slot]
            f[cnt] = pos
            e = <Py_ssize_t>z1h[slot]
            while e != -1:
                if e & 1:
                    rj[e >> 1] = cnt
                else:
                    ri[e >> 1] = cnt
                e = <Py_ssize_t>z1n[e]
            cnt += 1
        elif run_pos < 0 or v < run_min:
            run_min = v
            run_pos = pos
    if run_pos >= 0:
        aq[cnt] = run_min
        f[cnt] = run_pos
        cnt += 1

    mval_arr = np.empty(nmarks, dtype=np.int64)
    cdef i64[::1] mval = mval_arr
    cdef Py_ssize_t k
    for k in range(1, nmarks + 1):
        mval[k - 1] = z0[pmod(mu + k, two_q)]
    return (aq_arr[:cnt].copy(), f_arr[:cnt].copy(), ri_arr, rj_arr,
            mpos_arr[:nmarks].copy(), mval_arr)


def restore(i64[::1] a, i64[::1] f, i64[::1] aq):
    cdef Py_ssize_t p
    for p in range(f.shape[0]):
        a[<Py_ssize_t>f[p]] = aq[p]


def bf_batch(i64[::1] a, i64[::1] qi, i64[::1] qj, i64[::1] out):
    cdef Py_ssize_t t, p, i, j, bp
    cdef i64 best, v
    for t in range(qi.shape[0]):
        i = <Py_ssize_t>qi[t]
        j = <Py_ssize_t>qj[t]
        best = a[i]
        bp = i
        for p in range(i + 1, j + 1):
            v = a[p]
            if v < best:
                best = v
                bp = p
        out[t] = bp


# --- power-of-two window tables ------------------------------------------

def st_build(i64[::1] a):
    cdef Py_ssize_t n = a.shape[0]
    levels = [np.arange(n, dtype=np.int32)]
    cdef Py_ssize_t k = 1, half, width, m, x, y
    cdef i32[::1] prev, cur
    while ((<Py_ssize_t>1) << k) <= n:
        half = (<Py_ssize_t>1) << (k - 1)
        width = n - ((<Py_ssize_t>1) << k) + 1
        prev = levels[len(levels) - 1]
        cur_arr = np.empty(width, dtype=np.int32)
        cur = cur_arr
        for m in range(width):
            x = <Py_ssize_t>prev[m]
            y = <Py_ssize_t>prev[m + half]
            cur[m] = <i32>(x if a[x] <= a[y] else y)
        levels.append(cur_arr)
        k += 1
    return levels


cdef inline Py_ssize_t _st_query_one(i64[::1] a, list levels,
                                     Py_ssize_t i, Py_ssize_t j):
    if i == j:
        return i
    cdef Py_ssize_t span = j - i, k = 0
    while (span >> (k + 1)) != 0:
        k += 1
    cdef i32[::1] lev = levels[k]
    cdef Py_ssize_t x = <Py_ssize_t>lev[i]
    cdef Py_ssize_t y = <Py_ssize_t>lev[j - ((<Py_ssize_t>1) << k) + 1]
    return x if a[x] <= a[y] else y


def st_query(i64[::1] a, list levels, i, j):
    return _st_query_one(a, levels, i, j)


def st_query_batch(i64[::1] a, list levels, i64[::1] qi, i64[::1] qj,
                   i64[::1] out):
    cdef Py_ssize_t t
    for t in range(qi.shape[0]):
        out[t] = _st_query_one(a, levels, <Py_ssize_t>qi[t], <Py_ssize_t>qj[t])


def doubling_batch(i64[::1] values, i64[::1] qi, i64[::1] qj, i64[::1] out):
    cdef Py_ssize_t q = qi.shape[0], nq = values.shape[0]
    cdef Py_ssize_t t, i, j, span, k, m, o, step, tmax = -1
    karr_arr = np.empty(q, dtype=np.int64)
    cdef i64[::1] karr = karr_arr
    for t in range(q):
        i = <Py_ssize_t>qi[t]
        j = <Py_ssize_t>qj[t]
        if i == j:
            out[t] = i
            karr[t] = -1
        else:
            span = j - i
            k = 0
            while (span >> (k + 1)) != 0:
                k += 1
            karr[t] = k
            if k > tmax:
                tmax = k
    if tmax < 0:
        return
    dval_arr = np.empty(nq, dtype=np.int64)
    dpos_arr = np.empty(nq, dtype=np.int64)
    cdef i64[::1] dval = dval_arr, dpos = dpos_arr
    for m in range(nq):
        dval[m] = values[m]
        dpos[m] = m
    for k in range(tmax + 1):
        for t in range(q):
            if karr[t] != k:
                continue
            i = <Py_ssize_t>qi[t]
            m = <Py_ssize_t>qj[t] - ((<Py_ssize_t>1) << k) + 1
            if dval[m] < dval[i] or (dval[m] == dval[i] and dpos[m] < dpos[i]):
                out[t] = dpos[m]
            else:
                out[t] = dpos[i]
        step = (<Py_ssize_t>1) << k
        for m in range(nq - step):
            o = m + step
            if dval[o] < dval[m]:  # tie keeps the leftmost position
                dval[m] = dval[o]
                dpos[m] = dpos[o]


# --- fixed-size block decomposition ---------------------------------------

cdef inline Py_ssize_t tri_idx(Py_ssize_t b, Py_ssize_t i, Py_ssize_t j):
    return i * b - i * (i - 1) // 2 + (j - i)


cdef void _fill_table(i64[::1] a, Py_ssize_t start, Py_ssize_t n,
                      Py_ssize_t b, u8[:, ::1] rows, Py_ssize_t r):
    cdef Py_ssize_t i, j, bp, idx = 0
    cdef i64 bv = 0
    cdef bint have
    for i in range(b):
        bp = i
        have = start + i < n
        if have:
            bv = a[start + i]
        for j in range(i, b):
            if j > i and start + j < n:
                if not have or a[start + j] < bv:
                    bv = a[start + j]
                    bp = j
                    have = True
            rows[r, idx] = <u8>bp
            idx += 1


def block_build(i64[::1] a, b_in):
    cdef Py_ssize_t b = b_in
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t nb = (n + b - 1) // b
    cdef Py_ssize_t tab_w = b * (b + 1) // 2
    bminv_arr = np.empty(nb, dtype=np.int64)
    bminp_arr = np.empty(nb, dtype=np.int64)
    ridx_arr = np.empty(nb, dtype=np.int64)
    cdef i64[::1] bminv = bminv_arr, bminp = bminp_arr, ridx = ridx_arr
    sigrow_arr = np.full((<Py_ssize_t>1) << (2 * b), -1, dtype=np.int64)
    cdef i64[::1] sigrow = sigrow_arr
    cdef Py_ssize_t rows_cap = 64
    rows_arr = np.empty((rows_cap, tab_w), dtype=np.uint8)
    cdef u8[:, ::1] rows = rows_arr
    cdef Py_ssize_t nrows = 0
    stack_arr = np.empty(b, dtype=np.int64)
    cdef i64[::1] stack = stack_arr
    cdef Py_ssize_t g, start, end, sp, bit, pos, r, mp
    cdef i64 sig, v, mv
    for g in range(nb):
        start = g * b
        end = start + b
        if end > n:
            end = n
        sig = 0
        bit = 0
        sp = 0
        mv = a[start]
        mp = start
        for pos in range(start, end):
            v = a[pos]
            while sp > 0 and stack[sp - 1] > v:
                sp -= 1
                bit += 1
            sig |= (<i64>1) << bit
            bit += 1
            stack[sp] = v
            sp += 1
            if v < mv:
                mv = v
                mp = pos
        for pos in range(end - start, b):
            sig |= (<i64>1) << bit  # +inf padding: pops nothing, pushes
            bit += 1
        bminv[g] = mv
        bminp[g] = mp
        r = <Py_ssize_t>sigrow[<Py_ssize_t>sig]
        if r == -1:
            if nrows == rows_cap:
                rows_cap *= 2
                new_rows = np.empty((rows_cap, tab_w), dtype=np.uint8)
                new_rows[:nrows] = rows_arr[:nrows]
                rows_arr = new_rows
                rows = rows_arr
            r = nrows
            _fill_table(a, start, n, b, rows, r)
            nrows += 1
            sigrow[<Py_ssize_t>sig] = r
        ridx[g] = r
    return ridx_arr, rows_arr[:nrows].copy(), bminv_arr, bminp_arr


cdef inline Py_ssize_t _on_query_one(i64[::1] a, Py_ssize_t b, i64[::1] ridx,
                                     u8[:, ::1] rows, i64[::1] bminv,
                                     i64[::1] bminp, list levels,
                                     Py_ssize_t i, Py_ssize_t j):
    cdef Py_ssize_t gi = i // b, gj = j // b
    cdef Py_ssize_t r, bp, m, p
    cdef i64 bv
    if gi == gj:
        r = <Py_ssize_t>ridx[gi]
        return gi * b + <Py_ssize_t>rows[r, tri_idx(b, i - gi * b, j - gi * b)]
    r = <Py_ssize_t>ridx[gi]
    bp = gi * b + <Py_ssize_t>rows[r, tri_idx(b, i - gi * b, b - 1)]
    bv = a[bp]
    if gi + 1 <= gj - 1:  # whole blocks strictly between
        m = _st_query_one(bminv, levels, gi + 1, gj - 1)
        if bminv[m] < bv:
            bv = bminv[m]
            bp = <Py_ssize_t>bminp[m]
    r = <Py_ssize_t>ridx[gj]
    p = gj * b + <Py_ssize_t>rows[r, tri_idx(b, 0, j - gj * b)]
    if a[p] < bv:
        bp = p
    return bp


def on_query(i64[::1] a, b, i64[::1] row_idx, u8[:, ::1] rows,
             i64[::1] bminv, i64[::1] bminp, list levels, i, j):
    return _on_query_one(a, b, row_idx, rows, bminv, bminp, levels, i, j)


def on_query_batch(i64[::1] a, b_in, i64[::1] row_idx, u8[:, ::1] rows,
                   i64[::1] bminv, i64[::1] bminp, list levels,
                   i64[::1] qi, i64[::1] qj, i64[::1] out):
    cdef Py_ssize_t b = b_in
    cdef Py_ssize_t t
    for t in range(qi.shape[0]):
        out[t] = _on_query_one(a, b, row_idx, rows, bminv, bminp, levels,
                               <Py_ssize_t>qi[t], <Py_ssize_t>qj[t])


# --- trees -----------------------------------------------------------------

def cartesian_build(i64[::1] a):
    cdef Py_ssize_t n = a.shape[0]
    parent_arr = np.full(n, -1, dtype=np.int64)
    left_arr = np.full(n, -1, dtype=np.int64)
    right_arr = np.full(n, -1, dtype=np.int64)
    stack_arr = np.empty(n, dtype=np.int64)
    cdef i64[::1] parent = parent_arr, left = left_arr, right = right_arr
    cdef i64[::1] stack = stack_arr
    cdef Py_ssize_t i, sp = 0, last
    cdef i64 v
    for i in range(n):
        v = a[i]
        last = -1
        while sp > 0 and a[<Py_ssize_t>stack[sp - 1]] > v:
            sp -= 1
            last = <Py_ssize_t>stack[sp]
        left[i] = last
        if last != -1:
            parent[last] = i
        if sp > 0:
            parent[i] = stack[sp - 1]
            right[<Py_ssize_t>stack[sp - 1]] = i
        stack[sp] = i
        sp += 1
    return parent_arr, left_arr, right_arr, <Py_ssize_t>stack[0]


def binary_to_fcns(i64[::1] parent, i64[::1] left, i64[::1] right):
    cdef Py_ssize_t n = parent.shape[0]
    fc_arr = np.full(n, -1, dtype=np.int64)
    ns_arr = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] fc = fc_arr, ns = ns_arr
    cdef Py_ssize_t v, l, r
    for v in range(n):
        l = <Py_ssize_t>left[v]
        r = <Py_ssize_t>right[v]
        if l != -1:
            fc[v] = l
            if r != -1:
                ns[l] = r
        elif r != -1:
            fc[v] = r
    return fc_arr, ns_arr


cdef inline Py_ssize_t _find(i64[::1] par, Py_ssize_t x):
    cdef Py_ssize_t root = x, nxt
    while par[root] != root:
        root = <Py_ssize_t>par[root]
    while par[x] != root:  # path compression
        nxt = <Py_ssize_t>par[x]
        par[x] = root
        x = nxt
    return root


def offline_lca(n_in, root_in, i64[::1] fc, i64[::1] ns,
                i64[::1] qi, i64[::1] qj, i64[::1] out):
    cdef Py_ssize_t n = n_in, root = root_in
    cdef Py_ssize_t q = qi.shape[0]
    qh_arr = np.full(n, -1, dtype=np.int64)
    qn_arr = np.empty(2 * q, dtype=np.int64)
    qo_arr = np.empty(2 * q, dtype=np.int64)
    par_arr = np.arange(n, dtype=np.int64)
    rnk_arr = np.zeros(n, dtype=np.int64)
    anc_arr = np.zeros(n, dtype=np.int64)
    black_arr = np.zeros(n, dtype=np.uint8)
    stack_arr = np.empty(n, dtype=np.int64)
    cursor_arr = np.empty(n, dtype=np.int64)
    cdef i64[::1] qh = qh_arr, qn = qn_arr, qo = qo_arr
    cdef i64[::1] par = par_arr, rnk = rnk_arr, anc = anc_arr
    cdef u8[::1] black = black_arr
    cdef i64[::1] stack = stack_arr, cursor = cursor_arr

    cdef Py_ssize_t t, u, w, e, sp, c, p, ru, rp, r
    for t in range(q):
        u = <Py_ssize_t>qi[t]
        w = <Py_ssize_t>qj[t]
        e = 2 * t
        qn[e] = qh[u]
        qo[e] = w
        qh[u] = e
        e += 1
        qn[e] = qh[w]
        qo[e] = u
        qh[w] = e

    stack[0] = root
    cursor[0] = -2  # not entered yet
    sp = 1
    while sp > 0:
        u = <Py_ssize_t>stack[sp - 1]
        c = <Py_ssize_t>cursor[sp - 1]
        if c == -2:
            anc[u] = u
            cursor[sp - 1] = fc[u]
        elif c != -1:
            stack[sp] = c
            cursor[sp] = -2
            sp += 1
        else:
            sp -= 1
            black[u] = 1
            e = <Py_ssize_t>qh[u]
            while e != -1:
                w = <Py_ssize_t>qo[e]
                if black[w]:
                    out[e >> 1] = anc[_find(par, w)]
                e = <Py_ssize_t>qn[e]
            if sp > 0:
                p = <Py_ssize_t>stack[sp - 1]
                cursor[sp - 1] = ns[u]
                ru = _find(par, u)
                rp = _find(par, p)
                if rnk[ru] < rnk[rp]:
                    par[ru] = rp
                    r = rp
                else:
                    par[rp] = ru
                    r = ru
                    if rnk[ru] == rnk[rp]:
                        rnk[ru] += 1
                anc[r] = p


def lca_mark(i64[::1] lab, i64[::1] qi, i64[::1] qj, n_in):
    cdef Py_ssize_t n = n_in
    cdef Py_ssize_t q = qi.shape[0]
    cdef Py_ssize_t two_q = 2 * q
    z0_arr = np.zeros(two_q, dtype=np.int64)
    z1h_arr = np.full(two_q, -1, dtype=np.int64)
    z1n_arr = np.full(two_q, -1, dtype=np.int64)
    marked_arr = np.empty(two_q, dtype=np.int64)
    cdef i64[::1] z0 = z0_arr, z1h = z1h_arr, z1n = z1n_arr
    cdef i64[::1] marked = marked_arr
    cdef Py_ssize_t t, side, u, slot, e, nmarks = 0
    cdef i64 v
    for t in range(q):
        for side in range(2):
            u = <Py_ssize_t>(qi[t] if side == 0 else qj[t])
            v = lab[u]
            if v < n:  # not marked yet; labels start out as the identity
                nmarks += 1
                slot = pmod(n - 1 + nmarks, two_q)
                z0[slot] = v
                lab[u] = n - 1 + nmarks
                marked[nmarks - 1] = u
            else:
                slot = pmod(v, two_q)
            e = 2 * t + side
            z1n[e] = z1h[slot]
            z1h[slot] = e
    return z0_arr, z1h_arr, z1n_arr, nmarks, marked_arr[:nmarks].copy()


def euler_contract(n_in, root_in, i64[::1] fc, i64[::1] ns, i64[::1] parent,
                   i64[::1] lab, i64[::1] z0, i64[::1] z1h, i64[::1] z1n,
                   q_in, i64[::1] ri, i64[::1] rj):
    cdef Py_ssize_t n = n_in, root = root_in, q = q_in
    cdef Py_ssize_t two_q = 2 * q
    cdef Py_ssize_t cap = 4 * q + 1
    if 2 * n - 1 < cap:
        cap = 2 * n - 1
    eq_arr = np.empty(cap, dtype=np.int64)
    lq_arr = np.empty(cap, dtype=np.int64)
    cdef i64[::1] eq = eq_arr, lq = lq_arr
    # run_lev == SENT means "no open run"; a return visit loads the label
    # only when it improves the run minimum
    cdef Py_ssize_t SENT = 9223372036854775807
    cdef Py_ssize_t cnt = 0, u = root, depth = 0, run_lev = SENT
    cdef Py_ssize_t c, s, p, e, slot
    cdef bint done = False
    cdef i64 v, run_lab = 0, edges = 0

    while True:
        v = lab[u]  # entering u (first visit)
        if v >= n:  # marked
            if run_lev != SENT:
                eq[cnt] = run_lab
                lq[cnt] = run_lev
                cnt += 1
                run_lev = SENT
            slot = pmod(v, two_q)
            eq[cnt] = z0[slot]
            lq[cnt] = depth
            e = <Py_ssize_t>z1h[slot]
            while e != -1:
                if e & 1:
                    rj[e >> 1] = cnt
                else:
                    ri[e >> 1] = cnt
                e = <Py_ssize_t>z1n[e]
            cnt += 1
        elif depth < run_lev:
            run_lab = v
            run_lev = depth
        c = <Py_ssize_t>fc[u]
        if c != -1:
            edges += 1
            u = c
            depth += 1
            continue
        while True:  # u finished: climb, with return visits to each parent
            if u == root:
                done = True
                break
            edges += 1
            p = <Py_ssize_t>parent[u]
            s = <Py_ssize_t>ns[u]
            depth -= 1
            if depth < run_lev:
                v = lab[p]
                run_lab = z0[pmod(v, two_q)] if v >= n else v
                run_lev = depth
            if s != -1:
                edges += 1
                u = s
                depth += 1
                break
            u = p
        if done:
            break

    if run_lev != SENT:
        eq[cnt] = run_lab
        lq[cnt] = run_lev
        cnt += 1
    return eq_arr[:cnt].copy(), lq_arr[:cnt].copy(), edges


def unmark_labels(i64[::1] lab, i64[::1] marked):
    cdef Py_ssize_t k
    for k in range(marked.shape[0]):
        lab[<Py_ssize_t>marked[k]] = marked[k]


def preorder(n_in, root_in, i64[::1] fc, i64[::1] ns, i64[::1] parent):
    cdef Py_ssize_t n = n_in, root = root_in
    order_arr = np.empty(n, dtype=np.int64)
    cdef i64[::1] order = order_arr
    cdef Py_ssize_t idx = 0, u = root, child_done = -1, c, s
    cdef bint entering = True
    while True:
        if entering:
            order[idx] = u
            idx += 1
            c = <Py_ssize_t>fc[u]
            if c != -1:
                u = c
                continue
        else:
            s = <Py_ssize_t>ns[child_done]
            if s != -1:
                u = s
                entering = True
                continue
        if u == root:
            break
        child_done = u
        u = <Py_ssize_t>parent[u]
        entering = False
    return order_arr
