"""Pure-Python kernels.

Reference implementations of every hot loop in the package.  They run on any
indexable sequence (lists, numpy arrays, instrumented wrappers), which makes
them both the import-time fallback when the compiled extension is missing and
the target for read/write counting in tests: every element access goes through
``__getitem__``/``__setitem__`` of the input.

``_ckern.pyx`` mirrors these signatures one to one; the two must stay
semantically identical.  Ties always break to the LEFTMOST (smallest index)
minimum, everywhere.
"""

BACKEND = "py"


def find_max(a):
    """Maximum entry of `a`, one left-to-right pass."""
    best = a[0]
    for i in range(1, len(a)):
        v = a[i]
        if v > best:
            best = v
    return best


def contract(a, qi, qj, mu):
    """Contract `a` around the 2q query endpoints, leaving `a` marked.

    Marks endpoint positions in place with the out-of-band values mu+1..mu+2q,
    then makes one more pass that emits every marked position plus one
    (leftmost-minimum, position) entry per maximal unmarked block.  Query
    endpoints are rewritten to contracted coordinates while the marked entries
    are emitted, by walking the per-mark endpoint lists.

    Returns (aq, f, ri, rj, mark_pos, mark_val) where aq[p] == original
    a[f[p]], f is strictly increasing, and (ri[t], rj[t]) is query t in
    contracted coordinates.  Restore `a` afterwards with :func:`restore`.
    """
    n = len(a)
    q = len(qi)
    two_q = 2 * q
    z0 = [0] * two_q           # original values of marked positions
    z1head = [-1] * two_q      # per mark: chain of endpoint ids e = 2t+side
    z1next = [-1] * two_q
    nmarks = 0
    mark_pos = []
    ri = [0] * q
    rj = [0] * q

    for t in range(q):
        for side in (0, 1):
            pos = qi[t] if side == 0 else qj[t]
            v = a[pos]
            if v <= mu:  # not marked yet
                nmarks += 1
                slot = (mu + nmarks) % two_q
                z0[slot] = v
                a[pos] = mu + nmarks
                mark_pos.append(pos)
            else:
                slot = v % two_q
            e = 2 * t + side
            z1next[e] = z1head[slot]
            z1head[slot] = e

    aq = []
    f = []
    run_pos = -1
    run_min = 0
    for pos in range(n):
        v = a[pos]
        if v > mu:  # marked position: emit saved value, remap its queries
            if run_pos >= 0:
                aq.append(run_min)
                f.append(run_pos)
                run_pos = -1
            slot = v % two_q
            p = len(aq)
            aq.append(z0[slot])
            f.append(pos)
            e = z1head[slot]
            while e != -1:
                if e & 1:
                    rj[e >> 1] = p
                else:
                    ri[e >> 1] = p
                e = z1next[e]
        elif run_pos < 0 or v < run_min:
            run_min = v
            run_pos = pos
    if run_pos >= 0:
        aq.append(run_min)
        f.append(run_pos)

    mark_val = [z0[(mu + k) % two_q] for k in range(1, nmarks + 1)]
    return aq, f, ri, rj, mark_pos, mark_val


def restore(a, f, aq):
    """Write the contracted entries back: a[f[p]] = aq[p] for every p."""
    for p in range(len(f)):
        a[f[p]] = aq[p]


def bf_batch(a, qi, qj, out):
    """Per-query linear scan; out[t] = leftmost argmin of a[qi[t]..qj[t]]."""
    for t in range(len(qi)):
        i = qi[t]
        best = a[i]
        bp = i
        for p in range(i + 1, qj[t] + 1):
            v = a[p]
            if v < best:
                best = v
                bp = p
        out[t] = bp


# --- power-of-two window tables ------------------------------------------

def st_build(a):
    """All-levels argmin table: levels[k][m] = leftmost argmin of a[m..m+2^k-1]."""
    n = len(a)
    levels = [list(range(n))]
    k = 1
    while (1 << k) <= n:
        half = 1 << (k - 1)
        prev = levels[-1]
        width = n - (1 << k) + 1
        cur = [0] * width
        for m in range(width):
            x = prev[m]
            y = prev[m + half]
            cur[m] = x if a[x] <= a[y] else y
        levels.append(cur)
        k += 1
    return levels


def st_query(a, levels, i, j):
    """Leftmost argmin of a[i..j] from a prebuilt level table."""
    if i == j:
        return i
    k = (j - i).bit_length() - 1
    lev = levels[k]
    x = lev[i]
    y = lev[j - (1 << k) + 1]
    return x if a[x] <= a[y] else y


def st_query_batch(a, levels, qi, qj, out):
    for t in range(len(qi)):
        out[t] = st_query(a, levels, qi[t], qj[t])


def doubling_batch(values, qi, qj, out):
    """Batched leftmost argmin over `values` using one doubling window array.

    Queries are bucketed by floor(log2(j-i)); bucket k is answered from the
    level-k window array D (D[m] = (min, leftmost argmin) of
    values[m..min(m+2^k, n)-1]), which is then doubled in place.  i == j
    queries are answered on the spot.  O(len(values)) extra space total.
    """
    q = len(qi)
    nq = len(values)
    buckets = {}
    tmax = -1
    for t in range(q):
        i = qi[t]
        j = qj[t]
        if i == j:
            out[t] = i
        else:
            k = (j - i).bit_length() - 1
            buckets.setdefault(k, []).append(t)
            if k > tmax:
                tmax = k
    if tmax < 0:
        return
    dval = [values[m] for m in range(nq)]
    dpos = list(range(nq))
    for k in range(tmax + 1):
        for t in buckets.get(k, ()):
            i = qi[t]
            m = qj[t] - (1 << k) + 1
            if dval[m] < dval[i] or (dval[m] == dval[i] and dpos[m] < dpos[i]):
                out[t] = dpos[m]
            else:
                out[t] = dpos[i]
        step = 1 << k
        for m in range(nq - step):
            o = m + step
            if dval[o] < dval[m]:  # tie keeps the leftmost position
                dval[m] = dval[o]
                dpos[m] = dpos[o]


# --- fixed-size block decomposition ---------------------------------------

def block_build(a, b):
    """Per-block ballot signatures and minima.

    The signature is the push/pop bit sequence (push=1, pop=0) of the
    left-to-right stack simulation that builds the block's treap shape; a
    trailing partial block is padded as if extended with +inf (pure pushes).
    Blocks with equal signatures have identical argmin offsets for every
    in-block range.

    Returns (row_idx, rows, bmin_val, bmin_pos): rows[row_idx[g]] is block
    g's in-block answer table (offset of the leftmost argmin for every
    i <= j pair, triangular layout), built once per distinct signature.
    """
    n = len(a)
    nb = (n + b - 1) // b
    bmin_val = [0] * nb
    bmin_pos = [0] * nb
    row_idx = [0] * nb
    rows = []
    row_of_sig = {}
    stack = [0] * b
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
            sig |= 1 << bit
            bit += 1
            stack[sp] = v
            sp += 1
            if v < mv:
                mv = v
                mp = pos
        for _ in range(end - start, b):
            sig |= 1 << bit  # +inf padding: pops nothing, pushes
            bit += 1
        bmin_val[g] = mv
        bmin_pos[g] = mp
        r = row_of_sig.get(sig)
        if r is None:
            r = len(rows)
            rows.append(block_table(a, start, n, b))
            row_of_sig[sig] = r
        row_idx[g] = r
    return row_idx, rows, bmin_val, bmin_pos


def block_table(a, start, n, b):
    """In-block leftmost-argmin offsets for all i <= j pairs of one block.

    Offsets at or past the array end act as +inf (only reachable in the
    final partial block) and are never selected.
    """
    tab = []
    for i in range(b):
        bp = i
        bv = a[start + i] if start + i < n else None
        for j in range(i, b):
            if j > i and start + j < n:
                v = a[start + j]
                if bv is None or v < bv:
                    bv = v
                    bp = j
            tab.append(bp)
    return tab


def tri(b, i, j):
    """Row-major index of the (i, j) pair, i <= j, in a length-b triangle."""
    return i * b - i * (i - 1) // 2 + (j - i)


def on_query(a, b, row_idx, rows, bminv, bminp, levels, i, j):
    """Block-decomposition query: in-block suffix + whole blocks + prefix."""
    gi = i // b
    gj = j // b
    if gi == gj:
        row = rows[row_idx[gi]]
        return gi * b + row[tri(b, i - gi * b, j - gi * b)]
    row = rows[row_idx[gi]]
    bp = gi * b + row[tri(b, i - gi * b, b - 1)]
    bv = a[bp]
    if gi + 1 <= gj - 1:  # whole blocks strictly between
        m = st_query(bminv, levels, gi + 1, gj - 1)
        if bminv[m] < bv:
            bv = bminv[m]
            bp = bminp[m]
    row = rows[row_idx[gj]]
    p = gj * b + row[tri(b, 0, j - gj * b)]
    if a[p] < bv:
        bp = p
    return bp


def on_query_batch(a, b, row_idx, rows, bminv, bminp, levels, qi, qj, out):
    for t in range(len(qi)):
        out[t] = on_query(a, b, row_idx, rows, bminv, bminp, levels,
                          qi[t], qj[t])


# --- trees -----------------------------------------------------------------

def cartesian_build(a):
    """Stack-based treap-shape construction; returns (parent, left, right, root).

    Pops on strictly greater values, so equal entries chain to the right and
    the root of every subrange is its leftmost minimum.
    """
    n = len(a)
    parent = [-1] * n
    left = [-1] * n
    right = [-1] * n
    stack = []
    for i in range(n):
        v = a[i]
        last = -1
        while stack and a[stack[-1]] > v:
            last = stack.pop()
        left[i] = last
        if last != -1:
            parent[last] = i
        if stack:
            parent[i] = stack[-1]
            right[stack[-1]] = i
        stack.append(i)
    return parent, left, right, stack[0]


def binary_to_fcns(parent, left, right):
    """First-child/next-sibling arrays for a binary tree (left before right)."""
    n = len(parent)
    fc = [-1] * n
    ns = [-1] * n
    for v in range(n):
        l = left[v]
        r = right[v]
        if l != -1:
            fc[v] = l
            if r != -1:
                ns[l] = r
        elif r != -1:
            fc[v] = r
    return fc, ns


def offline_lca(n, root, fc, ns, qi, qj, out):
    """Single-pass union-find answering of all (qi[t], qj[t]) ancestor queries.

    Iterative depth-first traversal; each finished subtree is merged into its
    parent's set, whose representative remembers the parent.  A query is
    answered when its second endpoint finishes.  O(n + q) space.
    """
    q = len(qi)
    qhead = [-1] * n
    qnext = [0] * (2 * q)
    qother = [0] * (2 * q)
    for t in range(q):
        u = qi[t]
        w = qj[t]
        e = 2 * t
        qnext[e] = qhead[u]
        qother[e] = w
        qhead[u] = e
        e += 1
        qnext[e] = qhead[w]
        qother[e] = u
        qhead[w] = e

    par = list(range(n))
    rnk = [0] * n
    anc = [0] * n
    black = [False] * n

    def find(x):
        r = x
        while par[r] != r:
            r = par[r]
        while par[x] != r:
            par[x], x = r, par[x]
        return r

    stack = [root]
    cursor = [-2]  # -2: not entered yet
    while stack:
        u = stack[-1]
        c = cursor[-1]
        if c == -2:
            anc[u] = u
            cursor[-1] = fc[u]
        elif c != -1:
            stack.append(c)
            cursor.append(-2)
        else:
            stack.pop()
            cursor.pop()
            black[u] = True
            e = qhead[u]
            while e != -1:
                w = qother[e]
                if black[w]:
                    out[e >> 1] = anc[find(w)]
                e = qnext[e]
            if stack:
                p = stack[-1]
                cursor[-1] = ns[u]
                ru = find(u)
                rp = find(p)
                if rnk[ru] < rnk[rp]:
                    par[ru] = rp
                    r = rp
                else:
                    par[rp] = ru
                    r = ru
                    if rnk[ru] == rnk[rp]:
                        rnk[ru] += 1
                anc[r] = p


def lca_mark(lab, qi, qj, n):
    """Mark the distinct query nodes by relabelling them n, n+1, ...

    Returns (z0, z1head, z1next, nmarks, marked): z0[slot] is the original
    label of the mark stored at slot (n-1+k) mod 2q, z1head[slot]/z1next the
    chain of endpoint ids e = 2t+side referencing it, marked the list of
    marked node indices.
    """
    q = len(qi)
    two_q = 2 * q
    z0 = [0] * two_q
    z1head = [-1] * two_q
    z1next = [-1] * two_q
    nmarks = 0
    marked = []
    for t in range(q):
        for side in (0, 1):
            u = qi[t] if side == 0 else qj[t]
            v = lab[u]
            if v < n:  # not marked yet; labels start out as the identity
                nmarks += 1
                slot = (n - 1 + nmarks) % two_q
                z0[slot] = v
                lab[u] = n - 1 + nmarks
                marked.append(u)
            else:
                slot = v % two_q
            e = 2 * t + side
            z1next[e] = z1head[slot]
            z1head[slot] = e
    return z0, z1head, z1next, nmarks, marked


def euler_contract(n, root, fc, ns, parent, lab, z0, z1head, z1next, q, ri, rj):
    """One stackless depth-first traversal emitting the contracted tour.

    First visits of marked nodes emit their own (original label, depth) entry
    and rewrite every query endpoint that references them; every other
    visitation (unmarked nodes and re-visits of marked ones) folds into a
    maximal run emitting a single (label, min depth) entry, first-encountered
    on ties.  Uses the parent pointers to walk back up, so extra memory is
    O(1) beyond the emitted arrays.

    Returns (eq, lq, edge_visits); ri/rj are filled in place with first
    occurrence positions.
    """
    two_q = 2 * q
    eq = []
    lq = []
    run_lab = -1
    run_lev = 0
    have_run = False
    edges = 0

    u = root
    depth = 0
    entering = True
    child_done = -1
    while True:
        if entering:
            v = lab[u]
            if v >= n:  # marked, first visit
                if have_run:
                    eq.append(run_lab)
                    lq.append(run_lev)
                    have_run = False
                slot = v % two_q
                p = len(eq)
                eq.append(z0[slot])
                lq.append(depth)
                e = z1head[slot]
                while e != -1:
                    if e & 1:
                        rj[e >> 1] = p
                    else:
                        ri[e >> 1] = p
                    e = z1next[e]
            else:
                if not have_run or depth < run_lev:
                    run_lab = v
                    run_lev = depth
                    have_run = True
            c = fc[u]
            if c != -1:
                edges += 1
                u = c
                depth += 1
                continue
        else:
            v = lab[u]
            olab = z0[v % two_q] if v >= n else v
            if not have_run or depth < run_lev:
                run_lab = olab
                run_lev = depth
                have_run = True
            s = ns[child_done]
            if s != -1:
                edges += 1
                u = s
                depth += 1
                entering = True
                continue
        if u == root:
            break
        edges += 1
        child_done = u
        u = parent[u]
        depth -= 1
        entering = False

    if have_run:
        eq.append(run_lab)
        lq.append(run_lev)
    return eq, lq, edges


def unmark_labels(lab, marked):
    """Undo lca_mark: node labels start out as the identity."""
    for u in marked:
        lab[u] = u


def preorder(n, root, fc, ns, parent):
    """Depth-first preorder of all nodes, children in first-child order."""
    order = [0] * n
    idx = 0
    u = root
    entering = True
    child_done = -1
    while True:
        if entering:
            order[idx] = u
            idx += 1
            c = fc[u]
            if c != -1:
                u = c
                continue
        else:
            s = ns[child_done]
            if s != -1:
                u = s
                entering = True
                continue
        if u == root:
            break
        child_done = u
        u = parent[u]
        entering = False
    return order
