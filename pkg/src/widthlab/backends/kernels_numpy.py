"""Pure numpy / python fallback backend.

Mirrors the kernel API of kernels_numba exactly.  The subset DPs are
vectorised over bitmask arrays; the search-style kernels are plain
python.  Selected with WIDTHLAB_BACKEND=numpy (or automatically when
numba is unavailable).
"""

import itertools

import numpy as np

from ._subsets import connected_subsets_bits

BIG = np.int64(1) << 62

INV_SEP = 0
INV_CW = 1
INV_BW = 2
INV_VS = 3
INV_TW = 4
INV_COGROWTH = 5


def _pc_arr(x):
    return np.bitwise_count(x.astype(np.uint64)).astype(np.int64)


# ---------------------------------------------------------------------------
# python-int helpers

def _flood(adj, seed, allowed):
    comp = 0
    front = seed
    while front:
        comp |= front
        nxt = 0
        f = front
        while f:
            b = f & -f
            nxt |= adj[b.bit_length() - 1]
            f ^= b
        front = nxt & allowed & ~comp
    return comp


def _components_within(adj, allowed, thr):
    rem = allowed
    while rem:
        comp = _flood(adj, rem & -rem, rem)
        if comp.bit_count() > thr:
            return False
        rem &= ~comp
    return True


def _gosper(mask):
    c = mask & -mask
    r = mask + c
    return (((r ^ mask) >> 2) // c) | r


def cutsize_search(adj, n, thr, budget):
    adj = [int(a) for a in adj]
    full = (1 << n) - 1
    examined = 1
    if _components_within(adj, full, thr):
        return 0, 0, examined
    for k in range(1, n + 1):
        mask = (1 << k) - 1
        while mask <= full:
            examined += 1
            if examined > budget:
                return -1, 0, examined
            if _components_within(adj, full & ~mask, thr):
                return k, mask, examined
            mask = _gosper(mask)
    return n, full, examined


def balanced_separator(adj, n):
    adj = [int(a) for a in adj]
    full = (1 << n) - 1
    t = (2 * n) // 3
    for k in range(0, n + 1):
        mask = 0 if k == 0 else (1 << k) - 1
        while True:
            rem = full & ~mask
            total = n - k
            sums = 1
            ok = True
            r = rem
            while r:
                comp = _flood(adj, r & -r, rem)
                c = comp.bit_count()
                if c > t:
                    ok = False
                    break
                sums |= sums << c
                r &= ~comp
            if ok:
                for s in range(max(0, total - t), min(t, total) + 1):
                    if (sums >> s) & 1:
                        return k, mask
            if k == 0:
                break
            mask = _gosper(mask)
            if mask > full:
                break
    return n, full


def cheeger_scan(adj, n):
    size = 1 << n
    full = size - 1
    masks = np.arange(size, dtype=np.int64)
    adj_arr = np.asarray(adj, dtype=np.int64)
    nb = np.zeros(size, dtype=np.int64)
    for v in range(n - 1, -1, -1):
        idx = np.arange(1 << v, size, 1 << (v + 1), dtype=np.int64)
        nb[idx] = nb[idx - (1 << v)] | adj_arr[v]
    sizes = _pc_arr(masks)
    bnd = _pc_arr(nb & ~masks & full)
    ok = (masks > 0) & (2 * sizes <= n)
    # exact for numerators/denominators <= n <= 20: equal rationals give
    # equal doubles and distinct ones differ by far more than 1 ulp
    ratio = np.where(ok, bnd / np.maximum(sizes, 1), np.inf)
    i = int(np.argmin(ratio))
    return int(bnd[i]), int(sizes[i]), int(masks[i])


# ---------------------------------------------------------------------------
# layout DPs, vectorised by prefix-set popcount level

def _levels(size):
    masks = np.arange(size, dtype=np.int64)
    pc = _pc_arr(masks)
    return masks, pc


def _cut_profile(adj, n, masks):
    full = (1 << n) - 1
    cut = np.zeros(len(masks), dtype=np.int64)
    for v in range(n):
        sel = ((masks >> v) & 1) == 1
        cut[sel] += _pc_arr(adj[v] & ~masks[sel] & full)
    return cut


def cutwidth_dp(adj, n, p):
    adj = np.asarray(adj, dtype=np.int64)
    size = 1 << n
    masks, pc = _levels(size)
    cut = _cut_profile(adj, n, masks)
    dp = np.full(size, BIG, dtype=np.int64)
    dp[0] = 0
    for s in range(1, n + 1):
        level = masks[pc == s]
        best = np.full(len(level), BIG, dtype=np.int64)
        for v in range(n):
            sel = ((level >> v) & 1) == 1
            if not sel.any():
                continue
            prev = level[sel] ^ (1 << v)
            if p == 0:
                c = np.maximum(dp[prev], cut[prev])
            else:
                c = dp[prev] + cut[prev] ** p
            best[sel] = np.minimum(best[sel], c)
        dp[level] = best
    # witness: walk down choosing the smallest consistent last vertex
    seq = np.zeros(n, dtype=np.int64)
    mask = size - 1
    for posn in range(n - 1, -1, -1):
        for v in range(n):
            if not (mask >> v) & 1:
                continue
            prev = mask ^ (1 << v)
            c = max(dp[prev], cut[prev]) if p == 0 else dp[prev] + int(cut[prev]) ** p
            if c == dp[mask]:
                seq[posn] = v
                mask = prev
                break
    return int(dp[size - 1]), seq, size


def vertexsep_dp(adj, n, p):
    adj = np.asarray(adj, dtype=np.int64)
    size = 1 << n
    full = size - 1
    masks, pc = _levels(size)
    bnd = np.zeros(size, dtype=np.int64)
    for v in range(n):
        sel = ((masks >> v) & 1) == 1
        bnd[sel] += (adj[v] & ~masks[sel] & full) != 0
    dp = np.full(size, BIG, dtype=np.int64)
    dp[0] = 0
    for s in range(1, n + 1):
        level = masks[pc == s]
        best = np.full(len(level), BIG, dtype=np.int64)
        for v in range(n):
            sel = ((level >> v) & 1) == 1
            if not sel.any():
                continue
            prev = level[sel] ^ (1 << v)
            best[sel] = np.minimum(best[sel], dp[prev])
        if p == 0:
            dp[level] = np.maximum(best, bnd[level])
        else:
            dp[level] = best + bnd[level] ** p
    seq = np.zeros(n, dtype=np.int64)
    mask = size - 1
    for posn in range(n - 1, -1, -1):
        for v in range(n):
            if not (mask >> v) & 1:
                continue
            prev = mask ^ (1 << v)
            c = max(dp[prev], int(bnd[mask])) if p == 0 else dp[prev] + int(bnd[mask]) ** p
            if c == dp[mask]:
                seq[posn] = v
                mask = prev
                break
    return int(dp[size - 1]), seq, size


# ---------------------------------------------------------------------------
# bandwidth branch and bound (python port of the numba kernel)

def bandwidth_bnb(adj, n, p):
    adj = [int(a) for a in adj]
    total_edges = sum(a.bit_count() for a in adj) // 2
    seq = [-1] * n
    best_seq = list(range(n))
    pos = [0] * n
    base = [0] * (n + 1)
    cand = [0] * (n + 1)
    best = int(BIG)
    nodes = 0
    placed = 0
    t = 0
    while t >= 0:
        if t == n:
            if base[n] < best:
                best = base[n]
                best_seq = seq.copy()
            t -= 1
            u = seq[t]
            placed &= ~(1 << u)
            pos[u] = 0
            cand[t] = u + 1
            continue
        v = cand[t]
        while v < n and (placed >> v) & 1:
            v += 1
        if v >= n:
            t -= 1
            if t >= 0:
                u = seq[t]
                placed &= ~(1 << u)
                pos[u] = 0
                cand[t] = u + 1
            continue
        nodes += 1
        newbase = base[t]
        ok = True
        m = adj[v] & placed
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            stretch = (t + 1) - pos[u]
            newbase = max(newbase, stretch) if p == 0 else newbase + stretch ** p
            if newbase >= best:
                ok = False
                break
        if not ok:
            cand[t] = v + 1
            continue
        placed |= 1 << v
        pos[v] = t + 1
        seq[t] = v
        lb = newbase
        pinned = 0
        half = 0
        m2 = placed
        while m2:
            b = m2 & -m2
            u = b.bit_length() - 1
            m2 ^= b
            pinned += (adj[u] & placed).bit_count()
            ku = (adj[u] & ~placed).bit_count()
            half += ku
            if ku > 0:
                if p == 0:
                    lb = max(lb, (t + 1) + ku - pos[u])
                else:
                    lb += sum(((t + 1) + j - pos[u]) ** p for j in range(1, ku + 1))
        rest = total_edges - pinned // 2 - half
        if p == 0:
            if rest > 0:
                lb = max(lb, 1)
        else:
            lb += rest
        if lb < best:
            base[t + 1] = newbase
            t += 1
            cand[t] = 0
        else:
            placed &= ~(1 << v)
            pos[v] = 0
            cand[t] = v + 1
    return best, np.asarray(best_seq, dtype=np.int64), nodes


# ---------------------------------------------------------------------------
# permutation brute force, batched over numpy

_CHUNK = 200_000


def brute_force_scan(adj, n, cost_id, p):
    adj = [int(a) for a in adj]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if (adj[u] >> v) & 1]
    nbrs = [[u for u in range(n) if (adj[v] >> u) & 1] for v in range(n)]
    best = None
    best_seq = None
    count = 0
    it = itertools.permutations(range(n))
    while True:
        chunk = list(itertools.islice(it, _CHUNK))
        if not chunk:
            break
        perms = np.array(chunk, dtype=np.int16)
        P = len(perms)
        count += P
        pos = np.empty((P, n), dtype=np.int16)
        rows = np.arange(P)[:, None]
        pos[rows, perms] = np.arange(1, n + 1, dtype=np.int16)
        if cost_id == 1:    # bandwidth
            val = np.zeros(P, dtype=np.int64)
            for u, v in edges:
                st = np.abs(pos[:, u] - pos[:, v]).astype(np.int64)
                if p == 0:
                    np.maximum(val, st, out=val)
                else:
                    val += st ** p
        elif cost_id == 0:  # cutwidth
            val = np.zeros(P, dtype=np.int64)
            for i in range(1, n):
                cross = np.zeros(P, dtype=np.int64)
                for u, v in edges:
                    lo = np.minimum(pos[:, u], pos[:, v])
                    hi = np.maximum(pos[:, u], pos[:, v])
                    cross += (lo <= i) & (hi > i)
                if p == 0:
                    np.maximum(val, cross, out=val)
                else:
                    val += cross ** p
        else:               # vertex separation
            val = np.zeros(P, dtype=np.int64)
            maxnbr = np.zeros((P, n), dtype=np.int16)
            for v in range(n):
                if nbrs[v]:
                    maxnbr[:, v] = pos[:, nbrs[v]].max(axis=1)
            for i in range(1, n):
                b = np.zeros(P, dtype=np.int64)
                for v in range(n):
                    b += (pos[:, v] <= i) & (maxnbr[:, v] > i)
                if p == 0:
                    np.maximum(val, b, out=val)
                else:
                    val += b ** p
        i = int(np.argmin(val))
        if best is None or val[i] < best:
            best = int(val[i])
            best_seq = np.array(chunk[i], dtype=np.int64)
    return best, best_seq, count


# ---------------------------------------------------------------------------
# treewidth DP (python bitsets)

def _elim_degree_py(adj, eliminated, v, full):
    vbit = 1 << v
    outside = full & ~eliminated & ~vbit
    reach = adj[v] & outside
    visited = vbit
    front = adj[v] & eliminated
    while front:
        b = front & -front
        w = b.bit_length() - 1
        front ^= b
        visited |= b
        reach |= adj[w] & outside
        front |= adj[w] & eliminated & ~visited
    return reach.bit_count()


def treewidth_dp(adj, n):
    adj = [int(a) for a in adj]
    size = 1 << n
    full = size - 1
    dp = [n] * size
    dp[0] = 0
    for mask in range(1, size):
        best = n
        m = mask
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            prev = mask ^ b
            q = _elim_degree_py(adj, prev, v, full)
            c = dp[prev] if dp[prev] >= q else q
            if c < best:
                best = c
        dp[mask] = best
    seq = np.zeros(n, dtype=np.int64)
    mask = full
    for posn in range(n - 1, -1, -1):
        for v in range(n):
            if not (mask >> v) & 1:
                continue
            prev = mask ^ (1 << v)
            q = _elim_degree_py(adj, prev, v, full)
            if max(dp[prev], q) == dp[mask]:
                seq[posn] = v
                mask = prev
                break
    return dp[full], seq, size


# ---------------------------------------------------------------------------
# small python solvers shared by the fallback profile scan

def _cutsize_small(adj, s, thr):
    full = (1 << s) - 1
    if _components_within(adj, full, thr):
        return 0
    for k in range(1, s + 1):
        mask = (1 << k) - 1
        while mask <= full:
            if _components_within(adj, full & ~mask, thr):
                return k
            mask = _gosper(mask)
    return s


def _cw_dp_value_py(adj, s, p):
    size = 1 << s
    cut = [0] * size
    for mask in range(1, size):
        b = mask & -mask
        v = b.bit_length() - 1
        prev = mask ^ b
        cut[mask] = cut[prev] + adj[v].bit_count() - 2 * (adj[v] & prev).bit_count()
    dp = [0] * size
    for mask in range(1, size):
        best = None
        m = mask
        while m:
            b = m & -m
            m ^= b
            prev = mask ^ b
            c = max(dp[prev], cut[prev]) if p == 0 else dp[prev] + cut[prev] ** p
            if best is None or c < best:
                best = c
        dp[mask] = best
    return dp[size - 1]


def _vs_dp_value_py(adj, s, p):
    size = 1 << s
    full = size - 1
    dp = [0] * size
    for mask in range(1, size):
        bq = 0
        m = mask
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            if adj[v] & ~mask & full:
                bq += 1
        best = None
        m = mask
        while m:
            b = m & -m
            m ^= b
            if best is None or dp[mask ^ b] < best:
                best = dp[mask ^ b]
        dp[mask] = max(best, bq) if p == 0 else best + bq ** p
    return dp[full]


def _tw_dp_value_py(adj, s):
    size = 1 << s
    full = size - 1
    dp = [s] * size
    dp[0] = 0
    for mask in range(1, size):
        best = s
        m = mask
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            prev = mask ^ b
            q = _elim_degree_py(adj, prev, v, full)
            c = dp[prev] if dp[prev] >= q else q
            if c < best:
                best = c
        dp[mask] = best
    return dp[full]


def _bw_value_py(adj, s, p):
    val, _seq, _nodes = bandwidth_bnb(adj, s, p)
    return val


def _diam_py(adj, s):
    best = 0
    for src in range(s):
        seen = 1 << src
        front = 1 << src
        d = -1
        while front:
            d += 1
            nxt = 0
            f = front
            while f:
                b = f & -f
                nxt |= adj[b.bit_length() - 1]
                f ^= b
            front = nxt & ~seen
            seen |= front
        best = max(best, d)
    return best


def _wit_less_int(a: int, b: int) -> bool:
    """Set order on bitmasks viewed as ascending vertex sequences."""
    if a == b:
        return False
    d = (a ^ b) & -(a ^ b)
    owner_a = bool(a & d)
    other = b if owner_a else a
    tail = other & ~(d | (d - 1))
    return bool(tail) if owner_a else not tail


def profile_scan(rows, hn, W, rmax, inv, p, thr_num, thr_den, v0, v1,
                 best_val, best_wit):
    adj = []
    for v in range(hn):
        x = 0
        for w in range(W):
            x |= int(rows[v, w]) << (64 * w)
        adj.append(x)
    visited = 0
    for smask in connected_subsets_bits(adj, rmax, v0, v1):
        visited += 1
        members = []
        x = smask
        while x:
            b = x & -x
            members.append(b.bit_length() - 1)
            x ^= b
        s = len(members)
        ladj = [0] * s
        for i in range(s):
            for j in range(i):
                if (adj[members[i]] >> members[j]) & 1:
                    ladj[i] |= 1 << j
                    ladj[j] |= 1 << i
        if inv == INV_SEP:
            val = _cutsize_small(ladj, s, (thr_num * s) // thr_den)
        elif inv == INV_CW:
            val = _cw_dp_value_py(ladj, s, p)
        elif inv == INV_BW:
            val = _bw_value_py(ladj, s, p)
        elif inv == INV_VS:
            val = _vs_dp_value_py(ladj, s, p)
        elif inv == INV_TW:
            val = _tw_dp_value_py(ladj, s)
        else:
            val = _diam_py(ladj, s)
        cur_wit = 0
        for w in range(W):
            cur_wit |= int(best_wit[s, w]) << (64 * w)
        if inv == INV_COGROWTH:
            better = best_val[s] < 0 or val < best_val[s]
        else:
            better = val > best_val[s]
        if better or (val == best_val[s] and _wit_less_int(smask, cur_wit)):
            best_val[s] = val
            for w in range(W):
                best_wit[s, w] = (smask >> (64 * w)) & ((1 << 64) - 1)
    return visited


def connected_subset_count(rows, hn, W, rmax):
    best_val = np.full(rmax + 1, -1, dtype=np.int64)
    best_wit = np.zeros((rmax + 1, W), dtype=np.uint64)
    return profile_scan(rows, hn, W, rmax, INV_COGROWTH, 0, 0, 1, 0, hn,
                        best_val, best_wit)


def warmup():
    """Nothing to compile; present for API parity."""
