"""Bitmask kernels behind the exact solvers.

A vertex set is an int64 bitmask (bit v set iff v is in the set), so graphs
handled here are limited to ``MAX_KERNEL_VERTICES`` vertices. ``open_nb[v]``
and ``closed_nb[v]`` are the open and closed neighbourhood masks.

Problem kinds are small ints so they can cross the JIT boundary:
``DS=0, SDS=1, IDS=2, ISDS=3``.
"""
import numpy as np

from ._accel import njit

DS, SDS, IDS, ISDS = 0, 1, 2, 3
MAX_KERNEL_VERTICES = 62


@njit
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit
def dominated_mask(s, closed_nb, n):
    d = 0
    for v in range(n):
        if (s >> v) & 1:
            d |= closed_nb[v]
    return d


@njit
def has_isolated(s, open_nb, n):
    for v in range(n):
        if (s >> v) & 1 and (open_nb[v] & s) == 0:
            return True
    return False


@njit
def satisfies(kind, s, open_nb, closed_nb, n):
    full = (1 << n) - 1
    if dominated_mask(s, closed_nb, n) != full:
        return False
    if (kind == IDS or kind == ISDS) and not has_isolated(s, open_nb, n):
        return False
    if kind == DS or kind == IDS:
        return True
    # priv[v]: vertices whose only closed-neighbour in s is v. Removing v from
    # s undominates exactly these, so the swap (s - v + u) dominates iff
    # priv[v] is inside N[u].
    priv = np.zeros(n, dtype=np.int64)
    for w in range(n):
        m = closed_nb[w] & s
        if m != 0 and (m & (m - 1)) == 0:
            v = 0
            while ((m >> v) & 1) == 0:
                v += 1
            priv[v] |= 1 << w
    for u in range(n):
        if (s >> u) & 1:
            continue
        cand = open_nb[u] & s
        ok = False
        for v in range(n):
            if not (cand >> v) & 1:
                continue
            if priv[v] & ~closed_nb[u]:
                continue
            if kind == SDS:
                ok = True
                break
            t = (s & ~(1 << v)) | (1 << u)
            if has_isolated(t, open_nb, n):
                ok = True
                break
        if not ok:
            return False
    return True


@njit
def brute_search(kind, open_nb, closed_nb, n):
    """First feasible subset in (size, lexicographic) order.

    Returns ``(mask, nodes)`` with ``mask == -1`` when no subset qualifies.
    """
    nodes = 0
    idx = np.zeros(n + 1, dtype=np.int64)
    for k in range(n + 1):
        for i in range(k):
            idx[i] = i
        while True:
            s = 0
            for i in range(k):
                s |= 1 << idx[i]
            nodes += 1
            if satisfies(kind, s, open_nb, closed_nb, n):
                return s, nodes
            i = k - 1
            while i >= 0 and idx[i] == n - k + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, k):
                idx[j] = idx[j - 1] + 1
    return -1, nodes


@njit
def bnb_search(kind, open_nb, closed_nb, n, best_init):
    """Depth-first branch and bound for sets of size < ``best_init``.

    Undominated vertices are branched on their candidate dominators (earlier
    candidates excluded in later branches, so every set is reached at most
    once). A dominating set that fails ``kind`` is extended by one more
    vertex. Bound: greedy packing of disjoint candidate neighbourhoods.

    Returns ``(mask, value, nodes)``; ``mask == -1`` if nothing beats
    ``best_init``.
    """
    full = (1 << n) - 1
    cap = n * n + n + 8
    st_s = np.zeros(cap, dtype=np.int64)
    st_x = np.zeros(cap, dtype=np.int64)
    st_d = np.zeros(cap, dtype=np.int64)
    sp = 1
    best = best_init
    best_s = -1
    nodes = 0
    while sp > 0:
        sp -= 1
        s = st_s[sp]
        x = st_x[sp]
        d = st_d[sp]
        nodes += 1
        size = popcount(s)
        if size >= best:
            continue
        avail = full & ~s & ~x
        if d == full:
            if satisfies(kind, s, open_nb, closed_nb, n):
                best = size
                best_s = s
                continue
            if size + 1 >= best:
                continue
            cands = avail
        else:
            undom = full & ~d
            lb = 0
            used = 0
            bestw = -1
            bestcnt = n + 1
            dead = False
            for w in range(n):
                if not (undom >> w) & 1:
                    continue
                cw = closed_nb[w] & avail
                if cw == 0:
                    dead = True
                    break
                cnt = popcount(cw)
                if cnt < bestcnt:
                    bestcnt = cnt
                    bestw = w
                if (cw & used) == 0:
                    lb += 1
                    used |= cw
            if dead or size + lb >= best:
                continue
            cands = closed_nb[bestw] & avail
        # push in reverse so the lowest candidate is explored first
        for c in range(n - 1, -1, -1):
            if (cands >> c) & 1:
                earlier = cands & ((1 << c) - 1)
                st_s[sp] = s | (1 << c)
                st_x[sp] = x | earlier
                st_d[sp] = d | closed_nb[c]
                sp += 1
    return best_s, best, nodes


def mask_to_set(mask):
    out = []
    v = 0
    mask = int(mask)
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def set_to_mask(vertices):
    m = 0
    for v in vertices:
        m |= 1 << int(v)
    return m
