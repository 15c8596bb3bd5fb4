# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled solver kernels: fixpoint level table and depth-limited search.

Mirrors ``_fallback.py`` exactly; selected at import time by ``backend.py``.
Limited to graphs with fewer than 63 vertices (positions are tracked in
64-bit occupancy masks); the driver falls back to the pure kernels beyond
that.
"""

from itertools import combinations_with_replacement

import numpy as np

cimport numpy as cnp
from libc.stdint cimport int16_t, int32_t, uint64_t

cnp.import_array()

BACKEND_NAME = "compiled"

DEF MAXK = 8


cdef class _Csr:
    cdef int32_t[::1] off
    cdef int32_t[::1] dat


def _build_csr(int n, closed):
    off = np.zeros(n + 1, dtype=np.int32)
    total = 0
    for v in range(n):
        total += len(closed[v])
        off[v + 1] = total
    dat = np.zeros(total, dtype=np.int32)
    pos = 0
    for v in range(n):
        for w in closed[v]:
            dat[pos] = w
            pos += 1
    return off, dat


def solve_table(int n, int k, closed, budget_positions=None):
    """Backward-induction level table; same contract as the pure kernel."""
    if n >= 63:
        raise ValueError("compiled kernel limited to n < 63")
    if k > MAXK:
        raise ValueError("compiled kernel limited to k <= %d" % MAXK)

    f_pairs = [(a, b) for a in range(n) for b in range(a, n)]
    d_tuples = list(combinations_with_replacement(range(n), k))
    cdef Py_ssize_t nf = len(f_pairs), nd = len(d_tuples)

    cdef uint64_t code_span = 1
    cdef int i
    for i in range(k):
        code_span *= <uint64_t> n
    if code_span > (1 << 26):
        raise ValueError("placement code table too large for compiled kernel")

    off_np, dat_np = _build_csr(n, closed)
    cdef int32_t[::1] off = off_np
    cdef int32_t[::1] dat = dat_np

    fidx_np = np.full(n * n, -1, dtype=np.int32)
    cdef int32_t[::1] fidx = fidx_np
    cdef int a, b
    for i, (a, b) in enumerate(f_pairs):
        fidx[a * n + b] = i

    dflat_np = np.zeros(nd * k, dtype=np.int32)
    dmask_np = np.zeros(nd, dtype=np.uint64)
    code2id_np = np.full(code_span, -1, dtype=np.int32)
    cdef int32_t[::1] dflat = dflat_np
    cdef uint64_t[::1] dmask = dmask_np
    cdef int32_t[::1] code2id = code2id_np
    cdef uint64_t code, m
    cdef Py_ssize_t di
    for di, tup in enumerate(d_tuples):
        code = 0
        m = 0
        for i in range(k):
            dflat[di * k + i] = tup[i]
            code = code * <uint64_t> n + <uint64_t> tup[i]
            m |= (<uint64_t> 1) << tup[i]
        dmask[di] = m
        code2id[code] = di

    level_np = np.full((nf, nd), -1, dtype=np.int16)
    cdef int16_t[:, ::1] level = level_np
    cdef uint64_t fm
    cdef Py_ssize_t fi
    for fi in range(nf):
        a = f_pairs[fi][0]
        b = f_pairs[fi][1]
        fm = ((<uint64_t> 1) << a) | ((<uint64_t> 1) << b)
        for di in range(nd):
            if fm & dmask[di]:
                level[fi, di] = -2
            elif a == b:
                level[fi, di] = 0

    cdef int32_t[::1] fa_np = np.zeros(nf, dtype=np.int32)
    cdef int32_t[::1] fb_np = np.zeros(nf, dtype=np.int32)
    for fi in range(nf):
        fa_np[fi] = f_pairs[fi][0]
        fb_np[fi] = f_pairs[fi][1]

    cdef int32_t opts_a[64]
    cdef int32_t opts_b[64]
    cdef int32_t dopts[MAXK][64]
    cdef int dcnt[MAXK]
    cdef int idx[MAXK]
    cdef int32_t tmp[MAXK]
    cdef int na, nb, x, y, fj, j, q, v, w, lv
    cdef int ell = 0, changed
    cdef bint won, ok
    cdef uint64_t dm, fpm

    while True:
        ell += 1
        changed = 0
        for fi in range(nf):
            a = fa_np[fi]
            b = fb_np[fi]
            if a == b:
                continue
            for di in range(nd):
                if level[fi, di] != -1:
                    continue
                dm = dmask[di]
                na = 0
                for j in range(off[a], off[a + 1]):
                    w = dat[j]
                    if not (dm >> w) & 1:
                        opts_a[na] = w
                        na += 1
                nb = 0
                for j in range(off[b], off[b + 1]):
                    w = dat[j]
                    if not (dm >> w) & 1:
                        opts_b[nb] = w
                        nb += 1
                won = False
                for x_i in range(na):
                    if won:
                        break
                    x = opts_a[x_i]
                    for y_i in range(nb):
                        y = opts_b[y_i]
                        if x == y:
                            won = True  # meeting move
                            break
                        if x <= y:
                            fj = fidx[x * n + y]
                        else:
                            fj = fidx[y * n + x]
                        fpm = ((<uint64_t> 1) << x) | ((<uint64_t> 1) << y)
                        # universal check over divider responses
                        ok = True
                        for q in range(k):
                            dcnt[q] = 0
                            v = dflat[di * k + q]
                            for j in range(off[v], off[v + 1]):
                                w = dat[j]
                                if not (fpm >> w) & 1:
                                    dopts[q][dcnt[q]] = w
                                    dcnt[q] += 1
                            idx[q] = 0
                        while True:
                            for q in range(k):
                                tmp[q] = dopts[q][idx[q]]
                            # insertion sort, k is tiny
                            for q in range(1, k):
                                w = tmp[q]
                                j = q - 1
                                while j >= 0 and tmp[j] > w:
                                    tmp[j + 1] = tmp[j]
                                    j -= 1
                                tmp[j + 1] = w
                            code = 0
                            for q in range(k):
                                code = code * <uint64_t> n + <uint64_t> tmp[q]
                            lv = level[fj, code2id[code]]
                            if lv < 0 or lv >= ell:
                                ok = False
                                break
                            q = k - 1
                            while q >= 0:
                                idx[q] += 1
                                if idx[q] < dcnt[q]:
                                    break
                                idx[q] = 0
                                q -= 1
                            if q < 0:
                                break
                        if ok:
                            won = True
                            break
                if won:
                    level[fi, di] = ell
                    changed += 1
        if changed == 0:
            return f_pairs, d_tuples, level_np, ell


cdef class BoundedGame:
    """Depth-limited minimax with memoization; same contract as the pure twin."""

    cdef int n, k
    cdef int32_t[::1] off
    cdef int32_t[::1] dat
    cdef dict memo
    cdef public long nodes
    cdef object node_budget
    cdef long _budget

    def __init__(self, g, int k, node_budget=None):
        n = g.n
        if n >= 63:
            raise ValueError("compiled kernel limited to n < 63")
        if k > MAXK:
            raise ValueError("compiled kernel limited to k <= %d" % MAXK)
        if k * n.bit_length() > 62:
            raise ValueError("placement codes overflow the compiled kernel")
        self.n = n
        self.k = k
        off_np, dat_np = _build_csr(n, g._closed)
        self.off = off_np
        self.dat = dat_np
        self.memo = {}
        self.nodes = 0
        self.node_budget = node_budget
        self._budget = -1 if node_budget is None else <long> node_budget

    def wins(self, f, d, int r):
        cdef int32_t dv[MAXK]
        cdef int q
        for q in range(self.k):
            dv[q] = d[q]
        return self._wins(f[0], f[1], dv, r)

    cdef bint _wins(self, int a, int b, int32_t* d, int r) except? -1:
        if a == b:
            return True
        if r <= 0:
            return False
        cdef int n = self.n, k = self.k
        cdef uint64_t dcode = 0
        cdef int q
        for q in range(k):
            dcode = dcode * <uint64_t> n + <uint64_t> d[q]
        key = (((a * n + b) << 6) | r, dcode)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.nodes += 1
        if self._budget >= 0 and self.nodes > self._budget:
            from .solver import BudgetExceeded
            raise BudgetExceeded("bounded-search", self.nodes, self.node_budget)

        cdef uint64_t dm = 0
        for q in range(k):
            dm |= (<uint64_t> 1) << d[q]
        cdef int32_t opts_a[64]
        cdef int32_t opts_b[64]
        cdef int32_t dopts[MAXK][64]
        cdef int dcnt[MAXK]
        cdef int idx[MAXK]
        cdef int32_t d2[MAXK]
        cdef int32_t tmp[MAXK]
        cdef int na = 0, nb = 0, j, w, x, y, v
        cdef uint64_t fpm, seen_hi, seen_lo
        cdef bint result = False, all_lose
        for j in range(self.off[a], self.off[a + 1]):
            w = self.dat[j]
            if not (dm >> w) & 1:
                opts_a[na] = w
                na += 1
        for j in range(self.off[b], self.off[b + 1]):
            w = self.dat[j]
            if not (dm >> w) & 1:
                opts_b[nb] = w
                nb += 1
        cdef set moved = set()
        for x_i in range(na):
            if result:
                break
            x = opts_a[x_i]
            for y_i in range(nb):
                y = opts_b[y_i]
                if x == y:
                    result = True  # meet within this move
                    break
                fp = (x, y) if x <= y else (y, x)
                if fp in moved:
                    continue
                moved.add(fp)
                fpm = ((<uint64_t> 1) << x) | ((<uint64_t> 1) << y)
                all_lose = True
                for q in range(k):
                    dcnt[q] = 0
                    v = d[q]
                    for j in range(self.off[v], self.off[v + 1]):
                        w = self.dat[j]
                        if not (fpm >> w) & 1:
                            dopts[q][dcnt[q]] = w
                            dcnt[q] += 1
                    idx[q] = 0
                while True:
                    for q in range(k):
                        tmp[q] = dopts[q][idx[q]]
                    for q in range(1, k):
                        w = tmp[q]
                        j = q - 1
                        while j >= 0 and tmp[j] > w:
                            tmp[j + 1] = tmp[j]
                            j -= 1
                        tmp[j + 1] = w
                    for q in range(k):
                        d2[q] = tmp[q]
                    if not self._wins(fp[0], fp[1], d2, r - 1):
                        all_lose = False
                        break
                    q = k - 1
                    while q >= 0:
                        idx[q] += 1
                        if idx[q] < dcnt[q]:
                            break
                        idx[q] = 0
                        q -= 1
                    if q < 0:
                        break
                if all_lose:
                    result = True
                    break
        self.memo[key] = result
        return result
