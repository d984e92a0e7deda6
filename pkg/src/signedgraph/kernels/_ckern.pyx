# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; behavior mirrors _pykern exactly."""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()

_MAX_SWEEPS = 100


def jacobi_eigh(a):
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps."""
    A_arr = np.array(a, dtype=np.float64, copy=True, order="C")
    if A_arr.ndim != 2 or A_arr.shape[0] != A_arr.shape[1]:
        raise ValueError("matrix must be square")
    cdef Py_ssize_t n = A_arr.shape[0]
    V_arr = np.eye(n)
    if n < 2:
        return np.diagonal(A_arr).copy(), V_arr
    cdef double[:, ::1] A = A_arr
    cdef double[:, ::1] V = V_arr
    cdef Py_ssize_t p, q, i, sweep
    cdef double off2, apq, app, aqq, tau, t, c, s, xp, xq
    cdef double thresh = 1e-12 * n
    for sweep in range(_MAX_SWEEPS):
        off2 = 0.0
        for p in range(n):
            for q in range(p + 1, n):
                off2 += 2.0 * A[p, q] * A[p, q]
        if sqrt(off2) <= thresh:
            return np.diagonal(A_arr).copy(), V_arr
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                app = A[p, p]
                aqq = A[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    xp = A[i, p]
                    xq = A[i, q]
                    A[i, p] = c * xp - s * xq
                    A[i, q] = s * xp + c * xq
                for i in range(n):
                    xp = A[p, i]
                    xq = A[q, i]
                    A[p, i] = c * xp - s * xq
                    A[q, i] = s * xp + c * xq
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
                for i in range(n):
                    xp = V[i, p]
                    xq = V[i, q]
                    V[i, p] = c * xp - s * xq
                    V[i, q] = s * xp + c * xq
    raise ArithmeticError("jacobi iteration did not converge")


cdef inline bint _lex_less(unsigned long long a, unsigned long long b):
    cdef unsigned long long d, p
    cdef int i = 0
    if a == b:
        return False
    d = a ^ b
    p = d & (~d + 1)
    while not (p & 1):
        p >>= 1
        i += 1
    if (b >> i) & 1:
        return (a >> (i + 1)) == 0
    return (b >> (i + 1)) != 0


def mask_lex_less(a, b):
    """Order bit masks by their sorted element lists, lexicographically."""
    return bool(_lex_less(a, b))


def min_negative_switching(n, us, vs, signs):
    """Minimum negative edge count over all switchings, with a witness.

    Gray code walk over the 2^(n-1) switching sets avoiding vertex 0;
    each step flips one vertex and touches only its incident edges.
    """
    cdef long long nn = n
    if nn > 63:
        raise ValueError("switching enumeration supports n <= 63")
    us_arr = np.ascontiguousarray(us, dtype=np.int64)
    vs_arr = np.ascontiguousarray(vs, dtype=np.int64)
    sg_arr = np.array(signs, dtype=np.int64, copy=True)
    cdef Py_ssize_t m = us_arr.shape[0]
    cdef long long base_neg = int((sg_arr < 0).sum())
    if m == 0 or nn <= 1:
        return int(base_neg), 0

    deg_arr = np.zeros(nn, dtype=np.int64)
    cdef cnp.int64_t[::1] U = us_arr
    cdef cnp.int64_t[::1] Vv = vs_arr
    cdef cnp.int64_t[::1] cur = sg_arr
    cdef cnp.int64_t[::1] deg = deg_arr
    cdef Py_ssize_t e
    for e in range(m):
        deg[U[e]] += 1
        deg[Vv[e]] += 1
    ptr_arr = np.zeros(nn + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] ptr = ptr_arr
    cdef long long v
    for v in range(nn):
        ptr[v + 1] = ptr[v] + deg[v]
    fill_arr = ptr_arr[:nn].copy()
    inc_arr = np.zeros(2 * m, dtype=np.int64)
    cdef cnp.int64_t[::1] fill = fill_arr
    cdef cnp.int64_t[::1] inc = inc_arr
    for e in range(m):
        inc[fill[U[e]]] = e
        fill[U[e]] += 1
        inc[fill[Vv[e]]] = e
        fill[Vv[e]] += 1

    cdef long long count = base_neg, best = base_neg
    cdef unsigned long long mask = 0, best_mask = 0, kk
    cdef unsigned long long total = (<unsigned long long> 1) << (nn - 1)
    cdef unsigned long long k
    cdef int j
    cdef Py_ssize_t idx
    cdef cnp.int64_t eid
    for k in range(1, total):
        kk = k
        j = 0
        while not (kk & 1):
            kk >>= 1
            j += 1
        v = j + 1
        mask ^= (<unsigned long long> 1) << v
        for idx in range(ptr[v], ptr[v + 1]):
            eid = inc[idx]
            cur[eid] = -cur[eid]
            if cur[eid] < 0:
                count += 1
            else:
                count -= 1
        if count < best or (count == best and _lex_less(mask, best_mask)):
            best = count
            best_mask = mask
    return int(best), int(best_mask)


cdef long long _find(cnp.int64_t[::1] parent, cnp.int64_t[::1] par,
                     long long x, long long* pout):
    cdef long long root = x, p = 0, cur, nxt, a = 0, pc
    while parent[root] != root:
        p ^= par[root]
        root = parent[root]
    cur = x
    while parent[cur] != root:
        nxt = parent[cur]
        pc = par[cur]
        parent[cur] = root
        par[cur] = p ^ a
        a ^= pc
        cur = nxt
    pout[0] = p
    return root


cdef bint _balanced(long long n, Py_ssize_t m,
                    cnp.int64_t[::1] U, cnp.int64_t[::1] Vv, cnp.int64_t[::1] S,
                    cnp.int64_t[::1] deleted, cnp.int64_t[::1] parent,
                    cnp.int64_t[::1] par, cnp.int64_t[::1] rank_):
    cdef long long i, u, v, ru, rv, pu, pv, want, tmp
    cdef Py_ssize_t e
    for i in range(n):
        parent[i] = i
        par[i] = 0
        rank_[i] = 0
    for e in range(m):
        u = U[e]
        v = Vv[e]
        if deleted[u] or deleted[v]:
            continue
        want = 1 if S[e] < 0 else 0
        ru = _find(parent, par, u, &pu)
        rv = _find(parent, par, v, &pv)
        if ru == rv:
            if (pu ^ pv) != want:
                return False
        else:
            if rank_[ru] < rank_[rv]:
                tmp = ru
                ru = rv
                rv = tmp
                tmp = pu
                pu = pv
                pv = tmp
            parent[rv] = ru
            par[rv] = pu ^ pv ^ want
            if rank_[ru] == rank_[rv]:
                rank_[ru] += 1
    return True


def min_balancing_vertex_set(n, us, vs, signs):
    """Smallest vertex set whose removal balances the graph.

    Tries combinations in increasing size, lexicographic within a size,
    so the witness matches the pure Python fallback exactly.
    """
    cdef long long nn = n
    us_arr = np.ascontiguousarray(us, dtype=np.int64)
    vs_arr = np.ascontiguousarray(vs, dtype=np.int64)
    sg_arr = np.ascontiguousarray(signs, dtype=np.int64)
    cdef Py_ssize_t m = us_arr.shape[0]
    cdef cnp.int64_t[::1] U = us_arr
    cdef cnp.int64_t[::1] Vv = vs_arr
    cdef cnp.int64_t[::1] S = sg_arr
    parent_arr = np.zeros(max(nn, 1), dtype=np.int64)
    par_arr = np.zeros(max(nn, 1), dtype=np.int64)
    rank_arr = np.zeros(max(nn, 1), dtype=np.int64)
    deleted_arr = np.zeros(max(nn, 1), dtype=np.int64)
    comb_arr = np.zeros(max(nn, 1), dtype=np.int64)
    cdef cnp.int64_t[::1] parent = parent_arr
    cdef cnp.int64_t[::1] par = par_arr
    cdef cnp.int64_t[::1] rank_ = rank_arr
    cdef cnp.int64_t[::1] deleted = deleted_arr
    cdef cnp.int64_t[::1] comb = comb_arr
    cdef long long k, i, j
    cdef bint ok
    for k in range(nn + 1):
        for i in range(k):
            comb[i] = i
        while True:
            for j in range(k):
                deleted[comb[j]] = 1
            ok = _balanced(nn, m, U, Vv, S, deleted, parent, par, rank_)
            for j in range(k):
                deleted[comb[j]] = 0
            if ok:
                return int(k), comb_arr[:k].copy()
            i = k - 1
            while i >= 0 and comb[i] == nn - k + i:
                i -= 1
            if i < 0:
                break
            comb[i] += 1
            for j in range(i + 1, k):
                comb[j] = comb[j - 1] + 1
    return int(nn), np.arange(nn, dtype=np.int64)  # pragma: no cover
