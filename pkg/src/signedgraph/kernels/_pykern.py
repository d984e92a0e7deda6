"""Pure Python kernel implementations.

Same contracts as the compiled extension in ``_ckern``; used whenever
the extension is unavailable.  numpy keeps the inner loops tolerable but
expect roughly an order of magnitude less throughput.
"""

import itertools

import numpy as np

_MAX_SWEEPS = 100
_CHUNK = 1 << 16


def jacobi_eigh(a):
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.

    Returns (w, V) with A @ V[:,i] ~= w[i] * V[:,i]; eigenvalues are in
    no particular order.  Sweeps stop once the off-diagonal Frobenius
    norm drops below 1e-12 times the order.
    """
    A = np.array(a, dtype=np.float64, copy=True)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    n = A.shape[0]
    V = np.eye(n)
    if n < 2:
        return np.diag(A).copy(), V
    for _sweep in range(_MAX_SWEEPS):
        off = np.sqrt(2.0 * np.sum(np.triu(A, 1) ** 2))
        if off <= 1e-12 * n:
            return np.diag(A).copy(), V
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                app = A[p, p]
                aqq = A[q, q]
                h = aqq - app
                if abs(h) + 100.0 * abs(apq) == abs(h):
                    t = apq / h
                else:
                    tau = h / (2.0 * apq)
                    if tau >= 0.0:
                        t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                colp = A[:, p].copy()
                colq = A[:, q].copy()
                A[:, p] = c * colp - s * colq
                A[:, q] = s * colp + c * colq
                rowp = A[p, :].copy()
                rowq = A[q, :].copy()
                A[p, :] = c * rowp - s * rowq
                A[q, :] = s * rowp + c * rowq
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    raise ArithmeticError("jacobi iteration did not converge")


def mask_lex_less(a: int, b: int) -> bool:
    """Order bit masks by their sorted element lists, lexicographically."""
    if a == b:
        return False
    d = a ^ b
    i = (d & -d).bit_length()  # one past the lowest differing bit
    if b & (1 << (i - 1)):
        return (a >> i) == 0
    return (b >> i) != 0


def min_negative_switching(n, us, vs, signs):
    """Minimum negative edge count over all switchings, with a witness.

    Enumerates the 2^(n-1) switching classes that keep vertex 0 out of
    the switching set.  Returns (count, mask) where bit v of ``mask``
    marks vertex v; among optimal masks the one whose vertex list is
    lexicographically smallest wins.
    """
    if n > 63:
        raise ValueError("switching enumeration supports n <= 63")
    us = np.asarray(us, dtype=np.int64)
    vs = np.asarray(vs, dtype=np.int64)
    signs = np.asarray(signs, dtype=np.int64)
    m = len(us)
    base_neg = int(np.sum(signs < 0))
    if m == 0 or n <= 1:
        return base_neg, 0
    neg0 = signs < 0
    total = 1 << (n - 1)
    best = base_neg
    best_mask = 0
    for start in range(0, total, _CHUNK):
        ks = np.arange(start, min(start + _CHUNK, total), dtype=np.uint64)
        counts = np.zeros(len(ks), dtype=np.int64)
        for e in range(m):
            u = int(us[e])
            v = int(vs[e])
            if u == 0:
                bu = np.zeros(len(ks), dtype=bool)
            else:
                bu = ((ks >> np.uint64(u - 1)) & np.uint64(1)).astype(bool)
            bv = ((ks >> np.uint64(v - 1)) & np.uint64(1)).astype(bool)
            counts += (bu ^ bv) != neg0[e]
        cmin = int(counts.min())
        if cmin > best:
            continue
        for idx in np.flatnonzero(counts == cmin):
            mask = int(ks[idx]) << 1
            if cmin < best or mask_lex_less(mask, best_mask):
                best = cmin
                best_mask = mask
    return best, best_mask


def _balanced_without(n, adj, deleted):
    """Balance check by BFS potentials, ignoring deleted vertices."""
    pot = [0] * n
    seen = [False] * n
    for root in range(n):
        if seen[root] or root in deleted:
            continue
        seen[root] = True
        pot[root] = 1
        queue = [root]
        while queue:
            x = queue.pop()
            for y, s in adj[x]:
                if y in deleted:
                    continue
                want = pot[x] * s
                if not seen[y]:
                    seen[y] = True
                    pot[y] = want
                    queue.append(y)
                elif pot[y] != want:
                    return False
    return True


def min_balancing_vertex_set(n, us, vs, signs):
    """Smallest vertex set whose removal balances the graph.

    Returns (k, witness) with the witness as a sorted int64 array; ties
    break to the lexicographically first combination.
    """
    adj = [[] for _ in range(n)]
    for u, v, s in zip(us, vs, signs):
        adj[int(u)].append((int(v), int(s)))
        adj[int(v)].append((int(u), int(s)))
    for k in range(n + 1):
        for comb in itertools.combinations(range(n), k):
            if _balanced_without(n, adj, set(comb)):
                return k, np.array(comb, dtype=np.int64)
    return n, np.arange(n, dtype=np.int64)  # pragma: no cover
