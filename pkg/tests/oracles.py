"""Independent slow reference computations used by the tests."""

import itertools

import numpy as np

from unitcover.cocycles import coefficient_modulus, power_table
from unitcover.linalg import kernel_mod


def span_set(gens, M, n):
    """All elements of the subgroup of (Z/M)^n generated by ``gens``."""
    seen = {tuple([0] * n)}
    frontier = list(seen)
    gens = [tuple(int(x) % M for x in g) for g in gens]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % M for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def kernel_set(A, M):
    A = np.asarray(A, dtype=np.int64)
    k = A.shape[1]
    return {v for v in itertools.product(range(M), repeat=k) if not ((A @ np.array(v)) % M).any()}


def smith_diagonal_by_minors(A):
    """d_1 d_2 ... d_k = gcd of k x k minors (small matrices only)."""
    from math import gcd
    A = [list(map(int, r)) for r in A]
    m, n = len(A), len(A[0])
    out, prev = [], 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                sub = np.array([[A[i][j] for j in cols] for i in rows], dtype=object)
                g = gcd(g, int(round(abs(_det(sub)))))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def _det(S):
    n = len(S)
    if n == 1:
        return S[0][0]
    return sum((-1) ** j * S[0][j] * _det(np.delete(np.delete(S, 0, 0), j, 1)) for j in range(n))


def dense_spaces(G, M=None):
    """Z^2 and Z_u of normalized cocycles from the full |G|^3 identity system."""
    n = G.order
    T = G.table
    M = M or coefficient_modulus(G)
    x, y, z = [a.ravel() for a in np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")]
    rows = np.zeros((n ** 3, n * n), dtype=np.int64)
    r = np.arange(n ** 3)
    for a, b, s in ((x, y, 1), (T[x, y], z, 1), (x, T[y, z], -1), (y, z, -1)):
        np.add.at(rows, (r, a * n + b), s)
    extra = np.zeros((1, n * n), dtype=np.int64)
    extra[0, 0] = 1
    P = power_table(G)
    o = G.element_orders
    un = np.zeros((n, n * n), dtype=np.int64)
    for g in range(n):
        for j in range(o[g]):
            un[g, g * n + P[g, j]] += 1
    Z2 = kernel_mod(np.vstack([rows, extra]) % M, M)
    Zu = kernel_mod(np.vstack([rows, extra, un]) % M, M)
    return Z2, Zu
