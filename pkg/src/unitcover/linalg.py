"""Exact integer-lattice linear algebra.

Subgroups of (Z/M)^n are handled as integer lattices L with
M*Z^n <= L <= Z^n.  Such a lattice is stored by the nontrivial rows of
its Hermite normal form: the rows whose pivot is a proper divisor of M.
The remaining HNF rows are exactly M*e_j for the other columns, so they
are left implicit.  With entries right of each pivot reduced modulo the
pivot below them (modulo M in non-pivot columns) the form is canonical.

Everything is exact.  Dense work is done on int64 arrays whenever the
modulus is small enough that M**2 cannot overflow, otherwise on object
arrays of Python integers.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "AbelianInvariants",
    "IntMatrix",
    "SubgroupLattice",
    "FiniteQuotient",
    "xgcd",
    "smith_normal_form",
    "smith_invariants",
    "invariants_from_diagonal",
    "hnf_mod",
    "kernel_mod",
    "image_mod",
    "solve_mod",
    "quotient_invariants",
    "dual_invariants",
    "perp",
    "sparse_cokernel_invariants",
]

_INT64_SAFE = 1 << 30


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b) if a and b else 0, values, 1)


def _dtype(M: int):
    return np.int64 if M < _INT64_SAFE else object


def _as_array(rows, ncols: int, M: int) -> np.ndarray:
    dt = _dtype(M)
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        A = rows.astype(dt, copy=True)
    else:
        rows = list(rows)
        if not rows:
            return np.zeros((0, ncols), dtype=dt)
        A = np.array([list(r) for r in rows], dtype=dt)
    if A.size == 0:
        return np.zeros((A.shape[0] if A.ndim == 2 else 0, ncols), dtype=dt)
    return A.reshape(-1, ncols) % M


def _unit_scaling(a: int, M: int) -> tuple[int, int]:
    """Return (u, g): u a unit mod M with u*a == g (mod M), g = gcd(a, M)."""
    g = math.gcd(a, M)
    m = M // g
    if m == 1:
        return 1, g
    u = pow((a // g) % m, -1, m)
    while math.gcd(u, M) != 1:
        u += m
    return u, g


# ---------------------------------------------------------------------------
# AbelianInvariants


def invariants_from_diagonal(diag: Iterable[int]) -> list[int]:
    """Invariant factors d1 | d2 | ... of the direct sum of the C_d given.

    Entries 0 stand for infinite cyclic summands and are kept at the end.
    Entries 1 are dropped.
    """
    zeros = 0
    by_prime: dict[int, list[int]] = {}
    for d in diag:
        d = abs(int(d))
        if d == 0:
            zeros += 1
            continue
        for p, e in _factorint(d).items():
            by_prime.setdefault(p, []).append(p ** e)
    length = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * length
    for powers in by_prime.values():
        powers.sort()
        for i, q in enumerate(powers):
            factors[length - len(powers) + i] *= q
    return [f for f in factors if f != 1] + [0] * zeros


def _factorint(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors d1 | d2 | ... | dn of a finite abelian group."""

    factors: tuple[int, ...] = ()

    def __post_init__(self):
        f = tuple(int(d) for d in self.factors)
        object.__setattr__(self, "factors", f)
        for d in f:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for a, b in zip(f, f[1:]):
            if b % a:
                raise ValueError(f"invariant factors {f} do not form a division chain")

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "AbelianInvariants":
        return cls(tuple(invariants_from_diagonal(orders)))

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def exponent(self) -> int:
        return self.factors[-1] if self.factors else 1

    @property
    def rank(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        if not self.factors:
            return "trivial"
        return " x ".join(f"C{d}" for d in self.factors)


# ---------------------------------------------------------------------------
# Sparse integer matrix


class IntMatrix:
    """Integer matrix with dict-of-rows storage.

    Small matrices are converted to dense form on demand; the sparse form
    only matters for the bar-resolution boundary maps.
    """

    DENSE_LIMIT = 10_000

    def __init__(self, rows: int, cols: int, entries: dict | None = None):
        self.rows = rows
        self.cols = cols
        self._data: dict[int, dict[int, int]] = {}
        for (i, j), v in (entries or {}).items():
            self[i, j] = v

    @classmethod
    def from_dense(cls, A: Sequence[Sequence[int]]) -> "IntMatrix":
        A = [list(map(int, r)) for r in A]
        rows = len(A)
        cols = len(A[0]) if rows else 0
        out = cls(rows, cols)
        for i, r in enumerate(A):
            if len(r) != cols:
                raise ValueError("ragged matrix")
            for j, v in enumerate(r):
                if v:
                    out._data.setdefault(i, {})[j] = v
        return out

    def __getitem__(self, key) -> int:
        i, j = key
        self._check(i, j)
        return self._data.get(i, {}).get(j, 0)

    def __setitem__(self, key, value: int):
        i, j = key
        self._check(i, j)
        value = int(value)
        row = self._data.setdefault(i, {})
        if value:
            row[j] = value
        else:
            row.pop(j, None)

    def add(self, i: int, j: int, value: int):
        self[i, j] = self[i, j] + value

    def _check(self, i, j):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {self.rows}x{self.cols}")

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._data.values())

    def columns(self) -> list[dict[int, int]]:
        cols: list[dict[int, int]] = [dict() for _ in range(self.cols)]
        for i, row in self._data.items():
            for j, v in row.items():
                cols[j][i] = v
        return cols

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, row in self._data.items():
            for j, v in row.items():
                out[i][j] = v
        return out

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = IntMatrix(self.rows, other.cols)
        for i, row in self._data.items():
            acc: dict[int, int] = {}
            for k, v in row.items():
                for j, w in other._data.get(k, {}).items():
                    acc[j] = acc.get(j, 0) + v * w
            out._data[i] = {j: v for j, v in acc.items() if v}
        return out

    def is_zero(self) -> bool:
        return not any(self._data.values())

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


# ---------------------------------------------------------------------------
# Smith normal form over Z (small dense matrices, Python integers)


def smith_normal_form(A, with_inverse: bool = False):
    """Smith normal form D = U*A*V.

    Returns (D, U, V) as lists of lists, or (D, U, V, Vinv) when
    ``with_inverse`` is set.  D is diagonal with d1 | d2 | ... and
    non-negative entries; U and V are unimodular.
    """
    if isinstance(A, IntMatrix):
        A = A.to_dense()
    D = [list(map(int, r)) for r in A]
    m = len(D)
    n = len(D[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    Vinv = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(i, k, q):  # row_i -= q*row_k
        if q:
            Di, Dk = D[i], D[k]
            for j in range(n):
                if Dk[j]:
                    Di[j] -= q * Dk[j]
            Ui, Uk = U[i], U[k]
            for j in range(m):
                if Uk[j]:
                    Ui[j] -= q * Uk[j]

    def col_op(j, k, q):  # col_j -= q*col_k
        if q:
            for r in D:
                if r[k]:
                    r[j] -= q * r[k]
            for r in V:
                if r[k]:
                    r[j] -= q * r[k]
            Rk, Rj = Vinv[k], Vinv[j]
            for c in range(n):
                if Rj[c]:
                    Rk[c] += q * Rj[c]

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for r in D:
            r[j], r[k] = r[k], r[j]
        for r in V:
            r[j], r[k] = r[k], r[j]
        Vinv[j], Vinv[k] = Vinv[k], Vinv[j]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                Di = D[i]
                for j in range(t, n):
                    v = Di[j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
                        if best[0] == 1:
                            break
                if best and best[0] == 1:
                    break
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    row_op(i, t, D[i][t] // p)
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j]:
                    col_op(j, t, D[t][j] // p)
                    if D[t][j]:
                        clean = False
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) if any(D[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            row_op(t, bad, -1)
        if t < m and t < n and D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    if with_inverse:
        return D, U, V, Vinv
    return D, U, V


def smith_invariants(A) -> list[int]:
    """Diagonal of the Smith form (including 1s and 0s)."""
    D = smith_normal_form(A)[0]
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


# ---------------------------------------------------------------------------
# Hermite normal form of lattices containing M*Z^n


def _reduce_column(A: np.ndarray, c: int, M: int):
    """Bring column c of A to a single pivot row.

    Returns (pivot_row, saturation_row, rest) where rest has zeros in
    column c.  Rows are residues mod M.
    """
    col = A[:, c]
    idx = np.flatnonzero(col)
    vals = [int(v) for v in col[idx]]
    gs = [math.gcd(v, M) for v in vals]
    k = int(np.argmin(gs))
    g = gs[k]
    if any(v % g for v in vals):
        # composite modulus without a dividing entry: pairwise xgcd
        p = A[idx[k]].copy()
        others = []
        for t, i in enumerate(idx):
            if t == k:
                continue
            r = A[i].copy()
            a, b = int(p[c]), int(r[c])
            if b % a == 0:
                r = (r - (b // a) * p) % M
            else:
                gg, x, y = xgcd(a, b)
                p, r = (x * p + y * r) % M, ((a // gg) * r - (b // gg) * p) % M
            others.append(r)
        rest_mask = np.ones(A.shape[0], dtype=bool)
        rest_mask[idx] = False
        rest = [A[rest_mask]] + ([np.array(others, dtype=A.dtype)] if others else [])
        A = np.concatenate(rest, axis=0) if rest else A[:0]
        u, g = _unit_scaling(int(p[c]), M)
    else:
        p = A[idx[k]].copy()
        u, g = _unit_scaling(int(p[c]), M)
        rest_mask = np.ones(A.shape[0], dtype=bool)
        rest_mask[idx[k]] = False
        A = A[rest_mask]
        p = (u * p) % M
        u = 1
        q = A[:, c] // g
        nz = np.flatnonzero(q)
        if nz.size:
            A[nz] = (A[nz] - np.outer(q[nz], p)) % M
    if u != 1:
        p = (u * p) % M
    sat = ((M // g) * p) % M
    return p, sat, A


def hnf_mod(rows, M: int, ncols: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Canonical compressed HNF of the lattice spanned by ``rows`` and M*Z^n.

    Returns (basis, pivots): basis rows are the HNF rows whose pivot
    entry is < M, pivots their column indices.
    """
    if M < 1:
        raise ValueError("modulus must be positive")
    if ncols is None:
        if isinstance(rows, np.ndarray):
            ncols = rows.shape[1]
        else:
            rows = [list(r) for r in rows]
            if not rows:
                raise ValueError("ncols required for empty input")
            ncols = len(rows[0])
    A = _as_array(rows, ncols, M)
    A = A[np.any(A != 0, axis=1)] if A.size else A[:0]
    basis = []
    pivots = []
    start = 0
    while A.shape[0]:
        nzcols = np.any(A[:, start:] != 0, axis=0)
        if not nzcols.any():
            break
        c = start + int(np.argmax(nzcols))
        p, sat, A = _reduce_column(A, c, M)
        basis.append(p)
        pivots.append(c)
        if sat.any():
            A = np.concatenate([A, sat[None, :]], axis=0)
        A = A[np.any(A != 0, axis=1)]
        start = c + 1
    if not basis:
        return np.zeros((0, ncols), dtype=_dtype(M)), []
    B = np.array(basis, dtype=_dtype(M))
    for k, c in enumerate(pivots):
        d = int(B[k, c])
        if k:
            q = B[:k, c] // d
            nz = np.flatnonzero(q)
            if nz.size:
                B[nz] = (B[nz] - np.outer(q[nz], B[k])) % M
    return B, pivots


# ---------------------------------------------------------------------------
# SubgroupLattice


class SubgroupLattice:
    """A subgroup of (Z/M)^n, i.e. a lattice between M*Z^n and Z^n."""

    def __init__(self, modulus: int, dim: int, generators=(), _basis=None):
        self.modulus = int(modulus)
        self.dim = int(dim)
        if _basis is not None:
            self.basis, self.pivots = _basis
        else:
            self.basis, self.pivots = hnf_mod(generators, self.modulus, self.dim)

    @classmethod
    def full(cls, modulus: int, dim: int) -> "SubgroupLattice":
        return cls(modulus, dim, np.eye(dim, dtype=np.int64) if dim else ())

    @classmethod
    def zero(cls, modulus: int, dim: int) -> "SubgroupLattice":
        return cls(modulus, dim, ())

    # -- basic properties

    @property
    def pivot_entries(self) -> list[int]:
        return [int(self.basis[k, c]) for k, c in enumerate(self.pivots)]

    def order(self) -> int:
        """Order of L / M*Z^n."""
        return math.prod(self.modulus // d for d in self.pivot_entries)

    def index(self) -> int:
        """Index of L in Z^n."""
        return self.modulus ** (self.dim - len(self.pivots)) * math.prod(self.pivot_entries)

    def exponent(self) -> int:
        """Exponent of L / M*Z^n."""
        out = 1
        for row in self.basis:
            g = math.gcd(self.modulus, *[int(x) for x in row])
            out = lcm(out, self.modulus // g)
        return out

    def hnf_basis(self) -> list[list[int]]:
        """Full square HNF basis including the implicit M*e_j rows."""
        out = []
        k = 0
        for j in range(self.dim):
            if k < len(self.pivots) and self.pivots[k] == j:
                out.append([int(x) for x in self.basis[k]])
                k += 1
            else:
                out.append([self.modulus if i == j else 0 for i in range(self.dim)])
        return out

    def __eq__(self, other):
        if not isinstance(other, SubgroupLattice):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.dim == other.dim
            and self.pivots == other.pivots
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.modulus, self.dim, tuple(self.pivots), self.basis.tobytes()))

    def __repr__(self):
        return f"SubgroupLattice(M={self.modulus}, dim={self.dim}, order={self.order()})"

    def _compatible(self, other: "SubgroupLattice"):
        if self.modulus != other.modulus:
            raise ValueError(f"incompatible moduli {self.modulus} and {other.modulus}")
        if self.dim != other.dim:
            raise ValueError(f"incompatible dimensions {self.dim} and {other.dim}")

    # -- membership and coordinates

    def reduce(self, vectors) -> tuple[np.ndarray, np.ndarray]:
        """Reduce row vectors against the basis.

        Returns (coefficients, remainders); remainder rows are zero exactly
        for members, in which case v == coefficients @ basis (mod M).
        """
        M = self.modulus
        V = _as_array(vectors, self.dim, M)
        C = np.zeros((V.shape[0], len(self.pivots)), dtype=V.dtype)
        for k, c in enumerate(self.pivots):
            d = int(self.basis[k, c])
            q = V[:, c] // d
            C[:, k] = q
            nz = np.flatnonzero(q)
            if nz.size:
                V[nz] = (V[nz] - np.outer(q[nz], self.basis[k])) % M
        return C, V

    def contains(self, v) -> bool:
        _, R = self.reduce([v])
        return not R.any()

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def contains_all(self, vectors) -> bool:
        _, R = self.reduce(vectors)
        return not R.any()

    def issubset(self, other: "SubgroupLattice") -> bool:
        self._compatible(other)
        return other.contains_all(self.basis) if len(self.pivots) else True

    # -- lattice operations

    def __add__(self, other: "SubgroupLattice") -> "SubgroupLattice":
        self._compatible(other)
        rows = np.concatenate([self.basis, other.basis.astype(self.basis.dtype)], axis=0)
        return SubgroupLattice(self.modulus, self.dim, rows)

    sum = __add__

    def intersect(self, other: "SubgroupLattice") -> "SubgroupLattice":
        self._compatible(other)
        n, M = self.dim, self.modulus
        dt = _dtype(M)
        top = np.concatenate([self.basis, self.basis], axis=1).astype(dt)
        bottom = np.concatenate([other.basis.astype(dt), np.zeros_like(other.basis, dtype=dt)], axis=1)
        B, piv = hnf_mod(np.concatenate([top, bottom], axis=0), M, 2 * n)
        keep = [k for k, c in enumerate(piv) if c >= n]
        return SubgroupLattice(M, n, B[keep, n:] if keep else np.zeros((0, n), dtype=dt))

    __and__ = intersect

    def scaled(self, k: int) -> "SubgroupLattice":
        return SubgroupLattice(self.modulus, self.dim, (k * self.basis) % self.modulus)

    def relations(self) -> "SubgroupLattice":
        """Lattice of x in Z^r with x @ basis == 0 (mod M)."""
        return kernel_mod(self.basis.T, self.modulus)


def kernel_mod(A, M: int, compress: bool = True) -> SubgroupLattice:
    """All x with A @ x == 0 (mod M), as a SubgroupLattice of (Z/M)^k.

    ``A`` is an m x k matrix.  Tall systems are first compressed by seeded
    random row combinations; the kernel of the compressed system always
    contains the true kernel, and equality is then verified on every
    generator, falling back to the full system if verification fails.
    """
    A = np.asarray(A)
    if A.ndim != 2:
        raise ValueError("matrix expected")
    m, k = A.shape
    dt = _dtype(M)
    if k == 0:
        return SubgroupLattice(M, 0, ())
    A = A.astype(dt) % M if A.dtype != object else (A % M).astype(dt)
    if compress and m > 2 * k + 32:
        rng = np.random.default_rng(0x5C0)
        small = _mod_matmul(rng.integers(0, M, size=(k + 24, m)), A, M)
        ker = kernel_mod(small, M, compress=False)
        if not ker.basis.shape[0] or not _mod_matmul(A, ker.basis.T, M).any():
            return ker
    aug = np.concatenate([A.T, np.eye(k, dtype=dt)], axis=1)
    B, piv = hnf_mod(aug, M, m + k)
    keep = [i for i, c in enumerate(piv) if c >= m]
    return SubgroupLattice(M, k, B[keep, m:] if keep else np.zeros((0, k), dtype=dt))


def _mod_matmul(A: np.ndarray, B: np.ndarray, M: int) -> np.ndarray:
    """Exact (A @ B) mod M for residue matrices."""
    A = np.asarray(A) % M
    B = np.asarray(B) % M
    if A.dtype == object or B.dtype == object or M >= _INT64_SAFE:
        return (A.astype(object) @ B.astype(object)) % M
    inner = A.shape[1]
    step = max(1, int((2 ** 52) // max(1, (M - 1) ** 2)))
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for s in range(0, inner, step):
        prod = A[:, s:s + step].astype(np.float64) @ B[s:s + step].astype(np.float64)
        out = (out + np.round(prod).astype(np.int64) % M) % M
    return out


def image_mod(A, M: int) -> SubgroupLattice:
    """Column span of the m x k matrix A inside (Z/M)^m."""
    A = np.asarray(A)
    return SubgroupLattice(M, A.shape[0], A.T % M)


def solve_mod(A, b, M: int):
    """Some x with A @ x == b (mod M), or None."""
    A = np.asarray(A)
    m, k = A.shape
    dt = _dtype(M)
    A = (A % M).astype(dt)
    b = (np.asarray(b).reshape(m) % M).astype(dt)
    rows = np.zeros((k + 1, m + 1 + k), dtype=dt)
    rows[:k, :m] = A.T
    rows[:k, m + 1:] = np.eye(k, dtype=dt)
    rows[k, :m] = (-b) % M
    rows[k, m] = 1
    B, piv = hnf_mod(rows, M, m + 1 + k)
    for i, c in enumerate(piv):
        if c == m:
            if int(B[i, c]) != 1:
                return None
            return [int(x) for x in B[i, m + 1:]]
        if c > m:
            break
    return None


# ---------------------------------------------------------------------------
# Quotients


class FiniteQuotient:
    """The finite abelian group L_big / L_small with explicit generators.

    ``invariants`` are the invariant factors, ``generators`` ambient
    vectors whose classes form the matching cyclic basis, and
    ``coordinates(v)`` expresses a member of L_big in that basis.
    """

    def __init__(self, big: SubgroupLattice, small: SubgroupLattice):
        big._compatible(small)
        self.big, self.small = big, small
        M = big.modulus
        r = len(big.pivots)
        self._r = r
        dt = _dtype(M)
        if small.basis.shape[0]:
            coeffs, rem = big.reduce(small.basis)
            if rem.any():
                raise ValueError("L_small is not contained in L_big")
        else:
            coeffs = np.zeros((0, r), dtype=dt)
        rel_rows = [coeffs]
        if r:
            rel_rows.append(big.relations().basis)
        rel = np.concatenate(rel_rows, axis=0) if r else np.zeros((0, 0), dtype=dt)
        R, piv = hnf_mod(rel, M, r) if r else (np.zeros((0, 0), dtype=dt), [])
        self._R, self._rpiv = R, piv
        unit_rows = [i for i, c in enumerate(piv) if int(R[i, c]) == 1]
        self._unit = [(piv[i], R[i]) for i in unit_rows]
        unit_cols = {piv[i] for i in unit_rows}
        self._keep = [j for j in range(r) if j not in unit_cols]
        keep = self._keep
        small_rel = [[int(R[i, j]) for j in keep] for i in range(len(piv)) if i not in unit_rows]
        small_rel += [[M if j == t else 0 for j in range(len(keep))] for t in range(len(keep))]
        if keep:
            D, _U, V, Vinv = smith_normal_form(small_rel, with_inverse=True)
            diag = [D[i][i] for i in range(len(keep))]
        else:
            V, Vinv, diag = [], [], []
        self._V = V
        self._slots = [i for i, d in enumerate(diag) if d != 1]
        self.invariants = AbelianInvariants(tuple(diag[i] for i in self._slots))
        gens = []
        for i in self._slots:
            x = np.zeros(r, dtype=object)
            for t, j in enumerate(keep):
                x[j] = Vinv[i][t]
            gens.append([int(v) % M for v in (x @ big.basis.astype(object))] if r else [])
        self.generators = np.array(gens, dtype=dt).reshape(len(gens), big.dim) % M

    @property
    def order(self) -> int:
        return self.invariants.order

    def coordinates(self, v) -> tuple[int, ...]:
        C, rem = self.big.reduce([v])
        if rem.any():
            raise ValueError("vector is not in L_big")
        x = [int(c) for c in C[0]]
        for c, row in self._unit:
            q = x[c]
            if q:
                for j in range(c, self._r):
                    x[j] -= q * int(row[j])
        y = [x[j] for j in self._keep]
        out = []
        for slot, d in zip(self._slots, self.invariants.factors):
            out.append(sum(y[t] * self._V[t][slot] for t in range(len(y))) % d)
        return tuple(out)


def quotient_invariants(big: SubgroupLattice, small: SubgroupLattice) -> AbelianInvariants:
    return FiniteQuotient(big, small).invariants


# ---------------------------------------------------------------------------
# Duality


def dual_invariants(A: AbelianInvariants) -> AbelianInvariants:
    """The character group of a finite abelian group has the same invariants."""
    return AbelianInvariants(tuple(A.factors))


def perp(orders: Sequence[int], K_generators: Sequence[Sequence[int]]) -> SubgroupLattice:
    """K^perp inside the dual of H = (+) Z/d_i.

    ``K_generators`` are coordinate vectors of elements of H.  Characters
    are coordinate vectors c with chi(x) = sum c_i x_i / d_i; the result is
    returned embedded in (Z/L)^k via c_i -> c_i * L/d_i, L = exp H.
    """
    orders = [int(d) for d in orders]
    k = len(orders)
    L = lcm(*orders) if orders else 1
    scale = [L // d for d in orders]
    K_generators = [list(g) for g in K_generators]
    if K_generators and k:
        A = np.array([[g[i] * scale[i] for i in range(k)] for g in K_generators], dtype=object)
        ker = kernel_mod(A, L, compress=False)
        rows = ker.basis
    else:
        rows = np.eye(k, dtype=np.int64)
    emb = [[int(r[i]) * scale[i] % L for i in range(k)] for r in rows]
    return SubgroupLattice(L, k, emb if emb else np.zeros((0, k), dtype=np.int64))


# ---------------------------------------------------------------------------
# Sparse cokernel invariants


def sparse_cokernel_invariants(columns: list[dict[int, int]], nrows: int, modulus: int) -> list[int]:
    """Invariant factors (taken mod ``modulus``) of Z^nrows / span(columns).

    Unit pivots are eliminated first, picking short columns and sparse rows
    to limit fill-in; the leftover block goes through the dense routines.
    Entries equal to ``modulus`` stand for free (or too large) summands.
    """
    m = modulus
    cols: dict[int, dict[int, int]] = {}
    row_index: list[set[int]] = [set() for _ in range(nrows)]
    for j, col in enumerate(columns):
        c = {i: v % m for i, v in col.items() if v % m}
        if c:
            cols[j] = c
            for i in c:
                row_index[i].add(j)
    alive_rows = set(range(nrows))
    heap = [(len(c), j) for j, c in cols.items()]
    heapq.heapify(heap)
    stalled: dict[int, int] = {}
    while heap:
        size, j = heapq.heappop(heap)
        c = cols.get(j)
        if c is None or len(c) != size:
            continue
        best = None
        for i, v in c.items():
            if math.gcd(v, m) == 1:
                deg = len(row_index[i])
                if best is None or deg < best[0]:
                    best = (deg, i)
        if best is None:
            stalled[j] = size
            continue
        i = best[1]
        inv = pow(c[i], -1, m)
        for jj in list(row_index[i]):
            if jj == j:
                continue
            other = cols[jj]
            f = other[i] * inv % m
            for r, v in c.items():
                nv = (other.get(r, 0) - f * v) % m
                if nv:
                    if r not in other:
                        row_index[r].add(jj)
                    other[r] = nv
                elif r in other:
                    del other[r]
                    row_index[r].discard(jj)
            if other:
                heapq.heappush(heap, (len(other), jj))
                stalled.pop(jj, None)
            else:
                del cols[jj]
                stalled.pop(jj, None)
        for r in c:
            row_index[r].discard(j)
        del cols[j]
        alive_rows.discard(i)
    rows = sorted(alive_rows)
    pos = {r: t for t, r in enumerate(rows)}
    if not rows:
        return []
    dense = np.zeros((len(cols), len(rows)), dtype=_dtype(m))
    for t, c in enumerate(cols.values()):
        for r, v in c.items():
            dense[t, pos[r]] = v
    lat = SubgroupLattice(m, len(rows), dense)
    quo = FiniteQuotient(SubgroupLattice.full(m, len(rows)), lat)
    return list(quo.invariants.factors)
