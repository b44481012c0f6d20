"""Second cohomology with coefficients in the M-th roots of unity.

A 2-cochain is stored additively: the residue k mod M stands for
exp(2 pi i k / M).  The cocycle identity reads
a(x,y) + a(xy,z) = a(x,yz) + a(y,z), and da(x,y) = z(x) + z(y) - z(xy).

Cocycles are computed in a gauge-fixed parametrization.  Pick generators
s_1..s_k and a BFS spanning tree of the right Cayley graph.  Every
normalized cocycle is cohomologous to one vanishing on the tree edges
(h, s); such a cocycle is determined by its values u on the remaining
edges, through a(g, hs) = a(g,h) + a(gh,s) - a(h,s).  The values u give a
cocycle exactly when the identity holds on the triples (x, y, s) with
(y, s) a non-tree edge.

Every unitary cocycle is then a(u) + dz for such u and some z, and the
unitary condition on a(u) + dz is c_g(u) + o(g) z(g) = 0 where
c_g(u) = sum_j a(u)(g, g^j).  The pairs (t, z), with t the coordinates of
u in a kernel basis, form a lattice P mapping onto Z_u; the unitary
coboundaries and the kernel of that map are lattices in the same small
space, so M(G) = Z_u/B_u is computed without ever forming |G|^2-dimensional
lattices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .groups import FiniteGroup, GroupError, GroupSizeError, Subgroup, quotient, small_generating_set, subgroup_as_group
from .linalg import (AbelianInvariants, FiniteQuotient, SubgroupLattice, _mod_matmul, kernel_mod, lcm, solve_mod)

SPACES_LIMIT = 128
_SEED = 0x5C0


def coefficient_modulus(G: FiniteGroup) -> int:
    """exp(G) * |G|; every unitary cocycle takes values in these roots of unity."""
    return G.exponent * G.order


# ---------------------------------------------------------------------------
# cochains


def coboundary(G: FiniteGroup, zeta, M: int) -> np.ndarray:
    z = np.asarray(zeta, dtype=np.int64) % M
    return (z[:, None] + z[None, :] - z[G.table]) % M


def power_table(G: FiniteGroup) -> np.ndarray:
    """P[g, j] = g^j for 0 <= j < exp G."""
    n, e = G.order, G.exponent
    P = np.zeros((n, e), dtype=np.int64)
    cur = np.zeros(n, dtype=np.int64)
    ar = np.arange(n)
    for j in range(e):
        P[:, j] = cur
        cur = G.table[cur, ar]
    return P


def unitary_sums(G: FiniteGroup, values: np.ndarray, M: int) -> np.ndarray:
    """s[g] = sum_{j < o(g)} a(g, g^j) mod M."""
    P = power_table(G)
    mask = np.arange(P.shape[1])[None, :] < G.element_orders[:, None]
    vals = values[np.arange(G.order)[:, None], P]
    return (vals * mask).sum(axis=1) % M


@dataclass(eq=False)
class Cocycle:
    """A 2-cochain on ``group`` with values in Z/modulus (|G| x |G| matrix)."""

    group: FiniteGroup = field(repr=False)
    modulus: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.int64)
        n = self.group.order
        if v.shape != (n, n):
            raise GroupError(f"cochain must be {n} x {n}")
        self.values = v % self.modulus

    @classmethod
    def trivial(cls, G: FiniteGroup, M: int = 1) -> "Cocycle":
        return cls(G, M, np.zeros((G.order, G.order), dtype=np.int64))

    @classmethod
    def coboundary(cls, G: FiniteGroup, zeta, M: int) -> "Cocycle":
        return cls(G, M, coboundary(G, zeta, M))

    def __call__(self, g, h) -> int:
        return int(self.values[g, h])

    def _same(self, other: "Cocycle"):
        if other.group is not self.group and other.group.digest != self.group.digest:
            raise GroupError("cocycles live on different groups")
        M = lcm(self.modulus, other.modulus)
        return self.to_modulus(M), other.to_modulus(M)

    def __add__(self, other: "Cocycle") -> "Cocycle":
        a, b = self._same(other)
        return Cocycle(self.group, a.modulus, a.values + b.values)

    def __sub__(self, other: "Cocycle") -> "Cocycle":
        a, b = self._same(other)
        return Cocycle(self.group, a.modulus, a.values - b.values)

    def __neg__(self) -> "Cocycle":
        return Cocycle(self.group, self.modulus, -self.values)

    def __mul__(self, k: int) -> "Cocycle":
        return Cocycle(self.group, self.modulus, self.values * int(k))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cocycle):
            return NotImplemented
        a, b = self._same(other)
        return bool(np.array_equal(a.values, b.values))

    def to_modulus(self, M2: int) -> "Cocycle":
        """The same cochain of roots of unity, written with modulus M2."""
        M = self.modulus
        if M2 == M:
            return self
        if M2 % M == 0:
            return Cocycle(self.group, M2, self.values * (M2 // M))
        if M % M2 == 0:
            q = M // M2
            if (self.values % q).any():
                raise GroupError(f"values are not {M2}-th roots of unity")
            return Cocycle(self.group, M2, self.values // q)
        return self.to_modulus(lcm(M, M2)).to_modulus(M2)

    def reduced(self) -> "Cocycle":
        """Rewrite with the smallest modulus (the pointwise order)."""
        return self.to_modulus(self.order())

    def order(self) -> int:
        """Order of the cochain as an element of the group of cochains."""
        g = int(np.gcd.reduce(np.append(self.values.ravel(), self.modulus)))
        return self.modulus // g

    def is_normalized(self) -> bool:
        return int(self.values[0, 0]) == 0

    def is_cocycle(self, chunk: int = 64) -> bool:
        a, T, n, M = self.values, self.group.table, self.group.order, self.modulus
        for x0 in range(0, n, chunk):
            x = np.arange(x0, min(n, x0 + chunk))[:, None, None]
            y = np.arange(n)[None, :, None]
            z = np.arange(n)[None, None, :]
            xy = T[x, y]
            lhs = a[x, y] + a[xy, z]
            rhs = a[x, T[y, z]] + a[y, z]
            if ((lhs - rhs) % M).any():
                return False
        return True

    def is_unitary(self) -> bool:
        return not unitary_sums(self.group, self.values, self.modulus).any()

    def restriction(self, H: Subgroup) -> "Cocycle":
        S, emb = subgroup_as_group(H)
        return Cocycle(S, self.modulus, self.values[np.ix_(emb, emb)])


def restriction(alpha: Cocycle, H: Subgroup) -> Cocycle:
    return alpha.restriction(H)


def inflation(gamma: Cocycle, G: FiniteGroup, projection: np.ndarray) -> Cocycle:
    """The cocycle (x, y) -> gamma(xN, yN) on G."""
    proj = np.asarray(projection)
    return Cocycle(G, gamma.modulus, gamma.values[np.ix_(proj, proj)])


def unitarize(alpha: Cocycle) -> Cocycle:
    """A unitary cocycle cohomologous to ``alpha``.

    With s(g) = sum_j a(g, g^j), subtract d(xi) where xi(g) = s(g)/o(g) is
    computed with modulus M*exp(G) (smallest non-negative root).  The
    result is returned at the original modulus when its values allow it.
    """
    G, M = alpha.group, alpha.modulus
    e = G.exponent
    big = alpha.to_modulus(M * e)
    s = unitary_sums(G, big.values, M * e)
    xi = s // G.element_orders
    beta = Cocycle(G, M * e, big.values - coboundary(G, xi, M * e))
    try:
        return beta.to_modulus(M)
    except GroupError:
        return beta


def conjugation_power_check(beta: Cocycle, x: int, g: int) -> bool:
    """o(x) * (b(x, g) - b(g, x^g)) = 0, with x^g = g^-1 x g."""
    G = beta.group
    xg = int(G.conj(x, g))
    d = int(beta.values[x, g]) - int(beta.values[g, xg])
    return (int(G.element_orders[x]) * d) % beta.modulus == 0


# ---------------------------------------------------------------------------
# gauge-fixed parametrization


class _Gauge:
    """Spanning tree data and the linear forms a(g, h) in the edge unknowns."""

    def __init__(self, G: FiniteGroup, gens: Sequence[int]):
        T, n = G.table, G.order
        k = len(gens)
        self.gens = list(gens)
        tree = np.zeros((n, k), dtype=bool)
        parent = np.full(n, -1, dtype=np.int64)
        pgen = np.full(n, -1, dtype=np.int64)
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        order = [0]
        queue = deque([0])
        while queue:
            h = queue.popleft()
            for i, s in enumerate(gens):
                hs = int(T[h, s])
                if not seen[hs]:
                    seen[hs] = True
                    tree[h, i] = True
                    parent[hs], pgen[hs] = h, i
                    order.append(hs)
                    queue.append(hs)
        if not seen.all():
            raise GroupError("generators do not generate the group")
        self.tree, self.parent, self.pgen, self.bfs = tree, parent, pgen, order
        self.edges = np.argwhere(~tree)  # rows (h, i), the unknowns
        U = len(self.edges)
        self.U = U
        eidx = np.full((n, k), -1, dtype=np.int64)
        eidx[self.edges[:, 0], self.edges[:, 1]] = np.arange(U)
        self.eidx = eidx
        forms = np.zeros((n, n, U), dtype=np.int32)
        ar = np.arange(n)
        for h in order[1:]:
            hp, i = parent[h], pgen[h]
            forms[:, h, :] = forms[:, hp, :]
            idx = eidx[T[:, hp], i]
            hit = idx >= 0
            forms[ar[hit], h, idx[hit]] += 1
        self.forms = forms
        # residual gauge: z^(i)(g) = number of s_i steps on the tree path to g
        steps = np.zeros((n, k), dtype=np.int64)
        for h in order[1:]:
            steps[h] = steps[parent[h]]
            steps[h, pgen[h]] += 1
        self.steps = steps

    def constraint_rows(self, G: FiniteGroup, edge_block: np.ndarray) -> np.ndarray:
        """Rows of the identity on (x, y, s) for all x and the given non-tree edges."""
        T, n, U = G.table, G.order, self.U
        F, eidx = self.forms, self.eidx
        rows = []
        for e in edge_block:
            y, i = int(self.edges[e, 0]), int(self.edges[e, 1])
            s = self.gens[i]
            ys = int(T[y, s])
            x = np.arange(n)
            R = F[x, y, :].astype(np.int64) - F[x, ys, :]
            tgt = eidx[T[x, y], i]
            hit = tgt >= 0
            R[x[hit], tgt[hit]] += 1
            R[:, e] -= 1
            rows.append(R)
        return np.concatenate(rows) if rows else np.zeros((0, U), dtype=np.int64)

    def cocycle_values(self, u: np.ndarray, M: int) -> np.ndarray:
        u = np.asarray(u, dtype=np.int64) % M
        return (self.forms.reshape(-1, self.U).astype(np.int64) @ u).reshape(self.forms.shape[:2]) % M

    def gauge_fix(self, values: np.ndarray, M: int) -> np.ndarray:
        """z such that values - dz vanishes on the tree edges."""
        z = np.zeros(self.forms.shape[0], dtype=np.int64)
        for h in self.bfs[1:]:
            hp, i = self.parent[h], self.pgen[h]
            s = self.gens[i]
            if hp == 0:
                z[h] = 0
            else:
                z[h] = (z[hp] + z[s] - values[hp, s]) % M
        return z

    def residual_edges(self, G: FiniteGroup, M: int) -> np.ndarray:
        """Edge values of dz^(i) for the residual gauge functions (k x U)."""
        out = np.zeros((len(self.gens), self.U), dtype=np.int64)
        for i in range(len(self.gens)):
            d = coboundary(G, self.steps[:, i], M)
            out[i] = d[self.edges[:, 0], np.array(self.gens)[self.edges[:, 1]]]
        return out % M


def _edge_kernel(G: FiniteGroup, gauge: _Gauge, M: int, chunk_rows: int = 4096) -> SubgroupLattice:
    """Kernel of the gauge-fixed cocycle system, via random compression
    checked exactly on every block of constraints."""
    U = gauge.U
    if U == 0:
        return SubgroupLattice.zero(M, 0)
    per = max(1, chunk_rows // G.order)
    blocks = [np.arange(a, min(U, a + per)) for a in range(0, U, per)]
    extra = 24
    for attempt in range(4):
        rng = np.random.default_rng(_SEED + attempt)
        k = U + extra
        acc = np.zeros((k, U), dtype=np.int64)
        for b in blocks:
            R = gauge.constraint_rows(G, b) % M
            C = rng.integers(0, M, size=(k, R.shape[0]), dtype=np.int64)
            acc = (acc + _mod_matmul(C, R, M)) % M
        ker = kernel_mod(acc, M, compress=False)
        if ker.basis.shape[0] == 0:
            return ker
        ok = True
        for b in blocks:
            R = gauge.constraint_rows(G, b) % M
            if _mod_matmul(R, ker.basis.T.copy(), M).any():
                ok = False
                break
        if ok:
            return ker
        extra *= 2
    raise RuntimeError("cocycle kernel verification failed repeatedly")  # pragma: no cover


# ---------------------------------------------------------------------------
# cocycle spaces


class CocycleSpaces:
    """Z^2, B^2, Z_u, B_u for G with coefficients in Z/M, and M(G) = Z_u/B_u.

    Internally everything lives in the lattice P of pairs (t, z): t gives
    the gauge-fixed cocycle sum_i t_i K_i (K the edge-kernel basis), z a
    0-cochain, and (t, z) stands for a(tK) + dz.
    """

    def __init__(self, G: FiniteGroup, modulus: int | None = None, limit: int = SPACES_LIMIT):
        if G.order > limit:
            raise GroupSizeError(f"cocycle spaces are computed for order <= {limit}, got {G.order}")
        self.group = G
        M = int(modulus) if modulus is not None else coefficient_modulus(G)
        self.modulus = M
        n = G.order
        self.orders = G.element_orders
        gens = small_generating_set(G) if n > 1 else []
        self.gauge = _Gauge(G, gens)
        self.edge_kernel = _edge_kernel(G, self.gauge, M)
        K = self.edge_kernel.basis
        r = K.shape[0]
        self.rank = r
        U = self.gauge.U
        # unitary functionals c_g on t: w[g] = K c_g
        P = power_table(G)
        mask = np.arange(P.shape[1])[None, :] < self.orders[:, None]
        F = self.gauge.forms
        cg = np.zeros((n, U), dtype=np.int64)
        for g in range(n):
            cols = P[g, mask[g]]
            cg[g] = F[g, cols, :].astype(np.int64).sum(axis=0)
        W = _mod_matmul(cg % M, K.T.copy(), M) if r else np.zeros((n, 0), dtype=np.int64)
        self._W = W
        scale = (M // self.orders)[:, None]
        tker = kernel_mod((scale * W) % M, M) if r else SubgroupLattice.zero(M, 0)
        dim = r + n
        self.dim = dim
        rows = []
        for t in tker.basis:
            rows.append(np.concatenate([t, self._zeta_for(t)]))
        bu_rows = np.zeros((n, dim), dtype=np.int64)
        bu_rows[np.arange(n), r + np.arange(n)] = M // self.orders
        self.P = SubgroupLattice(M, dim, np.vstack(rows + [bu_rows]) if rows else bu_rows)
        self.Q = SubgroupLattice(M, dim, bu_rows)
        # kernel of (t, z) -> a(tK) + dz: z in the residual gauge, tK = -edges(dz)
        E = self.gauge.residual_edges(G, M)
        k = E.shape[0]
        if r + k:
            A = np.concatenate([K.T, E.T], axis=1) if U else np.zeros((0, r + k), dtype=np.int64)
            if A.shape[0] == 0:
                kk = SubgroupLattice.full(M, r + k)
            else:
                kk = kernel_mod(A % M, M)
            steps = self.gauge.steps
            krow = []
            for v in kk.basis:
                t, c = v[:r], v[r:]
                z = (steps @ c) % M
                krow.append(np.concatenate([t, z]))
            self.kernel = SubgroupLattice(M, dim, np.array(krow) if krow else np.zeros((0, dim), dtype=np.int64))
        else:
            self.kernel = SubgroupLattice.zero(M, dim)
        self.multiplier = FiniteQuotient(self.P, self.Q + self.kernel)

    def _zeta_for(self, t: np.ndarray) -> np.ndarray:
        """z with a(tK) + dz unitary: z(g) = -(w_g . t)/o(g)."""
        M = self.modulus
        c = (self._W @ np.asarray(t, dtype=np.int64)) % M
        if (c % self.orders).any():
            raise GroupError("t does not admit a unitary completion")
        return (-(c // self.orders)) % M

    # -- invariants

    @property
    def multiplier_invariants(self) -> AbelianInvariants:
        return self.multiplier.invariants

    @cached_property
    def zu_exponent(self) -> int:
        return FiniteQuotient(self.P, self.kernel).invariants.exponent

    @cached_property
    def zu_invariants(self) -> AbelianInvariants:
        return FiniteQuotient(self.P, self.kernel).invariants

    @cached_property
    def bu_exponent(self) -> int:
        Q = self.Q
        return FiniteQuotient(Q, Q.intersect(self.kernel)).invariants.exponent

    # -- cochains from P-coordinates

    def cocycle(self, v) -> Cocycle:
        v = np.asarray(v, dtype=np.int64) % self.modulus
        r = self.rank
        u = (v[:r] @ self.edge_kernel.basis) % self.modulus if r else np.zeros(self.gauge.U, dtype=np.int64)
        vals = self.gauge.cocycle_values(u, self.modulus) + coboundary(self.group, v[r:], self.modulus)
        return Cocycle(self.group, self.modulus, vals)

    def coordinates_of(self, beta: Cocycle) -> np.ndarray:
        """P-coordinates (t, z) of a unitary cocycle."""
        M = self.modulus
        beta = beta.to_modulus(M)
        if not beta.is_normalized():
            raise GroupError("cocycle is not normalized")
        z = self.gauge.gauge_fix(beta.values, M)
        fixed = (beta.values - coboundary(self.group, z, M)) % M
        g = self.gauge
        u = fixed[g.edges[:, 0], np.array(g.gens, dtype=np.int64)[g.edges[:, 1]]] if g.U else np.zeros(0, dtype=np.int64)
        r = self.rank
        if r:
            t = solve_mod(self.edge_kernel.basis.T.copy(), u, M)
            if t is None:
                raise GroupError("not a cocycle")
            t = np.array(t, dtype=np.int64)
        else:
            if u.any():
                raise GroupError("not a cocycle")
            t = np.zeros(0, dtype=np.int64)
        v = np.concatenate([t, z])
        if not np.array_equal(self.cocycle(v).values, beta.values):
            raise GroupError("not a cocycle")
        return v

    def class_coordinates(self, beta: Cocycle) -> tuple[int, ...]:
        """Coordinates of [beta] in M(G) against ``generators``."""
        beta = beta.to_modulus(self.modulus) if beta.modulus != self.modulus else beta
        if not beta.is_unitary():
            beta = unitarize(beta).to_modulus(self.modulus)
        return self.multiplier.coordinates(self.coordinates_of(beta))

    def class_order(self, beta: Cocycle) -> int:
        c = self.class_coordinates(beta)
        return lcm(*(d // np.gcd(int(x), d) for x, d in zip(c, self.multiplier_invariants.factors)))

    def classes_equal(self, a: Cocycle, b: Cocycle) -> bool:
        return self.class_coordinates(a) == self.class_coordinates(b)

    @cached_property
    def generators(self) -> list[Cocycle]:
        """Unitary representatives of the invariant-factor generators of M(G)."""
        return [self.cocycle(v) for v in self.multiplier.generators]

    def representative(self, coords: Sequence[int]) -> Cocycle:
        v = np.zeros(self.dim, dtype=np.int64)
        for c, g in zip(coords, self.multiplier.generators):
            v = (v + int(c) * np.asarray(g, dtype=np.int64)) % self.modulus
        return self.cocycle(v)

    def zu_generators(self) -> list[Cocycle]:
        return [self.cocycle(v) for v in self.P.basis]

    def bu_generators(self) -> list[Cocycle]:
        return [self.cocycle(v) for v in self.Q.basis]

    # -- full coordinate lattices (|G|^2 dimensional; small groups only)

    def _flat_lattice(self, vectors) -> SubgroupLattice:
        n = self.group.order
        rows = [np.asarray(v, dtype=np.int64).ravel() for v in vectors]
        return SubgroupLattice(self.modulus, n * n, np.array(rows) if rows else np.zeros((0, n * n), dtype=np.int64))

    @cached_property
    def B2(self) -> SubgroupLattice:
        G, M, n = self.group, self.modulus, self.group.order
        return self._flat_lattice(coboundary(G, np.eye(n, dtype=np.int64)[g], M) for g in range(1, n))

    @cached_property
    def Z2(self) -> SubgroupLattice:
        M = self.modulus
        gk = [self.gauge.cocycle_values(u, M) for u in self.edge_kernel.basis]
        return self._flat_lattice(gk) + self.B2

    @cached_property
    def Zu(self) -> SubgroupLattice:
        return self._flat_lattice(c.values for c in self.zu_generators())

    @cached_property
    def Bu(self) -> SubgroupLattice:
        return self._flat_lattice(c.values for c in self.bu_generators())


_SPACES_CACHE: dict = {}


def compute_spaces(G: FiniteGroup, modulus: int | None = None, limit: int = SPACES_LIMIT) -> CocycleSpaces:
    key = (G.digest, modulus)
    sp = _SPACES_CACHE.get(key)
    if sp is None or sp.group is not G and sp.group.digest != G.digest:
        sp = CocycleSpaces(G, modulus, limit)
        if len(_SPACES_CACHE) > 64:
            _SPACES_CACHE.clear()
        _SPACES_CACHE[key] = sp
    return sp


def class_order(spaces: CocycleSpaces, beta: Cocycle) -> int:
    return spaces.class_order(beta)


def classes_equal(spaces: CocycleSpaces, a: Cocycle, b: Cocycle) -> bool:
    return spaces.classes_equal(a, b)


def class_decompose(spaces: CocycleSpaces, beta: Cocycle) -> tuple[int, ...]:
    return spaces.class_coordinates(beta)


def inflation_test(alpha: Cocycle, N: Subgroup):
    """A cocycle gamma on G/N with [gamma*] = [alpha], or None when the
    hypotheses (alpha trivial on N x N, alpha(n,g) = alpha(g, n^g)) fail.

    Returns (gamma, Q, projection).
    """
    G, M = alpha.group, alpha.modulus
    a = alpha.values
    nidx = np.array(N.members)
    if a[np.ix_(nidx, nidx)].any():
        return None
    allg = np.arange(G.order)
    conj = G.conj(nidx[:, None], allg[None, :])
    if ((a[nidx[:, None], allg[None, :]] - a[allg[None, :], conj]) % M).any():
        return None
    Q, proj = quotient(G, N)
    for MM in (M, M * G.exponent):
        zeta = _solve_coset_constant(G, alpha.to_modulus(MM).values, N, MM)
        if zeta is not None:
            beta = (alpha.to_modulus(MM).values - coboundary(G, zeta, MM)) % MM
            reps = np.array([int(np.flatnonzero(proj == q)[0]) for q in range(Q.order)])
            gamma = Cocycle(Q, MM, beta[np.ix_(reps, reps)])
            try:
                gamma = gamma.to_modulus(M)
            except GroupError:
                pass
            return gamma, Q, proj
    raise RuntimeError("inflation hypotheses hold but no witness was found")


def _solve_coset_constant(G: FiniteGroup, a: np.ndarray, N: Subgroup, M: int):
    """z with a - dz constant on pairs of cosets of N."""
    T, n = G.table, G.order
    ngens = small_generating_set(G, N) if N.order > 1 else []
    x = np.repeat(np.arange(n), n)
    y = np.tile(np.arange(n), n)
    rows, rhs = [], []
    for m in ngens:
        for (p1, q1) in ((T[x, m], y), (x, T[y, m])):
            # (a - dz)(p1, q1) = (a - dz)(x, y)
            R = np.zeros((n * n, n), dtype=np.int64)
            for (u, v, sgn) in ((p1, q1, 1), (x, y, -1)):
                np.add.at(R, (np.arange(n * n), u), sgn)
                np.add.at(R, (np.arange(n * n), v), sgn)
                np.add.at(R, (np.arange(n * n), T[u, v]), -sgn)
            rows.append(R)
            rhs.append(a[p1, q1] - a[x, y])
    if not rows:
        return np.zeros(n, dtype=np.int64)
    A = np.concatenate(rows) % M
    b = np.concatenate(rhs) % M
    keep = A.any(axis=1) | (b != 0)
    A, b = A[keep], b[keep]
    if A.shape[0] == 0:
        return np.zeros(n, dtype=np.int64)
    A, uniq = np.unique(np.concatenate([A, b[:, None]], axis=1), axis=0, return_index=True)
    b = A[:, -1]
    A = A[:, :-1]
    sol = solve_mod(A, b, M)
    return None if sol is None else np.array(sol, dtype=np.int64)
