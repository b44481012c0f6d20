"""Central extensions 1 -> A -> Gamma -> G -> 1 given by Cayley tables.

The omega-product over a finite group H of cocycles lives on pairs
(g, chi) with g in G and chi in the character group of H, multiplied by
(g, chi)(h, psi) = (gh, omega(g,h) chi psi) where omega(g,h)(a) = a(g,h).
Characters are written additively in the dual of a cyclic decomposition
H = (+) <a_j>, a_j of order d_j: chi = sum c_j a_j^, a_j^(a_i) = delta_ij/d_j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .cocycles import Cocycle, CocycleSpaces, coboundary, compute_spaces, inflation
from .groups import (MAX_ORDER, AbelianBasis, FiniteGroup, GroupError, GroupSizeError, Subgroup, abelian_basis,
                     center, derived_subgroup, find_isomorphism, is_normal, quotient, subgroup_generated)
from .linalg import AbelianInvariants, FiniteQuotient, SubgroupLattice, lcm, perp, solve_mod
from .multiplier import standard_map_image


@dataclass(eq=False)
class CentralExtension:
    """Gamma with projection onto ``base``, central kernel A and a section."""

    total: FiniteGroup
    base: FiniteGroup
    projection: np.ndarray
    kernel: Subgroup
    section: np.ndarray
    label: str = ""
    kernel_basis: AbelianBasis = field(default=None, repr=False)

    def __post_init__(self):
        self.projection = np.asarray(self.projection, dtype=np.int64)
        self.section = np.asarray(self.section, dtype=np.int64)
        if self.kernel_basis is None:
            self.kernel_basis = abelian_basis(self.total, self.kernel)

    @property
    def kernel_invariants(self) -> AbelianInvariants:
        return self.kernel_basis.invariants

    @cached_property
    def omega_elements(self) -> np.ndarray:
        """omega(g, h) = phi(g) phi(h) phi(gh)^-1 as elements of A."""
        Tg, Tb = self.total.table, self.base.table
        phi = self.section
        inv = self.total.inverse
        return Tg[Tg[phi[:, None], phi[None, :]], inv[phi[Tb]]]

    @cached_property
    def omega_coordinates(self) -> np.ndarray:
        """omega(g, h) in the cyclic basis of A, shape (n, n, k)."""
        coords = self.kernel_basis.coords
        om = self.omega_elements
        k = len(self.kernel_invariants.factors)
        out = np.zeros(om.shape + (k,), dtype=np.int64)
        lookup = np.zeros((self.total.order, k), dtype=np.int64)
        for a, c in coords.items():
            lookup[a] = c
        out[...] = lookup[om]
        return out

    def dual_cocycles(self) -> list[Cocycle]:
        """lambda_j o omega for the dual basis lambda_j of A^, with modulus d_j."""
        oc = self.omega_coordinates
        return [Cocycle(self.base, d, oc[:, :, j]) for j, d in enumerate(self.kernel_invariants.factors)]

    def validate(self):
        """Check the defining properties element-wise; raises GroupError."""
        Gm, G = self.total, self.base
        T, Tb = Gm.table, G.table
        pi, phi = self.projection, self.section
        if not np.array_equal(pi[T], Tb[pi[:, None], pi[None, :]]):
            raise GroupError("projection is not a homomorphism")
        if len(set(pi.tolist())) != G.order:
            raise GroupError("projection is not onto")
        if set(np.flatnonzero(pi == 0).tolist()) != set(self.kernel.members):
            raise GroupError("kernel of the projection differs from A")
        if not self.kernel.issubset(center(Gm)):
            raise GroupError("A is not central")
        if not np.array_equal(pi[phi], np.arange(G.order)):
            raise GroupError("section is not a right inverse of the projection")
        om = self.omega_elements
        if not self.kernel.mask[om].all():
            raise GroupError("section cocycle leaves A")
        # phi(g)^{o(g)} = prod_j omega(g, g^j)
        for g in range(G.order):
            o = int(G.element_orders[g])
            prod, gj = 0, 0
            for _ in range(o):
                prod = int(T[prod, om[g, gj]])
                gj = int(Tb[gj, g])
            if Gm.power(int(phi[g]), o) != prod:
                raise GroupError("power identity for the section fails")
        return self

    def conjugation_identity(self) -> bool:
        """phi(x)^phi(y) = omega(x,y) omega(y,x^y)^-1 phi(x^y) for all x, y."""
        Gm, G = self.total, self.base
        T, inv = Gm.table, Gm.inverse
        phi, om = self.section, self.omega_elements
        n = G.order
        x = np.arange(n)[:, None]
        y = np.arange(n)[None, :]
        lhs = Gm.conj(phi[x], phi[y])
        xy = G.conj(x, y)
        rhs = T[T[om[x, y], inv[om[y, xy]]], phi[xy]]
        return bool(np.array_equal(lhs, rhs))

    def to_spec(self) -> dict:
        """Group-definition document with projection/section/kernel annotations."""
        return {
            "kind": "cayley",
            "table": self.total.table.tolist(),
            "extension": {
                "base": {"kind": "cayley", "table": self.base.table.tolist()},
                "projection": self.projection.tolist(),
                "section": self.section.tolist(),
                "kernel": list(self.kernel.members),
                "kernel_invariants": list(self.kernel_invariants.factors),
            },
        }


def extension_from_quotient(total: FiniteGroup, kernel: Subgroup, base: FiniteGroup | None = None,
                            label: str = "") -> CentralExtension:
    """Gamma -> Gamma/A, identified with ``base`` when given (via an isomorphism)."""
    Q, proj = quotient(total, kernel)
    if base is None:
        base, pi = Q, proj
    else:
        iso = find_isomorphism(Q, base)
        if iso is None:
            raise GroupError("quotient is not isomorphic to the given base group")
        pi = iso[proj]
    section = np.full(base.order, -1, dtype=np.int64)
    for g in range(total.order - 1, -1, -1):
        section[pi[g]] = g
    return CentralExtension(total, base, pi, kernel, section, label=label).validate()


# ---------------------------------------------------------------------------
# omega-products


@dataclass
class CocycleGroup:
    """A finite group H of cochains with a cyclic decomposition."""

    group: FiniteGroup
    modulus: int
    lattice: SubgroupLattice
    decomposition: FiniteQuotient

    @property
    def invariants(self) -> AbelianInvariants:
        return self.decomposition.invariants

    @property
    def basis(self) -> list[Cocycle]:
        n = self.group.order
        return [Cocycle(self.group, self.modulus, v.reshape(n, n)) for v in self.decomposition.generators]

    def coordinates(self, alpha: Cocycle) -> tuple[int, ...]:
        return self.decomposition.coordinates(alpha.to_modulus(self.modulus).values.ravel())


def cocycle_group(G: FiniteGroup, generators: Sequence[Cocycle], modulus: int | None = None) -> CocycleGroup:
    M = modulus or lcm(*(a.modulus for a in generators)) if generators else (modulus or 1)
    n = G.order
    rows = [a.to_modulus(M).values.ravel() for a in generators]
    L = SubgroupLattice(M, n * n, np.array(rows) if rows else np.zeros((0, n * n), dtype=np.int64))
    return CocycleGroup(G, M, L, FiniteQuotient(L, SubgroupLattice.zero(M, n * n)))


def omega_product(G: FiniteGroup, generators: Sequence[Cocycle], label: str = "omega-product") -> CentralExtension:
    """The extension H^ x_omega G for H generated by the given normalized cocycles."""
    for a in generators:
        if not a.is_normalized() or not a.is_cocycle():
            raise GroupError("omega-product generators must be normalized cocycles")
    H = cocycle_group(G, generators)
    d = list(H.invariants.factors)
    size = G.order * math.prod(d)
    if size > MAX_ORDER:
        raise GroupSizeError(f"omega-product would have order {size} > {MAX_ORDER}")
    M = H.modulus
    n = G.order
    k = len(d)
    # omega_j(g, h) = a_j(g, h) * d_j / M
    om = np.zeros((n, n, k), dtype=np.int64)
    for j, a in enumerate(H.basis):
        vals = a.values
        if (vals % (M // d[j])).any():
            raise GroupError("cyclic decomposition is inconsistent")  # pragma: no cover
        om[:, :, j] = vals // (M // d[j])
    m = math.prod(d)
    codes = np.arange(m)
    C = np.stack(np.unravel_index(codes, d[::-1]), axis=1)[:, ::-1] if k else np.zeros((1, 0), dtype=np.int64)
    weights = np.cumprod([1] + d[:-1]) if k else np.zeros(0, dtype=np.int64)
    N = n * m
    g = np.arange(N) % n
    c = np.arange(N) // n
    gi, gj = g[:, None], g[None, :]
    if k:
        tot = (om[gi, gj] + C[c][:, None, :] + C[c][None, :, :]) % np.array(d)
        code = tot @ weights
    else:
        code = np.zeros((N, N), dtype=np.int64)
    table = G.table[gi, gj] + n * code
    names = []
    for i in range(N):
        base = G.names[g[i]]
        ch = "+".join(f"{int(C[c[i]][j])}e{j + 1}" for j in range(k) if C[c[i]][j])
        names.append(base if not ch else (ch if base == "1" else f"({base},{ch})"))
    Gam = FiniteGroup(table, names=names, provenance={"name": label}, check=N <= 256)
    A = Subgroup(Gam, tuple(range(0, N, n)))
    coords = {int(i * n): tuple(int(x) for x in C[i]) for i in range(m)}
    basis = [int(n * (weights[j])) for j in range(k)]
    kb = AbelianBasis(H.invariants, basis, coords)
    ext = CentralExtension(Gam, G, g, A, np.arange(n), label=label, kernel_basis=kb)
    ext.cocycle_group = H
    return ext


# ---------------------------------------------------------------------------
# exponents, lifting property, covers


def extension_exponent(ext: CentralExtension) -> int:
    """lcm(exp A, lcm_g o(g) o(phi(g)^{o(g)}))."""
    G, Gm = ext.base, ext.total
    vals = [ext.kernel_invariants.exponent]
    for g in range(G.order):
        o = int(G.element_orders[g])
        vals.append(o * int(Gm.element_orders[Gm.power(int(ext.section[g]), o)]))
    return lcm(*vals)


def plp_check(ext: CentralExtension, spaces: CocycleSpaces | None = None) -> bool:
    """Projective lifting property: the standard map is onto M(G).

    Cross-checked against |A n Gamma'| = |M(G)| with A central; a
    disagreement raises, since it would indicate an internal error.
    """
    sp = spaces or compute_spaces(ext.base)
    target = sp.multiplier_invariants.order
    img = standard_map_image(ext, sp)
    onto = img.order() == target
    Gm = ext.total
    inter = len(set(derived_subgroup(Gm).members) & set(ext.kernel.members))
    central = ext.kernel.issubset(center(Gm))
    if onto != (central and inter == target):
        raise RuntimeError(f"standard map image {img.order()} vs |A n Gamma'| = {inter}, |M(G)| = {target}")
    return onto


def unitary_cover_exponent(G: FiniteGroup, spaces: CocycleSpaces | None = None) -> int:
    """exp Gamma_u(G) = lcm(exp Z_u(G), exp G)."""
    sp = spaces or compute_spaces(G)
    return lcm(sp.zu_exponent, G.exponent)


def coboundary_primitive(sp: CocycleSpaces, gamma: Cocycle) -> np.ndarray | None:
    """z with dz = gamma (modulus of the spaces), or None."""
    M = sp.modulus
    gamma = gamma.to_modulus(M)
    ga = sp.gauge
    z = ga.gauge_fix(gamma.values, M)
    rest = (gamma.values - coboundary(sp.group, z, M)) % M
    if ga.U == 0:
        return z if not rest.any() else None
    u = rest[ga.edges[:, 0], np.array(ga.gens, dtype=np.int64)[ga.edges[:, 1]]]
    E = ga.residual_edges(sp.group, M)
    c = solve_mod(E.T.copy(), u, M)
    if c is None:
        return None
    z = (z + ga.steps @ np.array(c, dtype=np.int64)) % M
    if not np.array_equal(coboundary(sp.group, z, M), gamma.values):
        return None
    return z


def minimal_representative(sp: CocycleSpaces, coords: Sequence[int]) -> Cocycle:
    """A cocycle of class ``coords`` whose order equals the class order.

    Start from the unitary representative b; with d the class order,
    d b = dz for some z, and b - d(z/d) has order d (values in mu_d).
    """
    beta = sp.representative(coords)
    d = sp.class_order(beta)
    if d == 1:
        return Cocycle.trivial(sp.group, 1)
    M = sp.modulus
    z = coboundary_primitive(sp, beta * d)
    if z is None:
        raise RuntimeError("class of order d whose d-th power is not a coboundary")
    big = M * d
    vals = (beta.values * d - coboundary(sp.group, z, big)) % big
    out = Cocycle(sp.group, big, vals).to_modulus(d)
    return out


def min_unitary_order(sp: CocycleSpaces, coords: Sequence[int]) -> int:
    """Smallest order of a unitary cocycle in the class ``coords``:
    least m with m v in m B_u + ker, v the P-coordinates of a representative."""
    beta = sp.representative(coords)
    v = np.asarray(sp.coordinates_of(beta), dtype=np.int64)
    M = sp.modulus
    for m in sorted(x for x in range(1, M + 1) if M % x == 0):
        target = sp.Q.scaled(m) + sp.kernel
        if target.contains((m * v) % M):
            return m
    return M  # pragma: no cover


def mu_cover(G: FiniteGroup, mu: Sequence[int] | int, spaces: CocycleSpaces | None = None) -> CentralExtension:
    """Cyclic-kernel extension whose standard-map image is <mu>.

    ``mu`` is a coordinate tuple in M(G) or the index of an invariant-factor
    generator.  The twisting cocycle is a representative of minimal order.
    """
    sp = spaces or compute_spaces(G)
    inv = sp.multiplier_invariants.factors
    if isinstance(mu, (int, np.integer)):
        if not 0 <= mu < len(inv):
            raise GroupError(f"class index {mu} out of range for M(G) = {sp.multiplier_invariants}")
        coords = [1 if i == mu else 0 for i in range(len(inv))]
    else:
        coords = list(mu)
    beta = minimal_representative(sp, coords)
    if beta.order() == 1:
        return omega_product(G, [], label="mu-cover")
    return omega_product(G, [beta], label="mu-cover")


def schur_section_search(G: FiniteGroup, spaces: CocycleSpaces | None = None) -> list[Cocycle]:
    """Cocycles b_i, one per invariant factor d_i of M(G), with o(b_i) = d_i;
    they generate H with H n B^2 = 1 and H -> M(G) an isomorphism, so the
    omega-product over H is a Schur cover."""
    sp = spaces or compute_spaces(G)
    inv = sp.multiplier_invariants.factors
    out = []
    for i, d in enumerate(inv):
        coords = [1 if j == i else 0 for j in range(len(inv))]
        b = minimal_representative(sp, coords)
        if b.order() != d:
            raise RuntimeError(f"representative of order {b.order()} for a class of order {d}")
        out.append(b)
    if out:
        H = cocycle_group(G, out)
        if H.invariants.order != sp.multiplier_invariants.order:
            raise RuntimeError("section cocycles do not map isomorphically onto M(G)")
    return out


def schur_cover(G: FiniteGroup, spaces: CocycleSpaces | None = None) -> CentralExtension:
    return omega_product(G, schur_section_search(G, spaces), label="schur-cover")


def generator_subextension(ext: CentralExtension, generators: Sequence[int]) -> tuple[Subgroup, bool]:
    """X = <phi(x_i)>; returns (X, X' == Gamma')."""
    Gm = ext.total
    X = subgroup_generated(Gm, [int(ext.section[x]) for x in generators])
    from .groups import subgroup_as_group
    S, emb = subgroup_as_group(X)
    Xd = {int(emb[i]) for i in derived_subgroup(S).members}
    return X, Xd == set(derived_subgroup(Gm).members)


# ---------------------------------------------------------------------------
# duality and inflation


@dataclass
class PerpQuotientReport:
    order_H_side: int
    order_L_side: int
    homomorphism: bool
    surjective: bool
    injective: bool
    L_inflated_in_H: bool
    hypothesis: bool

    @property
    def ok(self) -> bool:
        if not self.hypothesis:
            return False
        good = self.homomorphism and self.surjective
        if self.L_inflated_in_H:
            good = good and self.injective
        return good


def perp_quotient(G: FiniteGroup, N: Subgroup, H_generators: Sequence[Cocycle],
                  L_generators: Sequence[Cocycle]) -> PerpQuotientReport:
    """Compare L^ x (G/N) with (H^ x G)/K^perp N. where K = H n L*.

    Builds both groups and checks the map (gN, psi) -> (g, chi) K^perp N.,
    chi any extension of psi o (inflation)^-1 from K to H.
    """
    if not is_normal(G, N):
        raise GroupError("N is not normal")
    Q, proj = quotient(G, N)
    M = lcm(*(a.modulus for a in list(H_generators) + list(L_generators))) if (H_generators or L_generators) else 1
    M = lcm(M, G.exponent * G.order)
    n, nq = G.order, Q.order
    ext_H = omega_product(G, [a.to_modulus(M) for a in H_generators])
    ext_L = omega_product(Q, [a.to_modulus(M) for a in L_generators])
    Hg = cocycle_group(G, [a.to_modulus(M) for a in H_generators], M)
    Lg = cocycle_group(Q, [a.to_modulus(M) for a in L_generators], M)
    infl = lambda c: inflation(c, G, proj)  # noqa: E731
    Lstar_rows = [infl(c).values.ravel() for c in Lg.basis]
    Lstar = SubgroupLattice(M, n * n, np.array(Lstar_rows) if Lstar_rows else np.zeros((0, n * n), dtype=np.int64))
    K = Hg.lattice.intersect(Lstar)
    # hypothesis: H n Z^2(G/N)* = H n L*
    Zq = compute_spaces(Q, modulus=M).Z2 if nq > 1 else SubgroupLattice.zero(M, 1)
    zq_rows = [inflation(Cocycle(Q, M, v.reshape(nq, nq)), G, proj).values.ravel() for v in Zq.basis] if nq > 1 else []
    Zstar = SubgroupLattice(M, n * n, np.array(zq_rows) if zq_rows else np.zeros((0, n * n), dtype=np.int64))
    hypothesis = Hg.lattice.intersect(Zstar) == K
    L_in_H = Lstar.issubset(Hg.lattice)

    dH = list(Hg.invariants.factors)
    kH = len(dH)
    Kc = [Hg.decomposition.coordinates(v) for v in K.basis]
    Kperp = perp(dH, Kc)
    eH = lcm(*dH) if dH else 1
    # Kperp vectors embedded with scale eH/d_j; back to character coordinates
    kperp_chars = [[int(v[j]) // (eH // dH[j]) for j in range(kH)] for v in Kperp.basis] + \
                  [[dH[j] if i == j else 0 for j in range(kH)] for i in range(kH)]
    Gam = ext_H.total
    wH = np.cumprod([1] + dH[:-1]) if kH else np.zeros(0, dtype=np.int64)

    def elem_H(g, chi):
        code = int(sum((int(c) % d) * int(w) for c, d, w in zip(chi, dH, wH))) if kH else 0
        return int(g) + n * code

    seeds = [elem_H(0, ch) for ch in kperp_chars] + [elem_H(int(x), [0] * kH) for x in N.members]
    KN = subgroup_generated(Gam, seeds)
    Qh, projH = quotient(Gam, KN)

    # extensions chi_i of the dual basis of L, restricted to K
    dL = list(Lg.invariants.factors)
    kL = len(dL)
    chis = []
    for i in range(kL):
        # psi_i(kappa) = (L-coordinate i of infl^-1 kappa) / d_i, for kappa in K basis
        rows, rhs = [], []
        for v in K.basis:
            kappa_H = Hg.decomposition.coordinates(v)
            pre = _deflate(v, proj, n, nq)
            lc = Lg.decomposition.coordinates(pre)
            # sum_j x_j kappa_H[j]/dH[j] == lc[i]/dL[i]  (mod 1), scaled by E
            E = lcm(eH, dL[i])
            rows.append([int(kappa_H[j]) * (E // dH[j]) for j in range(kH)])
            rhs.append(int(lc[i]) * (E // dL[i]))
        if rows:
            E = lcm(eH, dL[i])
            x = solve_mod(np.array(rows, dtype=np.int64), np.array(rhs, dtype=np.int64), E)
            if x is None:
                raise RuntimeError("character on K does not extend to H")
            chis.append([int(t) % dH[j] for j, t in enumerate(x)])
        else:
            chis.append([0] * kH)

    nL = ext_L.total.order
    wL = np.cumprod([1] + dL[:-1]) if kL else np.zeros(0, dtype=np.int64)
    lift = np.array([int(np.flatnonzero(proj == q)[0]) for q in range(nq)])
    f = np.zeros(nL, dtype=np.int64)
    for e in range(nL):
        q = e % nq
        code = e // nq
        cs = [(code // int(wL[i])) % dL[i] for i in range(kL)]
        chi = [sum(cs[i] * chis[i][j] for i in range(kL)) % dH[j] if kH else 0 for j in range(kH)]
        f[e] = projH[elem_H(lift[q], chi)]
    TL, TQ = ext_L.total.table, Qh.table
    hom = bool(np.array_equal(f[TL], TQ[f[:, None], f[None, :]]))
    image = len(set(f.tolist()))
    return PerpQuotientReport(order_H_side=Qh.order, order_L_side=nL, homomorphism=hom,
                              surjective=image == Qh.order, injective=image == nL,
                              L_inflated_in_H=L_in_H, hypothesis=bool(hypothesis))


def _deflate(v: np.ndarray, proj: np.ndarray, n: int, nq: int) -> np.ndarray:
    """The cochain on G/N whose inflation is the flattened cochain v."""
    vals = np.asarray(v).reshape(n, n)
    reps = np.array([int(np.flatnonzero(proj == q)[0]) for q in range(nq)])
    out = vals[np.ix_(reps, reps)]
    if not np.array_equal(out[np.ix_(proj, proj)], vals):
        raise GroupError("cochain is not inflated from the quotient")
    return out.ravel()


# ---------------------------------------------------------------------------
# fixtures of the worked example


def example_extensions(p: int) -> tuple[CentralExtension, CentralExtension]:
    """(Gamma_1, Gamma_2) as central extensions of example_G(p)."""
    from .constructions import example_G, example_Gamma1, example_Gamma2
    G = example_G(p)
    G1 = example_Gamma1(p)
    y1 = G1.names.index("y")
    A1 = subgroup_generated(G1, [G1.power(y1, p * p)])
    e1 = extension_from_quotient(G1, A1, G, label="Gamma1")
    G2 = example_Gamma2(p)
    z = G2.names.index("z")
    A2 = subgroup_generated(G2, [z])
    e2 = extension_from_quotient(G2, A2, G, label="Gamma2")
    return e1, e2
