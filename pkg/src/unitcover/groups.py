"""Finite groups given by Cayley tables, subgroups and structural predicates.

Elements are the indices 0..n-1 with 0 the identity.  Conjugation and
commutators follow the right-action convention x^y = y^-1 x y and
[x, y] = x^-1 y^-1 x y.
"""

from __future__ import annotations

import hashlib
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .linalg import AbelianInvariants, FiniteQuotient, SubgroupLattice, hnf_mod, invariants_from_diagonal, lcm

MAX_ORDER = 768
FULL_SUBGROUP_ENUMERATION = 64
ISOMORPHISM_LIMIT = 128


class GroupError(ValueError):
    """Invalid group data or an operation outside its domain."""


class GroupSizeError(GroupError):
    pass


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, k) with n == p**k, k >= 1, or None."""
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FiniteGroup:
    """A finite group stored as its Cayley table.

    ``table[g, h]`` is the index of g*h.  ``provenance`` records how the
    group was built (constructor name and parameters) and
    ``decompositions`` lists semidirect splittings N x| H known from the
    construction, as pairs of member tuples.
    """

    def __init__(self, table, names: Sequence[str] | None = None, provenance: dict | None = None,
                 decompositions: Iterable[tuple[Sequence[int], Sequence[int]]] = (), check: bool = True):
        T = np.array(table, dtype=np.int32)
        if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] == 0:
            raise GroupError("Cayley table must be a non-empty square matrix")
        n = T.shape[0]
        if n > MAX_ORDER:
            raise GroupSizeError(f"group order {n} exceeds the cap {MAX_ORDER}")
        T.setflags(write=False)
        self.table = T
        self.order = n
        if names is None:
            names = ["1"] + [f"g{i}" for i in range(1, n)]
        if len(names) != n:
            raise GroupError("one name per element required")
        self.names = list(names)
        self.provenance = dict(provenance or {})
        self.decompositions = [(tuple(sorted(a)), tuple(sorted(b))) for a, b in decompositions]
        if check:
            self.validate()

    # -- validation

    def validate(self, sample: int = 20000):
        T, n = self.table, self.order
        ar = np.arange(n)
        if T.min() < 0 or T.max() >= n:
            raise GroupError("table entries out of range")
        if not (np.array_equal(T[0], ar) and np.array_equal(T[:, 0], ar)):
            raise GroupError("element 0 is not a two-sided identity")
        srt = np.sort(T, axis=1)
        if not (srt == ar).all() or not (np.sort(T, axis=0) == ar[:, None]).all():
            raise GroupError("table is not a Latin square")
        if n <= 256:
            if not np.array_equal(T[T], T[:, T]):
                raise GroupError("multiplication is not associative")
        else:
            rng = np.random.default_rng(n)
            a, b, c = rng.integers(0, n, size=(3, sample))
            if not np.array_equal(T[T[a, b], c], T[a, T[b, c]]):
                raise GroupError("multiplication is not associative")

    # -- basic data

    def __len__(self):
        return self.order

    def __repr__(self):
        tag = self.provenance.get("name", "")
        return f"FiniteGroup(order={self.order}{', ' + tag if tag else ''})"

    @cached_property
    def digest(self) -> str:
        return hashlib.sha256(self.table.astype(np.int32).tobytes()).hexdigest()

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.argmax(self.table == 0, axis=1).astype(np.int32)
        inv.setflags(write=False)
        return inv

    def power(self, g: int, k: int) -> int:
        T = self.table
        if k < 0:
            g, k = int(self.inverse[g]), -k
        result, base = 0, g
        while k:
            if k & 1:
                result = int(T[result, base])
            base = int(T[base, base])
            k >>= 1
        return result

    def power_map(self, k: int) -> np.ndarray:
        """Array g -> g^k."""
        T = self.table
        base = np.arange(self.order)
        if k < 0:
            base, k = self.inverse.copy(), -k
        result = np.zeros(self.order, dtype=np.int64)
        while k:
            if k & 1:
                result = T[result, base]
            base = T[base, base]
            k >>= 1
        return result

    @cached_property
    def element_orders(self) -> np.ndarray:
        T = self.table
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        cur = np.arange(n)
        k = 1
        while (orders == 0).any():
            hit = (cur == 0) & (orders == 0)
            orders[hit] = k
            cur = T[cur, np.arange(n)]
            k += 1
        orders.setflags(write=False)
        return orders

    @cached_property
    def exponent(self) -> int:
        return lcm(*map(int, set(self.element_orders.tolist())))

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def conj(self, x, y):
        """x^y = y^-1 x y (vectorised)."""
        T = self.table
        return T[T[self.inverse[y], x], y]

    def commutator(self, x, y):
        """[x, y] = x^-1 y^-1 x y (vectorised)."""
        T, inv = self.table, self.inverse
        return T[T[inv[x], inv[y]], T[x, y]]

    @cached_property
    def prime_power(self) -> tuple[int, int] | None:
        return prime_power(self.order)

    @property
    def p(self) -> int:
        pp = self.prime_power
        if pp is None:
            raise GroupError(f"group of order {self.order} is not a p-group")
        return pp[0]

    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    def trivial(self) -> "Subgroup":
        return Subgroup(self, (0,))


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup = field(compare=False, repr=False)
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(int(m) for m in self.members)))

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, g) -> bool:
        return int(g) in self._set

    def __iter__(self):
        return iter(self.members)

    @cached_property
    def _set(self) -> frozenset:
        return frozenset(self.members)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.members)] = True
        return m

    def issubset(self, other: "Subgroup") -> bool:
        return self._set <= other._set

    def is_trivial(self) -> bool:
        return self.members == (0,)

    def check(self):
        G = self.parent
        idx = np.array(self.members)
        if 0 not in self._set:
            raise GroupError("subgroup does not contain the identity")
        prods = G.table[np.ix_(idx, idx)]
        if not self.mask[prods].all() or not self.mask[G.inverse[idx]].all():
            raise GroupError("member list is not closed")
        return self


# ---------------------------------------------------------------------------
# elementary operations


def element_order(G: FiniteGroup, g: int) -> int:
    if not 0 <= g < G.order:
        raise GroupError(f"element {g} out of range")
    return int(G.element_orders[g])


def exponent(G: FiniteGroup) -> int:
    return G.exponent


def _closure(G: FiniteGroup, seeds: Iterable[int], start: np.ndarray | None = None) -> np.ndarray:
    T = G.table
    mask = np.zeros(G.order, dtype=bool) if start is None else start.copy()
    mask[0] = True
    gens = np.unique(np.array([int(s) for s in seeds] + [0], dtype=np.int64))
    gens = gens[gens != 0]
    if gens.size == 0:
        return mask
    frontier = np.flatnonzero(mask)
    while frontier.size:
        new = np.unique(T[np.ix_(frontier, gens)].ravel())
        new = new[~mask[new]]
        mask[new] = True
        frontier = new
    return mask


def subgroup_generated(G: FiniteGroup, seeds: Iterable[int]) -> Subgroup:
    return Subgroup(G, tuple(np.flatnonzero(_closure(G, seeds))))


def _generated_by_set(G: FiniteGroup, elements: np.ndarray) -> Subgroup:
    return subgroup_generated(G, np.unique(elements).tolist())


def derived_subgroup(G: FiniteGroup, H: Subgroup | None = None) -> Subgroup:
    idx = np.array(H.members if H is not None else range(G.order))
    comms = G.commutator(idx[:, None], idx[None, :])
    return _generated_by_set(G, comms.ravel())


def commutator_subgroup(G: FiniteGroup, A: Subgroup, B: Subgroup) -> Subgroup:
    a = np.array(A.members)
    b = np.array(B.members)
    return _generated_by_set(G, G.commutator(a[:, None], b[None, :]).ravel())


def derived_series(G: FiniteGroup) -> list[Subgroup]:
    series = [G.whole()]
    while True:
        nxt = derived_subgroup(G, series[-1])
        if nxt.members == series[-1].members:
            break
        series.append(nxt)
    return series


def derived_length(G: FiniteGroup) -> int | None:
    """Derived length, or None if G is not solvable."""
    series = derived_series(G)
    if not series[-1].is_trivial():
        return None
    return len(series) - 1


def lower_central_series(G: FiniteGroup) -> list[Subgroup]:
    series = [G.whole()]
    while True:
        nxt = commutator_subgroup(G, series[-1], G.whole())
        if nxt.members == series[-1].members:
            break
        series.append(nxt)
    return series


def nilpotency_class(G: FiniteGroup) -> int | None:
    """Nilpotency class, or None if G is not nilpotent."""
    series = lower_central_series(G)
    if not series[-1].is_trivial():
        return None
    return len(series) - 1


def center(G: FiniteGroup) -> Subgroup:
    T = G.table
    return Subgroup(G, tuple(np.flatnonzero((T == T.T).all(axis=1))))


def centralizer(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    T = G.table
    e = np.array(list(elements), dtype=np.int64)
    if e.size == 0:
        return G.whole()
    ok = (T[:, e] == T[e, :].T).all(axis=1)
    return Subgroup(G, tuple(np.flatnonzero(ok)))


def agemo(G: FiniteGroup, m: int = 1, H: Subgroup | None = None) -> Subgroup:
    """The subgroup generated by all p^m-th powers (of H, default G)."""
    p = G.p if H is None else _subgroup_prime(H)
    pw = G.power_map(p ** m)
    idx = np.array(H.members) if H is not None else np.arange(G.order)
    return _generated_by_set(G, pw[idx])


def _subgroup_prime(H: Subgroup) -> int:
    pp = prime_power(H.order)
    if H.order == 1:
        return H.parent.p if H.parent.prime_power else 2
    if pp is None:
        raise GroupError("subgroup is not a p-group")
    return pp[0]


def is_powerful(G: FiniteGroup) -> bool:
    """G' <= agemo(G); defined here only for p > 2."""
    if G.order == 1:
        return True
    p = G.p
    if p == 2:
        raise GroupError("powerful is only defined for p > 2")
    return derived_subgroup(G).issubset(agemo(G, 1))


def is_regular(G: FiniteGroup) -> bool:
    """Brute-force check that every pair x, y admits c in <x,y>' with
    (xy)^p = x^p y^p c^p."""
    if G.order == 1:
        return True
    p = G.p
    T, inv = G.table, G.inverse
    pw = G.power_map(p)
    derived_cache: dict[bytes, np.ndarray] = {}
    n = G.order
    for x in range(n):
        for y in range(n):
            lhs = pw[T[x, y]]
            target = T[inv[T[pw[x], pw[y]]], lhs]
            if target == 0:
                continue
            S = _closure(G, (x, y))
            key = S.tobytes()
            powers = derived_cache.get(key)
            if powers is None:
                D = derived_subgroup(G, Subgroup(G, tuple(np.flatnonzero(S))))
                powers = np.zeros(n, dtype=bool)
                powers[pw[np.array(D.members)]] = True
                derived_cache[key] = powers
            if not powers[target]:
                return False
    return True


# ---------------------------------------------------------------------------
# normality and quotients


def is_normal(G: FiniteGroup, N: Subgroup) -> bool:
    idx = np.array(N.members)
    conj = G.conj(idx[:, None], np.arange(G.order)[None, :])
    return bool(N.mask[conj].all())


def normal_closure(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    e = np.array(list(elements), dtype=np.int64)
    if e.size == 0:
        return G.trivial()
    return _generated_by_set(G, G.conj(e[:, None], np.arange(G.order)[None, :]).ravel())


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, np.ndarray]:
    """G/N with cosets indexed by their smallest member; returns (Q, projection)."""
    if not is_normal(G, N):
        raise GroupError("subgroup is not normal")
    T = G.table
    nidx = np.array(N.members)
    cid = T[:, nidx].min(axis=1)
    reps = np.unique(cid)
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[reps] = np.arange(reps.size)
    proj = pos[cid]
    Qt = proj[T[np.ix_(reps, reps)]]
    names = [G.names[r] + ("N" if N.order > 1 else "") if r else "1" for r in reps]
    Q = FiniteGroup(Qt, names=names, provenance={"name": "quotient", "of": G.provenance.get("name", "")},
                    check=Qt.shape[0] <= 256)
    return Q, proj


def subgroup_as_group(H: Subgroup) -> tuple[FiniteGroup, np.ndarray]:
    """H as a standalone group; returns (group, embedding into the parent)."""
    G = H.parent
    idx = np.array(H.members)
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[idx] = np.arange(idx.size)
    sub = pos[G.table[np.ix_(idx, idx)]]
    if (sub < 0).any():
        raise GroupError("member list is not closed")
    S = FiniteGroup(sub, names=[G.names[i] for i in idx], provenance={"name": "subgroup"}, check=False)
    return S, idx


def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    seen = np.zeros(G.order, dtype=bool)
    out = []
    allg = np.arange(G.order)
    for g in range(G.order):
        if not seen[g]:
            cls = np.unique(G.conj(g, allg))
            seen[cls] = True
            out.append(tuple(int(c) for c in cls))
    return out


def _product_set(G: FiniteGroup, A: Iterable[int], B: Iterable[int]) -> tuple[int, ...]:
    return tuple(np.unique(G.table[np.ix_(np.array(list(A)), np.array(list(B)))]).tolist())


def normal_subgroups(G: FiniteGroup, complete: bool | None = None) -> list[Subgroup]:
    """Normal subgroups, sorted by order then members.

    For order <= 64 this is the complete list (joins of normal closures of
    elements).  Above that only the characteristic series members, the
    normal closures of single elements and their pairwise products are
    returned.
    """
    if complete is None:
        complete = G.order <= FULL_SUBGROUP_ENUMERATION
    base = []
    seen_base = set()
    covered = np.zeros(G.order, dtype=bool)
    for cls in conjugacy_classes(G):
        C = normal_closure(G, cls[:1]).members
        if C not in seen_base:
            seen_base.add(C)
            base.append(C)
    found = {(0,), tuple(range(G.order))}
    if complete:
        frontier = [(0,)]
        while frontier:
            nxt = []
            for N in frontier:
                Nset = set(N)
                for C in base:
                    if set(C) <= Nset:
                        continue
                    P = _product_set(G, N, C)
                    if P not in found:
                        found.add(P)
                        nxt.append(P)
            frontier = nxt
    else:
        found.update(base)
        series = derived_series(G) + lower_central_series(G) + [center(G)]
        if G.prime_power:
            k = 1
            while True:
                A = agemo(G, k)
                series.append(A)
                if A.is_trivial():
                    break
                k += 1
        found.update(S.members for S in series)
        for i, A in enumerate(base):
            for B in base[i + 1:]:
                found.add(_product_set(G, A, B))
    subs = [Subgroup(G, m) for m in found]
    subs.sort(key=lambda s: (s.order, s.members))
    return subs


def sylow(G: FiniteGroup, p: int) -> Subgroup:
    n = G.order
    pk = 1
    while n % (pk * p) == 0:
        pk *= p
    P = G.trivial()
    T = G.table
    while P.order < pk:
        Pidx = np.array(P.members)
        conj = G.conj(Pidx[:, None], np.arange(n)[None, :])
        normalizer = np.flatnonzero(P.mask[conj].all(axis=0))
        pw = G.power_map(p)
        for x in normalizer:
            if not P.mask[x] and P.mask[pw[x]]:
                P = subgroup_generated(G, list(P.members) + [int(x)])
                break
        else:  # pragma: no cover - Sylow theory guarantees progress
            raise GroupError("Sylow search stalled")
    return P


def two_generator_subgroups(G: FiniteGroup) -> list[Subgroup]:
    found = {}
    n = G.order
    for x in range(n):
        for y in range(x, n):
            S = _closure(G, (x, y))
            key = S.tobytes()
            if key not in found:
                found[key] = Subgroup(G, tuple(np.flatnonzero(S)))
    subs = list(found.values())
    subs.sort(key=lambda s: (s.order, s.members))
    return subs


def small_generating_set(G: FiniteGroup, H: Subgroup | None = None) -> list[int]:
    """A short generating set chosen greedily (largest new subgroup first)."""
    members = np.array(H.members) if H is not None else np.arange(G.order)
    target = members.size
    orders = G.element_orders
    cand = sorted((int(g) for g in members if g), key=lambda g: (-orders[g], g))
    gens: list[int] = []
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    while mask.sum() < target:
        best = None
        for g in cand:
            if mask[g]:
                continue
            new = _closure(G, gens + [g])
            size = int(new.sum())
            if best is None or size > best[0]:
                best = (size, g, new)
                if size == target:
                    break
        gens.append(best[1])
        mask = best[2]
    return gens


# ---------------------------------------------------------------------------
# abelian groups


def abelian_invariants(A: FiniteGroup) -> AbelianInvariants:
    if not A.is_abelian:
        raise GroupError("group is not abelian")
    orders = A.element_orders
    parts = []
    for p in prime_factors(A.order):
        counts = [1]
        k = 1
        while True:
            c = int(np.sum(((p ** k) % orders) == 0))
            counts.append(c)
            if c == counts[-2] and k > 1:
                break
            k += 1
            if k > 64:
                break
        # ranks[k] = number of cyclic factors of exponent >= k
        ranks = [round(math.log(counts[k] // counts[k - 1], p)) for k in range(1, len(counts))]
        for k in range(len(ranks)):
            nxt = ranks[k + 1] if k + 1 < len(ranks) else 0
            parts += [p ** (k + 1)] * (ranks[k] - nxt)
    return AbelianInvariants(tuple(invariants_from_diagonal(parts)))


def has_CnxCn_at_exponent(A: FiniteGroup) -> bool:
    """True iff A has a subgroup C_n x C_n with n = exp A."""
    f = abelian_invariants(A).factors
    return len(f) >= 2 and f[-1] == f[-2]


@dataclass
class AbelianBasis:
    """Cyclic decomposition of an abelian subgroup: element ``basis[i]`` has
    order ``invariants[i]`` and ``coords[g]`` gives the coordinates of g."""

    invariants: AbelianInvariants
    basis: list[int]
    coords: dict[int, tuple[int, ...]]

    def element(self, coords: Sequence[int], G: FiniteGroup) -> int:
        g = 0
        for b, c in zip(self.basis, coords):
            g = G.mul(g, G.power(b, int(c)))
        return g


def abelian_basis(G: FiniteGroup, H: Subgroup | None = None) -> AbelianBasis:
    H = H if H is not None else G.whole()
    if H.order == 1:
        return AbelianBasis(AbelianInvariants(()), [], {0: ()})
    gens = small_generating_set(G, H)
    k = len(gens)
    e = lcm(*(int(G.element_orders[g]) for g in gens))
    T = G.table
    coord = {0: np.zeros(k, dtype=np.int64)}
    rels = []
    queue = deque([0])
    while queue:
        g = queue.popleft()
        for i, s in enumerate(gens):
            h = int(T[g, s])
            v = coord[g].copy()
            v[i] += 1
            if h in coord:
                rels.append((v - coord[h]) % e)
            else:
                coord[h] = v % e
                queue.append(h)
    rel = SubgroupLattice(e, k, np.array(rels, dtype=np.int64) if rels else np.zeros((0, k), dtype=np.int64))
    quo = FiniteQuotient(SubgroupLattice.full(e, k), rel)
    basis = []
    for vec in quo.generators:
        g = 0
        for s, c in zip(gens, vec):
            g = G.mul(g, G.power(s, int(c)))
        basis.append(g)
    coords = {h: quo.coordinates(v) for h, v in coord.items()}
    return AbelianBasis(quo.invariants, basis, coords)


# ---------------------------------------------------------------------------
# isomorphism (small groups only)


def _census(G: FiniteGroup):
    return (G.order, tuple(sorted(Counter(G.element_orders.tolist()).items())),
            center(G).order, derived_subgroup(G).order, G.is_abelian)


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> np.ndarray | None:
    """An isomorphism G -> H as an index array, or None."""
    if G.order > ISOMORPHISM_LIMIT or H.order > ISOMORPHISM_LIMIT:
        raise GroupSizeError(f"isomorphism testing is limited to order {ISOMORPHISM_LIMIT}")
    if _census(G) != _census(H):
        return None
    gens = small_generating_set(G)
    og, oh = G.element_orders, H.element_orders
    cz_g = [centralizer(G, [g]).order for g in gens]
    cand = [[h for h in range(H.order) if oh[h] == og[g] and centralizer(H, [h]).order == cz]
            for g, cz in zip(gens, cz_g)]
    TG, TH = G.table, H.table

    def extend(images):
        f = {0: 0}
        queue = deque([0])
        while queue:
            g = queue.popleft()
            for s, t in zip(gens, images):
                gs, ft = int(TG[g, s]), int(TH[f[g], t])
                if gs in f:
                    if f[gs] != ft:
                        return None
                else:
                    f[gs] = ft
                    queue.append(gs)
        return f

    def search(images):
        if extend(images) is None:
            return None
        if len(images) == len(gens):
            f = extend(images)
            if len(f) == G.order and len(set(f.values())) == H.order:
                return np.array([f[g] for g in range(G.order)])
            return None
        for h in cand[len(images)]:
            res = search(images + [h])
            if res is not None:
                return res
        return None

    return search([])


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None
