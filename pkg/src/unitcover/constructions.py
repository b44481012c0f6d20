"""Constructors for the finite groups used throughout the package, and the
JSON group-definition format.

Semidirect products N x| H use pairs (n, h) with
(n1, h1)(n2, h2) = (n1 * theta_h1(n2), h1 h2), where theta_h(n) = h n h^-1.
Presentations written with y^x = x^-1 y x therefore give
theta_x = (y -> y^x)^-1.
"""

from __future__ import annotations

import json
import math
from collections import deque
from pathlib import Path
from typing import Callable, Mapping, Sequence

import numpy as np

from .groups import MAX_ORDER, FiniteGroup, GroupError, GroupSizeError, center, prime_power, quotient, subgroup_generated


def _check_order(n: int):
    if n > MAX_ORDER:
        raise GroupSizeError(f"group order {n} exceeds the cap {MAX_ORDER}")


def _vector_group(moduli: Sequence[int], mul: Callable, name: str, params: dict,
                  labels: Sequence[str] | None = None, decompositions=()) -> FiniteGroup:
    """Group on tuples in prod Z/moduli[i] (mixed radix, first coordinate fastest)."""
    moduli = [int(m) for m in moduli]
    n = math.prod(moduli)
    _check_order(n)
    if not moduli:
        return FiniteGroup([[0]], provenance={"name": name, **params})
    vecs = np.stack(np.unravel_index(np.arange(n), moduli[::-1]), axis=1)[:, ::-1].astype(np.int64)
    a = np.repeat(vecs, n, axis=0)
    b = np.tile(vecs, (n, 1))
    prod = mul(a, b) % np.array(moduli)
    weights = np.cumprod([1] + moduli[:-1])
    table = (prod @ weights).reshape(n, n)
    labels = labels or [f"x{i + 1}" for i in range(len(moduli))]
    names = []
    for v in vecs:
        parts = [lab if c == 1 else f"{lab}^{c}" for lab, c in zip(labels, v) if c]
        names.append("*".join(parts) or "1")
    return FiniteGroup(table, names=names, provenance={"name": name, **params}, decompositions=decompositions)


def _weights(moduli):
    return np.cumprod([1] + list(moduli[:-1]))


def cyclic(n: int, label: str = "x") -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    return _vector_group([n], lambda a, b: a + b, "cyclic", {"n": n}, labels=[label])


def abelian(invariants: Sequence[int], labels: Sequence[str] | None = None) -> FiniteGroup:
    if any(int(d) < 1 for d in invariants):
        raise GroupError("invariants must be positive")
    if labels is not None:
        labels = [lab for lab, d in zip(labels, invariants) if int(d) != 1]
    inv = [int(d) for d in invariants if int(d) != 1]
    decomp = ()
    if len(inv) >= 2:
        # split off the last cyclic factor
        w = math.prod(inv[:-1])
        decomp = [(tuple(range(w)), tuple(range(0, w * inv[-1], w)))]
    return _vector_group(inv, lambda a, b: a + b, "abelian", {"invariants": list(inv)}, labels=labels,
                         decompositions=decomp)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: r^n = s^2 = 1, s r s = r^-1."""
    if n < 1:
        raise GroupError("dihedral parameter must be positive")

    def mul(a, b):
        sign = 1 - 2 * a[:, 1]
        return np.stack([a[:, 0] + sign * b[:, 0], a[:, 1] + b[:, 1]], axis=1)

    return _vector_group([n, 2], mul, "dihedral", {"n": n}, labels=["r", "s"],
                         decompositions=[(tuple(range(n)), (0, n))])


def generalized_quaternion(order: int) -> FiniteGroup:
    """Q_{2^k}: x^n = 1, y^2 = x^{n/2}, y^-1 x y = x^-1 with n = order/2."""
    pp = prime_power(order)
    if pp is None or pp[0] != 2 or order < 8:
        raise GroupError("generalized quaternion order must be a power of 2, at least 8")
    n = order // 2

    def mul(a, b):
        sign = 1 - 2 * a[:, 1]
        carry = a[:, 1] * b[:, 1] * (n // 2)
        return np.stack([a[:, 0] + sign * b[:, 0] + carry, a[:, 1] + b[:, 1]], axis=1)

    return _vector_group([n, 2], mul, "quaternion", {"order": order}, labels=["x", "y"])


def quaternion8() -> FiniteGroup:
    return generalized_quaternion(8)


def heisenberg(p: int, n: int = 1) -> FiniteGroup:
    """Triples (a, b, c) in F_p^n x F_p^n x F_p with c += a.b'."""

    def mul(x, y):
        a, b, c = x[:, :n], x[:, n:2 * n], x[:, 2 * n]
        a2, b2, c2 = y[:, :n], y[:, n:2 * n], y[:, 2 * n]
        return np.concatenate([a + a2, b + b2, (c + c2 + (a * b2).sum(axis=1))[:, None]], axis=1)

    labels = [f"a{i + 1}" for i in range(n)] + [f"b{i + 1}" for i in range(n)] + ["c"]
    return _vector_group([p] * (2 * n + 1), mul, "heisenberg", {"p": p, "n": n}, labels=labels)


def metacyclic(m: int, n: int, r: int) -> FiniteGroup:
    """C_m x| C_n = <y, x | y^m = x^n = 1, y^x = y^r>."""
    if math.gcd(r, m) != 1 or pow(r, n, m) != 1 % m:
        raise GroupError(f"y -> y^{r} does not define an action of C_{n} on C_{m}")
    rinv = pow(r, -1, m) if m > 1 else 0
    Y, X = cyclic(m, "y"), cyclic(n, "x")
    G = semidirect(Y, X, {1: [(a * rinv) % m for a in range(m)]} if n > 1 else {})
    G.provenance = {"name": "metacyclic", "m": m, "n": n, "r": r}
    return G


def extraspecial(p: int, kind="plus", n: int = 1) -> FiniteGroup:
    """Extraspecial group of order p^(1+2n).

    For p = 2, ``kind`` is "plus" (D4 type) or "minus" (Q8 type).  For odd
    p, ``kind`` is the exponent, p or p^2 (also accepted: "exponent-p",
    "exponent-p2").
    """
    if prime_power(p) != (p, 1):
        raise GroupError("p must be prime")
    if n < 1:
        raise GroupError("n must be positive")
    if p == 2:
        if kind not in ("plus", "minus", "+", "-"):
            raise GroupError("for p = 2 the type is 'plus' or 'minus'")
        minus = kind in ("minus", "-")
        G = quaternion8() if minus else dihedral(4)
        for _ in range(n - 1):
            G = central_product(G, dihedral(4))
    else:
        kinds = {p: p, p * p: p * p, "exponent-p": p, "exponent-p2": p * p, "p": p, "p2": p * p}
        if kind not in kinds:
            raise GroupError(f"for odd p the type is the exponent, {p} or {p * p}")
        e = kinds[kind]
        if e == p:
            G = heisenberg(p, n)
        else:
            G = metacyclic(p * p, p, p + 1)
            for _ in range(n - 1):
                G = central_product(G, heisenberg(p, 1))
    G.provenance = {"name": "extraspecial", "p": p, "kind": kind, "n": n}
    return G


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Elements (g, h) stored at index g + |G| h."""
    m, n = G.order, H.order
    _check_order(m * n)
    g = np.arange(m * n) % m
    h = np.arange(m * n) // m
    table = G.table[np.ix_(g, g)] + m * H.table[np.ix_(h, h)]
    names = []
    for i in range(m * n):
        a, b = G.names[g[i]], H.names[h[i]]
        names.append("1" if a == "1" and b == "1" else f"({a},{b})")
    N1 = tuple(range(m))
    N2 = tuple(range(0, m * n, m))
    return FiniteGroup(table, names=names,
                       provenance={"name": "direct_product", "factors": [G.provenance, H.provenance]},
                       decompositions=[(N1, N2), (N2, N1)])


def central_product(G: FiniteGroup, H: FiniteGroup, zg: int | None = None, zh: int | None = None) -> FiniteGroup:
    """G x H modulo <(zg, zh^-1)> for central elements of equal prime order."""
    if zg is None:
        zg = next(z for z in center(G).members if z and G.element_orders[z] == prime_power(G.order)[0])
    if zh is None:
        zh = next(z for z in center(H).members if z and H.element_orders[z] == G.element_orders[zg])
    P = direct_product(G, H)
    z = zg + G.order * int(H.inverse[zh])
    Q, _ = quotient(P, subgroup_generated(P, [z]))
    Q.provenance = {"name": "central_product"}
    return Q


def _extend_action(N: FiniteGroup, H: FiniteGroup, action: Mapping[int, Sequence[int]]) -> np.ndarray:
    """theta[h] as an array on N, from images of generators of H."""
    TN = N.table
    for h, perm in action.items():
        perm = np.asarray(perm)
        if perm.shape != (N.order,) or sorted(perm.tolist()) != list(range(N.order)):
            raise GroupError(f"action of {h} is not a permutation of N")
        if not np.array_equal(perm[TN], TN[np.ix_(perm, perm)]):
            raise GroupError(f"action of {h} is not an automorphism of N")
    gens = {int(h): np.asarray(p, dtype=np.int64) for h, p in action.items()}
    theta = {0: np.arange(N.order)}
    queue = deque([0])
    while queue:
        h = queue.popleft()
        for s, ps in gens.items():
            hs = int(H.table[h, s])
            img = theta[h][ps]
            if hs in theta:
                if not np.array_equal(theta[hs], img):
                    raise GroupError("generator images do not define a homomorphism H -> Aut(N)")
            else:
                theta[hs] = img
                queue.append(hs)
    if len(theta) != H.order:
        raise GroupError("action generators do not generate H")
    return np.stack([theta[h] for h in range(H.order)])


def semidirect(N: FiniteGroup, H: FiniteGroup, action: Mapping[int, Sequence[int]]) -> FiniteGroup:
    """N x| H with theta given on generators of H (element -> permutation of N).

    An empty action gives the direct product.  Elements (n, h) are stored at
    index n + |N| h; the decomposition is recorded on the result.
    """
    m, k = N.order, H.order
    _check_order(m * k)
    if not action and k > 1:
        theta = np.tile(np.arange(m), (k, 1))
    else:
        theta = _extend_action(N, H, action)
    nn = np.arange(m * k) % m
    hh = np.arange(m * k) // m
    n1, n2 = nn[:, None], nn[None, :]
    h1, h2 = hh[:, None], hh[None, :]
    table = N.table[n1, theta[h1, n2]] + m * H.table[h1, h2]
    names = []
    for i in range(m * k):
        a, b = N.names[nn[i]], H.names[hh[i]]
        names.append("*".join(s for s in (a, b) if s != "1") or "1")
    return FiniteGroup(table, names=names,
                       provenance={"name": "semidirect", "N": N.provenance, "H": H.provenance},
                       decompositions=[(tuple(range(m)), tuple(range(0, m * k, m)))])


def example_G(p: int) -> FiniteGroup:
    """<x, y | x^{p^2} = y^{p^2} = 1, y^x = y^{p+1}>, order p^4."""
    G = metacyclic(p * p, p * p, p + 1)
    G.provenance = {"name": "example_G", "p": p}
    return G


def example_Gamma1(p: int) -> FiniteGroup:
    """<x, y | x^{p^2} = y^{p^3} = 1, y^x = y^{p+1}>, order p^5."""
    G = metacyclic(p ** 3, p * p, p + 1)
    G.provenance = {"name": "example_Gamma1", "p": p}
    return G


def example_Gamma2(p: int) -> FiniteGroup:
    """<x, y, z | x^{p^2} = y^{p^2} = z^{p^2} = 1, y^x = y^{p+1} z, z central>, order p^6.

    N = <y, z> is stored with y as the first coordinate.
    """
    q = p * p
    N = abelian([q, q], labels=["y", "z"])
    # y^a z^b -> (y^{p+1} z)^a z^b under y -> y^x; theta_x is its inverse
    fwd = np.array([((a * (p + 1)) % q) + q * ((a + b) % q) for b in range(q) for a in range(q)])
    inv = np.argsort(fwd)
    G = semidirect(N, cyclic(q, "x"), {1: inv.tolist()})
    G.provenance = {"name": "example_Gamma2", "p": p}
    return G


def abelian_cover(invariants: Sequence[int]) -> FiniteGroup:
    """Class-2 group on normal forms x_1^{a_1}...x_k^{a_k} prod_{i<j} [x_j, x_i]^{b_ij}
    with a_i mod e_i and b_ij mod gcd(e_i, e_j)."""
    e = [int(d) for d in invariants]
    k = len(e)
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    moduli = e + [math.gcd(e[i], e[j]) for i, j in pairs]

    def mul(x, y):
        out = x + y
        for t, (i, j) in enumerate(pairs):
            out[:, k + t] += x[:, j] * y[:, i]
        return out

    labels = [f"x{i + 1}" for i in range(k)] + [f"[x{j + 1},x{i + 1}]" for i, j in pairs]
    return _vector_group(moduli, mul, "abelian_cover", {"invariants": e}, labels=labels)


def burnside23() -> FiniteGroup:
    """The free 2-generator group of exponent 3 (order 27)."""
    G = heisenberg(3, 1)
    G.provenance = {"name": "burnside23"}
    return G


def permutation_group(degree: int, generators: Sequence[Sequence[int]]) -> FiniteGroup:
    """Closure of permutation generators (images of 0..degree-1)."""
    gens = [tuple(int(i) for i in g) for g in generators]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise GroupError("generator is not a permutation of the given degree")
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = tuple(g[i] for i in a)  # a then g
            if b not in index:
                if len(elements) >= MAX_ORDER:
                    raise GroupSizeError(f"permutation group exceeds the cap {MAX_ORDER}")
                index[b] = len(elements)
                elements.append(b)
                queue.append(b)
    P = np.array(elements, dtype=np.int64)
    n = len(elements)
    # product g*h acts as "g then h": (g*h)(i) = h(g(i))
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        comp = P[:, P[i]]  # row j: P[j][P[i]] = h_j(g_i(.))
        table[i] = [index[tuple(r)] for r in comp]
    return FiniteGroup(table, provenance={"name": "perm", "degree": degree})


# ---------------------------------------------------------------------------
# group definition files

NAMED = {
    "cyclic": cyclic,
    "abelian": abelian,
    "dihedral": dihedral,
    "quaternion8": quaternion8,
    "generalized_quaternion": generalized_quaternion,
    "extraspecial": extraspecial,
    "heisenberg": heisenberg,
    "metacyclic": metacyclic,
    "example_G": example_G,
    "example_Gamma1": example_Gamma1,
    "example_Gamma2": example_Gamma2,
    "abelian_cover": abelian_cover,
    "burnside23": burnside23,
}


def group_from_spec(spec: Mapping) -> FiniteGroup:
    """Build a group from a decoded group-definition document."""
    kind = spec.get("kind")
    if kind == "cayley":
        return FiniteGroup(spec["table"], names=spec.get("names"), provenance={"name": "cayley"})
    if kind == "perm":
        return permutation_group(int(spec["degree"]), spec["generators"])
    if kind == "abelian":
        return abelian(spec["invariants"])
    if kind == "named":
        name = spec["name"]
        if name not in NAMED:
            raise GroupError(f"unknown constructor {name!r}; choose from {sorted(NAMED)}")
        return NAMED[name](**spec.get("params", {}))
    if kind == "semidirect":
        N = group_from_spec(spec["N"])
        H = group_from_spec(spec["H"])
        action = {int(h): perm for h, perm in spec["action"].items()}
        return semidirect(N, H, action)
    raise GroupError(f"unknown group kind {kind!r}")


def load_group(path) -> FiniteGroup:
    with open(path, encoding="utf-8") as fh:
        return group_from_spec(json.load(fh))


def group_to_spec(G: FiniteGroup) -> dict:
    return {"kind": "cayley", "table": G.table.tolist(), "names": G.names}


def save_group(G: FiniteGroup, path):
    Path(path).write_text(json.dumps(group_to_spec(G)), encoding="utf-8")
