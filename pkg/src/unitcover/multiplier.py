"""The Schur multiplier from integral homology, and the standard map of a
central extension.

The homology route is independent of the cocycle pipeline: H_2(G; Z) is
the torsion of the cokernel of d_3 in the normalized bar complex, since
C_2 / im d_3 = H_2 (+) im d_2 with im d_2 free.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cocycles import CocycleSpaces, compute_spaces, unitarize
from .groups import FiniteGroup, GroupSizeError
from .linalg import AbelianInvariants, SubgroupLattice, sparse_cokernel_invariants

HOMOLOGY_LIMIT = 32


@dataclass(frozen=True)
class HomologyResult:
    invariants: AbelianInvariants
    method: str = "bar-resolution"


def bar_boundary3(G: FiniteGroup) -> tuple[list[dict[int, int]], int]:
    """Columns of d_3 on normalized chains: [g|h|k] -> [h|k] - [gh|k] + [g|hk] - [g|h].

    Chains with an identity entry vanish; [g|h] with g, h != 1 is row
    (g-1)(n-1) + (h-1).
    """
    n = G.order
    T = G.table
    m = n - 1
    cols = []
    for g in range(1, n):
        for h in range(1, n):
            gh = int(T[g, h])
            for k in range(1, n):
                hk = int(T[h, k])
                col: dict[int, int] = {}
                for a, b, s in ((h, k, 1), (gh, k, -1), (g, hk, 1), (g, h, -1)):
                    if a and b:
                        r = (a - 1) * m + (b - 1)
                        v = col.get(r, 0) + s
                        if v:
                            col[r] = v
                        else:
                            col.pop(r, None)
                cols.append(col)
    return cols, m * m


def schur_multiplier_homology(G: FiniteGroup, limit: int = HOMOLOGY_LIMIT) -> HomologyResult:
    """H_2(G; Z) via the normalized bar complex (order <= 32)."""
    if G.order > limit:
        raise GroupSizeError(f"the homology oracle is limited to order {limit}")
    if G.order <= 2:
        return HomologyResult(AbelianInvariants(()))
    cols, nrows = bar_boundary3(G)
    m = G.order ** 2
    inv = sparse_cokernel_invariants(cols, nrows, m)
    return HomologyResult(AbelianInvariants(tuple(d for d in inv if 1 < d < m)))


def standard_map_image(ext, spaces: CocycleSpaces | None = None) -> SubgroupLattice:
    """Image of the standard map lambda -> [lambda o omega] as a subgroup of M(G).

    The result is a lattice in Z^k (k = number of invariant factors of
    M(G)) with modulus exp M(G); coordinate i is read modulo d_i.
    """
    G = ext.base
    sp = spaces or compute_spaces(G)
    inv = sp.multiplier_invariants.factors
    e = max(inv) if inv else 1
    k = len(inv)
    rows = []
    for alpha in ext.dual_cocycles():
        beta = unitarize(alpha)
        c = sp.class_coordinates(beta)
        rows.append([x * (e // d) for x, d in zip(c, inv)])
    rows += [[e if i == j else 0 for j in range(k)] for i in range(k)]
    # coordinates are scaled by e/d_i so that the ambient is (Z/e)^k
    return SubgroupLattice(e, k, np.array(rows, dtype=np.int64).reshape(len(rows), k) if k else np.zeros((0, 0), dtype=np.int64))


def standard_map_is_onto(ext, spaces: CocycleSpaces | None = None) -> bool:
    G = ext.base
    sp = spaces or compute_spaces(G)
    inv = sp.multiplier_invariants.factors
    if not inv:
        return True
    img = standard_map_image(ext, sp)
    return img.order() == sp.multiplier_invariants.order
