import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import kernel_set, smith_diagonal_by_minors, span_set
from unitcover.linalg import (AbelianInvariants, FiniteQuotient, IntMatrix, SubgroupLattice, hnf_mod,
                              invariants_from_diagonal, kernel_mod, lcm, perp, smith_invariants, smith_normal_form,
                              solve_mod, sparse_cokernel_invariants, xgcd)

small_int = st.integers(-12, 12)


def matrix(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda s: st.lists(st.lists(small_int, min_size=s[1], max_size=s[1]), min_size=s[0], max_size=s[0]))


def _mul(A, B):
    return (np.array(A, dtype=object) @ np.array(B, dtype=object)).tolist()


@given(st.integers(-500, 500), st.integers(-500, 500))
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert a * x + b * y == g
    assert g == np.gcd(a, b)


def test_lcm():
    assert lcm(4, 6) == 12
    assert lcm() == 1


def test_snf_small():
    D, U, V = smith_normal_form([[2, 4], [4, 2]])
    assert [D[0][0], D[1][1]] == [2, 6]


@settings(max_examples=60, deadline=None)
@given(matrix())
def test_snf_properties(A):
    D, U, V, Vinv = smith_normal_form(A, with_inverse=True)
    assert _mul(_mul(U, A), V) == D
    n = len(A[0])
    assert _mul(V, Vinv) == [[int(i == j) for j in range(n)] for i in range(n)]
    diag = [D[i][i] for i in range(min(len(A), n))]
    assert all(D[i][j] == 0 for i in range(len(A)) for j in range(n) if i != j)
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    assert nz == smith_diagonal_by_minors(A)


def test_smith_invariants_keeps_units():
    assert smith_invariants([[2, 0], [0, 3]]) == [1, 6]


def test_invariants_from_diagonal():
    assert invariants_from_diagonal([4, 6]) == [2, 12]
    assert invariants_from_diagonal([1, 1, 5]) == [5]


def test_abelian_invariants_properties():
    A = AbelianInvariants((2, 4, 4))
    assert A.order == 32 and A.exponent == 4 and A.rank == 3
    assert str(A) == "C2 x C4 x C4"


def test_intmatrix_roundtrip():
    M = IntMatrix.from_dense([[1, 0, 2], [0, 0, 3]])
    assert M.to_dense() == [[1, 0, 2], [0, 0, 3]]
    assert M.nnz == 3
    assert (M @ IntMatrix.from_dense([[1], [1], [1]])).to_dense() == [[3], [3]]


vec_gens = st.lists(st.lists(st.integers(0, 11), min_size=3, max_size=3), max_size=4)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([4, 6, 8, 9, 12]), vec_gens)
def test_lattice_matches_span(M, gens):
    L = SubgroupLattice(M, 3, gens)
    S = span_set(gens, M, 3)
    assert L.order() == len(S)
    assert L.index() * L.order() == M ** 3
    for v in list(S)[:20]:
        assert L.contains(v)
    # canonical form: a different generating set of the same group gives an equal lattice
    assert SubgroupLattice(M, 3, [list(v) for v in S]) == L


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([4, 6, 8]), vec_gens, vec_gens)
def test_lattice_sum_and_intersection(M, g1, g2):
    A, B = SubgroupLattice(M, 3, g1), SubgroupLattice(M, 3, g2)
    SA, SB = span_set(g1, M, 3), span_set(g2, M, 3)
    assert (A + B).order() == len(span_set(g1 + g2, M, 3))
    assert A.intersect(B).order() == len(SA & SB)
    assert A.issubset(A + B)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([4, 6, 9, 12]), st.lists(st.lists(st.integers(0, 11), min_size=3, max_size=3),
                                                 min_size=1, max_size=3))
def test_kernel_matches_brute_force(M, A):
    K = kernel_mod(np.array(A), M)
    assert K.order() == len(kernel_set(A, M))


def test_kernel_example():
    K = kernel_mod(np.array([[2, 4, 0], [0, 3, 6]]), 12)
    assert K.order() == len(kernel_set([[2, 4, 0], [0, 3, 6]], 12))


def test_kernel_compression_on_tall_systems():
    rng = np.random.default_rng(1)
    A = rng.integers(0, 8, size=(200, 5)) * 2
    assert kernel_mod(A, 8).order() == kernel_mod(A, 8, compress=False).order()


def test_solve_mod():
    assert solve_mod(np.array([[2]]), [1], 4) is None
    x = solve_mod(np.array([[2, 1], [0, 3]]), [5, 3], 7)
    assert ((np.array([[2, 1], [0, 3]]) @ np.array(x) - [5, 3]) % 7 == 0).all()


def test_hnf_canonical_and_reduced():
    B, piv = hnf_mod([[2, 4], [0, 6]], 8, 2)
    assert all(0 < B[i, p] < 8 for i, p in enumerate(piv))


def test_finite_quotient():
    big = SubgroupLattice.full(12, 2)
    small = SubgroupLattice(12, 2, [[2, 0], [0, 3]])
    Q = FiniteQuotient(big, small)
    assert Q.invariants.factors == (6,)
    g = Q.generators[0]
    assert Q.coordinates(g) == (1,)
    assert Q.coordinates((2 * g) % 12) == (2,)


def test_finite_quotient_rejects_non_subgroup():
    with pytest.raises(ValueError):
        FiniteQuotient(SubgroupLattice(4, 1, [[2]]), SubgroupLattice(4, 1, [[1]]))


def test_perp():
    # H = Z/2 + Z/4, K = <(1, 2)>: characters c with c1/2 + 2 c2/4 = 0
    P = perp([2, 4], [[1, 2]])
    assert P.order() == 4
    assert perp([2, 4], []).order() == 8


def test_sparse_cokernel():
    cols = [{0: 2}, {1: 3}, {0: 1, 1: 1}]
    assert sparse_cokernel_invariants(cols, 2, 100) == []
    assert sparse_cokernel_invariants([{0: 4}, {1: 6}], 2, 120) == [2, 12]
    # a free summand shows up as the modulus
    assert sparse_cokernel_invariants([{0: 4}], 2, 120) == [4, 120]
