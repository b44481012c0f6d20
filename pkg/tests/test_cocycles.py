import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import dense_spaces
from unitcover import constructions as C
from unitcover.cocycles import (Cocycle, coboundary, coefficient_modulus, compute_spaces, conjugation_power_check,
                                inflation, inflation_test, unitarize)
from unitcover.groups import GroupError, center, quotient, subgroup_generated

SMALL = {
    "C4": C.cyclic(4),
    "C2xC2": C.abelian([2, 2]),
    "D3": C.dihedral(3),
    "D4": C.dihedral(4),
    "Q8": C.quaternion8(),
    "C2xC4": C.abelian([2, 4]),
}


def random_cocycle(sp, rng):
    """A random normalized cocycle: random Z^2 combination plus a random normalized coboundary."""
    G, M = sp.group, sp.modulus
    n = G.order
    vals = np.zeros((n, n), dtype=np.int64)
    for u in sp.edge_kernel.basis:
        vals += int(rng.integers(0, M)) * sp.gauge.cocycle_values(u, M)
    z = rng.integers(0, M, size=n)
    z[0] = 0
    return Cocycle(G, M, vals + coboundary(G, z, M))


@pytest.mark.parametrize("name", sorted(SMALL))
def test_spaces_match_dense_oracle(name):
    G = SMALL[name]
    sp = compute_spaces(G)
    Z2, Zu = dense_spaces(G, sp.modulus)
    assert sp.Z2 == Z2
    assert sp.Zu == Zu


def test_dense_oracle_on_example_G2():
    G = C.example_G(2)
    sp = compute_spaces(G)
    Z2, Zu = dense_spaces(G, sp.modulus)
    assert sp.Zu == Zu
    assert Zu.exponent() == sp.zu_exponent == 8


@pytest.mark.parametrize("G, expected", [
    (C.cyclic(6), ()), (C.abelian([2, 2]), (2,)), (C.abelian([3, 3]), (3,)), (C.quaternion8(), ()),
    (C.dihedral(4), (2,)), (C.dihedral(3), ()), (C.dihedral(6), (2,)), (C.abelian([2, 2, 2]), (2, 2, 2)),
    (C.burnside23(), (3, 3)), (C.abelian([2, 4, 4]), (2, 2, 4)), (C.generalized_quaternion(16), ()),
])
def test_known_multipliers(G, expected):
    assert compute_spaces(G).multiplier_invariants.factors == expected


def test_coefficient_modulus():
    assert coefficient_modulus(C.dihedral(4)) == 32


def test_bu_inside_zu_and_b2():
    sp = compute_spaces(C.dihedral(4))
    assert sp.Bu.issubset(sp.Zu)
    assert sp.Bu.issubset(sp.B2)
    assert sp.Zu.issubset(sp.Z2)
    assert sp.Zu.order() // sp.Bu.order() == sp.multiplier_invariants.order


@pytest.mark.parametrize("name", ["D4", "C2xC4", "Q8"])
def test_modulus_stability(name):
    """Doubling the coefficient modulus does not change M(G) or exp Z_u."""
    G = SMALL[name]
    sp = compute_spaces(G)
    sp2 = compute_spaces(G, modulus=2 * sp.modulus)
    assert sp2.multiplier_invariants == sp.multiplier_invariants
    assert sp2.zu_exponent == sp.zu_exponent


def test_modulus_stability_example_G2():
    G = C.example_G(2)
    sp = compute_spaces(G)
    sp2 = compute_spaces(G, modulus=3 * sp.modulus)
    assert sp2.multiplier_invariants == sp.multiplier_invariants
    assert sp2.zu_exponent == sp.zu_exponent


@pytest.mark.parametrize("name", sorted(SMALL))
def test_unitarize_idempotent_and_cohomologous(name):
    sp = compute_spaces(SMALL[name])
    rng = np.random.default_rng(7)
    for _ in range(5):
        a = random_cocycle(sp, rng)
        b = unitarize(a)
        assert b.is_unitary() and b.is_cocycle()
        assert unitarize(b) == b
        # a - b = d(xi) with xi valued in the (M exp G)-th roots of unity
        big = compute_spaces(sp.group, modulus=sp.modulus * sp.group.exponent)
        assert big.B2.contains((a - b).to_modulus(big.modulus).values.ravel())
        assert sp.class_coordinates(a) == sp.class_coordinates(b)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(SMALL)), st.integers(0, 2 ** 32 - 1))
def test_cocycle_identity_fuzz(name, seed):
    """Random normalized functions pass is_cocycle exactly when they lie in Z^2."""
    G = SMALL[name]
    sp = compute_spaces(G)
    M, n = sp.modulus, G.order
    rng = np.random.default_rng(seed)
    vals = rng.integers(0, M, size=(n, n))
    vals[0, :] = 0
    vals[:, 0] = 0
    a = Cocycle(G, M, vals)
    assert a.is_cocycle() == sp.Z2.contains(vals.ravel())
    good = random_cocycle(sp, rng)
    assert good.is_cocycle()
    assert sp.Z2.contains(good.values.ravel())


def test_lemma_iv_on_zu_basis():
    for G in (C.dihedral(4), C.quaternion8(), C.example_G(2), C.dihedral(6)):
        sp = compute_spaces(G)
        for beta in sp.zu_generators():
            assert beta.is_unitary()
            for x in range(G.order):
                for g in range(G.order):
                    assert conjugation_power_check(beta, x, g)


def test_conjugation_power_check_negative_control():
    G = C.dihedral(4)
    assert conjugation_power_check(Cocycle.trivial(G, 8), 1, 4)
    bad = np.zeros((8, 8), dtype=np.int64)
    bad[1, 4] = 1
    assert not conjugation_power_check(Cocycle(G, 8, bad), 1, 4)


def test_coordinates_round_trip():
    sp = compute_spaces(C.example_G(2))
    for beta in sp.zu_generators():
        v = sp.coordinates_of(beta)
        assert sp.cocycle(v) == beta
    with pytest.raises(GroupError):
        bad = Cocycle(sp.group, sp.modulus, np.ones((sp.group.order, sp.group.order), dtype=np.int64))
        sp.coordinates_of(bad)


def test_class_arithmetic():
    sp = compute_spaces(C.abelian([2, 4, 4]))
    inv = sp.multiplier_invariants.factors
    for i, b in enumerate(sp.generators):
        assert sp.class_order(b) == inv[i]
        e = tuple(int(i == j) for j in range(len(inv)))
        assert sp.class_coordinates(b) == e
    r = sp.representative((1, 1, 3))
    assert sp.class_coordinates(r) == (1, 1, 3)
    assert sp.classes_equal(r + sp.bu_generators()[3], r)


def test_cocycle_arithmetic_and_moduli():
    G = C.abelian([2, 2])
    a = Cocycle(G, 4, np.ones((4, 4), dtype=np.int64) * 2)
    assert a.order() == 2
    assert a.reduced().modulus == 2
    assert (a + a).order() == 1
    assert a.to_modulus(8) == a
    with pytest.raises(GroupError):
        Cocycle(G, 4, np.ones((4, 4), dtype=np.int64)).to_modulus(2)


def test_restriction_and_inflation():
    G = C.dihedral(4)
    sp = compute_spaces(G)
    H = subgroup_generated(G, [1])
    res = sp.generators[0].restriction(H)
    assert res.is_cocycle()
    Z = center(G)
    Q, proj = quotient(G, Z)
    spQ = compute_spaces(Q)
    gamma = spQ.generators[0]
    inf = inflation(gamma, G, proj)
    assert inf.is_cocycle()
    back = inflation_test(inf, Z)
    assert back is not None
    g2, Q2, _ = back
    assert spQ.classes_equal(g2.to_modulus(spQ.modulus), gamma)


def test_size_limit():
    from unitcover.groups import GroupSizeError
    with pytest.raises(GroupSizeError):
        compute_spaces(C.example_Gamma2(2), limit=32)
