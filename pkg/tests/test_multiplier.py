import pytest

from unitcover import constructions as C
from unitcover.cocycles import compute_spaces
from unitcover.extensions import example_extensions, extension_from_quotient, mu_cover, schur_cover
from unitcover.groups import GroupSizeError, Subgroup
from unitcover.multiplier import bar_boundary3, schur_multiplier_homology, standard_map_image, standard_map_is_onto


@pytest.mark.parametrize("G, expected", [
    (C.abelian([2, 2]), (2,)), (C.quaternion8(), ()), (C.abelian([2, 4, 4]), (2, 2, 4)), (C.cyclic(7), ()),
    (C.dihedral(4), (2,)), (C.dihedral(3), ()), (C.abelian([3, 3]), (3,)), (C.burnside23(), (3, 3)),
])
def test_homology_known_values(G, expected):
    assert schur_multiplier_homology(G).invariants.factors == expected


def test_homology_agrees_with_cocycles_on_example():
    G = C.example_G(2)
    assert schur_multiplier_homology(G).invariants == compute_spaces(G).multiplier_invariants


def test_homology_limit():
    with pytest.raises(GroupSizeError):
        schur_multiplier_homology(C.example_Gamma2(2))


def test_bar_boundary_composes_to_zero():
    G = C.dihedral(3)
    n = G.order
    cols, nrows = bar_boundary3(G)
    assert nrows == (n - 1) ** 2 and len(cols) == (n - 1) ** 3
    for col in cols:
        # d2 [g|h] = [h] - [gh] + [g] on normalized 1-chains
        image = {}
        for r, v in col.items():
            g, h = r // (n - 1) + 1, r % (n - 1) + 1
            for x, s in ((h, 1), (G.mul(g, h), -1), (g, 1)):
                if x:
                    image[x] = image.get(x, 0) + s * v
        assert not any(image.values())


def test_standard_map_trivial_extension():
    G = C.abelian([2, 2])
    P = C.direct_product(G, C.cyclic(2))
    # kernel: the C2 factor
    A = Subgroup(P, P.decompositions[1][0])
    ext = extension_from_quotient(P, A, G)
    assert standard_map_image(ext).order() == 1
    assert not standard_map_is_onto(ext)


def test_standard_map_example_Gamma2_onto():
    _, e2 = example_extensions(2)
    assert standard_map_is_onto(e2)


def test_standard_map_mu_cover_image_is_mu():
    G = C.abelian([2, 4, 4])
    sp = compute_spaces(G)
    mu = (1, 0, 2)
    ext = mu_cover(G, mu, sp)
    img = standard_map_image(ext, sp)
    inv = sp.multiplier_invariants.factors
    e = max(inv)
    gen = [m * (e // d) % e for m, d in zip(mu, inv)]
    assert img.contains(gen)
    assert img.order() == sp.class_order(sp.representative(mu))


def test_schur_cover_map_is_onto():
    ext = schur_cover(C.abelian([2, 2, 2]))
    assert standard_map_is_onto(ext)
    assert ext.kernel_invariants.factors == (2, 2, 2)
