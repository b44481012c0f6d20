"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import time

import numpy as np
import pytest

from unitcover import constructions as C
from unitcover.cocycles import Cocycle, compute_spaces, conjugation_power_check, unitarize
from unitcover.extensions import example_extensions, extension_exponent, plp_check, schur_cover, unitary_cover_exponent
from unitcover.harness import (Analyzer, abelian_invariant_lists, bounds_report, generate_corpus, lemma_C_expected,
                               verify_prop_E, verify_prop_F_k1, verify_thm_A, verify_thm_main)
from unitcover.linalg import invariants_from_diagonal
from unitcover.multiplier import schur_multiplier_homology


@pytest.fixture(scope="module")
def an():
    return Analyzer()


def abelian_multiplier_formula(inv):
    """(+)_i C_{d_i}^{n-i} for invariant factors d_1 | ... | d_n."""
    n = len(inv)
    parts = [d for i, d in enumerate(inv, start=1) for _ in range(n - i)]
    return tuple(invariants_from_diagonal(parts))


def test_criterion_1_abelian_formula(record):
    t = time.time()
    bad = []
    lists = abelian_invariant_lists(64)
    for inv in lists:
        got = compute_spaces(C.abelian(inv)).multiplier_invariants.factors
        if got != abelian_multiplier_formula(inv):
            bad.append((inv, got))
    elapsed = time.time() - t
    ok = not bad and elapsed < 60
    record(1, ok, f"{len(lists)} abelian groups, {len(bad)} mismatches, {elapsed:.1f}s")
    assert not bad
    assert elapsed < 60


def test_criterion_2_homology_oracle(record):
    t = time.time()
    entries = generate_corpus(32)
    bad = []
    checked = 0
    for e in entries:
        if e.order > 32:
            continue
        checked += 1
        a = compute_spaces(e.group).multiplier_invariants
        b = schur_multiplier_homology(e.group).invariants
        if a != b:
            bad.append((e.name, a.factors, b.factors))
    elapsed = time.time() - t
    ok = not bad and elapsed < 600
    record(2, ok, f"{checked} groups, {len(bad)} mismatches, {elapsed:.1f}s")
    assert not bad, bad
    assert elapsed < 600


def worked_example_checks(p):
    G = C.example_G(p)
    sp = compute_spaces(G)
    e1, e2 = example_extensions(p)
    cover = schur_cover(G, sp)
    got = {
        "exp M(G)": sp.multiplier_invariants.exponent,
        "Schur cover exponent": extension_exponent(cover),
        "Gamma2 plp": plp_check(e2, sp),
        "exp Gamma2": extension_exponent(e2),
        "exp Gamma_u(G)": unitary_cover_exponent(G, sp),
    }
    want = {"exp M(G)": p, "Schur cover exponent": p ** 3, "Gamma2 plp": True, "exp Gamma2": p * p}
    failed = [k for k in want if got[k] != want[k]]
    if (p * p) % got["exp Gamma_u(G)"]:
        failed.append("exp Gamma_u(G) | p^2")
    return got, failed


def test_criterion_3_worked_example(record):
    t = time.time()
    got2, failed2 = worked_example_checks(2)
    got3, failed3 = worked_example_checks(3)
    elapsed = time.time() - t
    ok = not failed2 and not failed3
    detail = f"p=2 {got2} failed {failed2}; p=3 {got3} failed {failed3}; {elapsed:.1f}s"
    record(3, ok, detail)
    # the p = 3 part and its time budget hold independently
    assert not failed3 and elapsed < 1800
    # at p = 2 the group built from the stated presentation of Gamma2 has
    # exponent 8, and exp Z_u(G) = 8 (confirmed by the dense oracle); these
    # sub-checks fail and are reported, not patched
    assert not failed2, f"p=2 sub-checks failed: {failed2} with values {got2}"


def test_criterion_4_lemma_C(record, an):
    bad = []
    count = 0
    for inv in abelian_invariant_lists(81):
        n = int(np.prod(inv))
        odd = n % 2 == 1
        two = n & (n - 1) == 0
        if not (odd or (two and n <= 64)):
            continue
        G = C.abelian(inv)
        want = lemma_C_expected(G)
        got = an.exp_gu(G)
        count += 1
        if got != want:
            bad.append((inv, got, want))
    record(4, not bad, f"{count} abelian groups, {len(bad)} violations")
    assert not bad, bad


def test_criterion_5_theorem_B(record, an):
    rep = verify_thm_main(generate_corpus(32), an, 32)
    viol = [(v.group, w) for v in rep.verdicts for w in v.details["violations"] if not (w.get("i", True)
                                                                                       and w.get("ii", True))]
    record(5, not viol, f"{len(rep.verdicts)} groups, {sum(v.details['normal_subgroups'] for v in rep.verdicts)} "
                        f"(G, N) pairs, {len(viol)} violations of i-ii")
    assert not viol, viol


def test_criterion_6_theorem_A(record, an):
    entries = generate_corpus(64)
    rep = verify_thm_A(entries, an, 64)
    bounds = bounds_report(entries, an, 64)
    # the p > 2, d = 2 comparison needs an instance; G(3) has order 81
    g3 = bounds_report([e for e in generate_corpus(81) if e.order == 81], an, 81)
    claims = {c["claim"]: c for c in bounds["claims"]}
    for c in g3["claims"]:
        if c["instances"]:
            claims[c["claim"]] = {**c, "instances": c["instances"] + claims[c["claim"]]["instances"],
                                  "holds": c["holds"] and claims[c["claim"]]["holds"]}
    claims_ok = all(c["holds"] for c in claims.values())
    coincide = claims["p>2, d=2: bounds coincide"]
    ok = rep.passed and claims_ok and coincide["instances"] > 0
    record(6, ok, f"{len(rep.verdicts)} p-groups, {len(rep.failures)} failures; claims "
                  + ", ".join(f"[{k}: {c['instances']}]" for k, c in claims.items()))
    assert rep.passed, [v.to_dict() for v in rep.failures]
    assert claims_ok and coincide["instances"] > 0


def test_criterion_7_prop_E(record, an):
    rep = verify_prop_E(generate_corpus(32), an, 32)
    record(7, rep.passed, f"{len(rep.verdicts)} groups, {len(rep.failures)} violations")
    assert rep.passed, [v.to_dict() for v in rep.failures]


def test_criterion_8_prop_F(record, an):
    t = time.time()
    rep = verify_prop_F_k1(an)
    elapsed = time.time() - t
    d = {v.group: (v.details["exp_M"], v.details["exp_Gu"]) for v in rep.verdicts}
    ok = rep.passed and elapsed < 600 and d["R(2,2)=C2xC2"] == (2, 4)
    record(8, ok, f"(exp M, exp Gamma_u): {d}, {elapsed:.1f}s")
    assert ok


def test_criterion_9_property_suites(record):
    rng = np.random.default_rng(2024)
    failures = []
    # cocycle identity fuzz
    for G in (C.abelian([2, 2]), C.dihedral(3), C.quaternion8(), C.abelian([2, 4])):
        sp = compute_spaces(G)
        M, n = sp.modulus, G.order
        for _ in range(50):
            v = rng.integers(0, M, size=(n, n))
            v[0, :] = 0
            v[:, 0] = 0
            if Cocycle(G, M, v).is_cocycle() != sp.Z2.contains(v.ravel()):
                failures.append(("fuzz", G.order))
    # o(x) (beta(x,g) - beta(g,x^g)) = 0 on all Zu basis vectors, groups of order <= 24
    for e in generate_corpus(24):
        if e.order > 24:
            continue
        G = e.group
        sp = compute_spaces(G)
        o = G.element_orders
        X, Y = np.meshgrid(np.arange(G.order), np.arange(G.order), indexing="ij")
        XG = G.conj(X, Y)
        for beta in sp.zu_generators():
            b = beta.values
            if ((o[X] * (b[X, Y] - b[Y, XG])) % beta.modulus).any():
                failures.append(("conjugation power", e.name))
                break
        # spot check the scalar helper against the vectorized identity
        for beta in sp.zu_generators()[:2]:
            x, g = (int(t) for t in rng.integers(0, G.order, size=2))
            if not conjugation_power_check(beta, x, g):
                failures.append(("conjugation power scalar", e.name))
    # unitarize idempotence and class preservation
    for G in (C.abelian([2, 2]), C.dihedral(4), C.abelian([3, 3])):
        sp = compute_spaces(G)
        for _ in range(5):
            vals = sum(int(rng.integers(0, sp.modulus)) * sp.gauge.cocycle_values(u, sp.modulus)
                       for u in sp.edge_kernel.basis)
            z = rng.integers(0, sp.modulus, size=G.order)
            z[0] = 0
            a = Cocycle(G, sp.modulus, vals) + Cocycle.coboundary(G, z, sp.modulus)
            b = unitarize(a)
            if not (b.is_unitary() and unitarize(b) == b and sp.classes_equal(a, b)):
                failures.append(("unitarize", G.order))
    # modulus stability
    for G in (C.dihedral(4), C.example_G(2), C.abelian([2, 4, 4])):
        sp = compute_spaces(G)
        sp2 = compute_spaces(G, modulus=2 * sp.modulus)
        if (sp.multiplier_invariants, sp.zu_exponent) != (sp2.multiplier_invariants, sp2.zu_exponent):
            failures.append(("modulus", G.order))
    record(9, not failures, f"{len(failures)} failures {failures[:5]}")
    assert not failures
