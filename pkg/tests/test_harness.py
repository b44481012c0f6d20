import json

import pytest

from unitcover import constructions as C
from unitcover.groups import Subgroup, subgroup_generated
from unitcover.harness import (CORPUS_SIZE_32, Analyzer, CorpusEntry, abelian_invariant_lists, bounds_report,
                               derived_length_bounds, generate_corpus, lemma_C_expected, run_suite, verify_corollary,
                               verify_lemma_C, verify_prop_D, verify_prop_E, verify_prop_F_k1, verify_thm_A,
                               verify_thm_main)


@pytest.fixture(scope="module")
def an():
    return Analyzer()


def entry(name, G):
    return CorpusEntry(name, G, ["test"])


def test_abelian_enumeration_small():
    lists = abelian_invariant_lists(8)
    assert lists == [[2], [3], [4], [2, 2], [5], [6], [7], [8], [2, 4], [2, 2, 2]]
    # partition counts: 64 = 2^6 has 11 abelian groups
    assert sum(1 for L in abelian_invariant_lists(64, min_order=64)) == 11


def test_corpus_fixtures_and_size():
    c8 = generate_corpus(8, families=["abelian"])
    names = [e.name for e in c8]
    for fx in ("example_G(2)", "Gamma1(2)", "Gamma2(2)"):
        assert any(fx in n for n in names)
    assert len(generate_corpus(32)) == CORPUS_SIZE_32


def test_corpus_deterministic_and_deduplicated():
    a = [(e.name, e.group.digest) for e in generate_corpus(16)]
    b = [(e.name, e.group.digest) for e in generate_corpus(16)]
    assert a == b
    c = generate_corpus(8)
    d4 = [e for e in c if e.name == "D4"][0]
    assert "extraspecial" in d4.tags and "dihedral" in d4.tags


def test_analyzer_keys(an):
    assert an.key(C.abelian([4, 2])) == an.key(C.abelian([2, 4]))
    assert an.exp_gu(C.abelian([2, 2])) == 4
    assert an.multiplier(C.abelian([2, 4, 4])) == [2, 2, 4]


def test_thm_main_examples(an):
    rep = verify_thm_main([entry("G2", C.example_G(2)), entry("D4", C.dihedral(4)), entry("C2xC4", C.abelian([2, 4]))],
                          an)
    assert rep.passed
    d4 = rep.verdicts[1].details
    assert d4["semidirect_checks"] >= 1
    # the clause-i instance for N = <y> in example_G(2)
    G = C.example_G(2)
    N = subgroup_generated(G, [G.names.index("y")])
    assert an.exp_m(G) == 2
    from unitcover.groups import quotient, subgroup_as_group
    S, _ = subgroup_as_group(N)
    Q, _ = quotient(G, N)
    assert (an.exp_gu(S) * an.exp_m(Q)) % an.exp_m(G) == 0


def test_thm_A_examples(an):
    b = derived_length_bounds(C.dihedral(4), an)
    assert (b["d"], b["bound"]) == (2, 32)
    b3 = derived_length_bounds(C.example_G(3), an)
    assert (b3["d"], b3["bound"]) == (2, 81)
    ab = derived_length_bounds(C.abelian([3, 9]), an)
    assert (ab["d"], ab["bound"]) == (1, 9)
    assert derived_length_bounds(C.abelian([2, 4]), an)["bound"] == 4
    rep = verify_thm_A([entry("D4", C.dihedral(4)), entry("G3", C.example_G(3))], an)
    assert rep.passed


@pytest.mark.parametrize("G, expected", [(C.abelian([3, 9]), 9), (C.abelian([4, 4]), 8), (C.abelian([2, 8]), 8),
                                         (C.example_G(3), 9)])
def test_lemma_C_examples(an, G, expected):
    assert lemma_C_expected(G) == expected
    assert verify_lemma_C([entry("g", G)], an).verdicts[0].details["exp_Gu"] == expected


def test_prop_D_examples(an):
    rep = verify_prop_D([entry("ES(3,3)", C.extraspecial(3, 3)), entry("C3xC9", C.abelian([3, 9]))], an)
    assert rep.passed
    assert {v.group for v in rep.verdicts if v.details["kind"] == "regular"} == {"ES(3,3)", "C3xC9"}


def test_corollary(an):
    G = C.dihedral(4)
    N_members, H_members = G.decompositions[0]
    rep = verify_corollary(G, Subgroup(G, N_members), Subgroup(G, H_members), an)
    # N = C4 has no C4 x C4 and H = C2 satisfies the property
    assert rep.verdicts[0].details["hypotheses"] and rep.passed


def test_prop_E_examples(an):
    rep = verify_prop_E([entry("C2^3", C.abelian([2, 2, 2])), entry("D4", C.dihedral(4))], an)
    assert rep.passed
    assert rep.verdicts[0].details["lcm_two_generator"] == 4
    assert rep.verdicts[0].details["exp_Gu"] == 4


def test_prop_F(an):
    rep = verify_prop_F_k1(an)
    assert rep.passed
    assert rep.verdicts[0].details["exp_Gu"] == 4
    assert any("cyclic" in n for n in rep.notes)


def test_bounds_report_rows(an):
    rep = bounds_report([entry("G2", C.example_G(2)), entry("C2xC2", C.abelian([2, 2])),
                         entry("G3", C.example_G(3))], an, max_order=81)
    rows = {r["group"]: r for r in rep["rows"]}
    assert rows["G2"]["thm_A"] == 32 and rows["G2"]["moravec"] == 16
    assert rows["C2xC2"]["exp_M_divides_exp_G"]
    assert rows["G3"]["thm_A"] == rows["G3"]["moravec"] == 81
    claims = {c["claim"]: c for c in rep["claims"]}
    assert claims["p>2, d=2: bounds coincide"]["instances"] == 1
    assert rep["pass"]


def test_report_json_is_deterministic(tmp_path):
    e = [entry("D4", C.dihedral(4)), entry("Q8", C.quaternion8())]
    a = run_suite("thm-main", entries=e, an=Analyzer(use_cache=True, cache_dir=tmp_path)).to_json()
    b = run_suite("thm-main", entries=e, an=Analyzer(use_cache=True, cache_dir=tmp_path)).to_json()
    c = run_suite("thm-main", entries=e, an=Analyzer()).to_json()
    assert a == b == c
    assert any(tmp_path.iterdir())
    doc = json.loads(a)
    assert set(doc) >= {"suite", "params", "pass", "verdicts"}


def test_failure_carries_witness(an):
    from unitcover.harness import Verdict, VerificationReport
    rep = VerificationReport("x", {})
    rep.verdicts.append(Verdict("G", False, {"exp_M": 4, "bound": 2}))
    assert not rep.passed and rep.failures[0].details["exp_M"] == 4
