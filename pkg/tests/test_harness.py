import json

import pytest

from ringprops.annprop import check_module_property, check_ring_property, replay
from ringprops.finmod import regular_module
from ringprops.harness import (THEOREM_IDS, CorpusSpec, corpus_from_descriptions,
                               find_separation, generate_corpus, report_violations,
                               run_theorem_suite)
from ringprops.harness.corpus import named_ring
from ringprops.harness.separation import resolve_level


def test_default_corpus_contents(corpus):
    names = [e.name for e in corpus]
    assert len(corpus) >= 40 and not corpus.skipped
    assert len(set(names)) == len(names)
    for n in ["Z(12)", "Z(6,6)", "Z12_R", "T2(Z2)_R", "T2(Z3)_R", "M2(Z2)_R", "Z2xZ2_R",
              "Z2xZ4_R", "Z4^2"]:
        assert n in names
    assert any(e.family == "quotient" for e in corpus)


def test_corpus_is_deterministic(corpus):
    again = generate_corpus()
    assert [e.name for e in again] == [e.name for e in corpus]
    assert [e.description for e in again] == [e.description for e in corpus]


def test_empty_and_tiny_specs():
    assert len(generate_corpus(CorpusSpec.empty())) == 0
    tiny = generate_corpus(CorpusSpec.with_cap(1))
    assert len(tiny) > 0 and all(e.module.order == 1 for e in tiny)
    assert tiny.skipped  # every nonzero structure is skipped with a notice


def test_spec_json_roundtrip():
    spec = CorpusSpec(z_cyclic_max=3, named_rings=("M2(Z2)",))
    assert CorpusSpec.from_json(json.loads(json.dumps(spec.to_json()))) == spec
    with pytest.raises(ValueError):
        CorpusSpec.from_json({"bogus": 1})


def test_corpus_from_descriptions():
    c = corpus_from_descriptions([{"kind": "cyclic", "n": 4},
                                  {"kind": "z_module", "orders": [2, 2]}])
    assert [e.family for e in c] == ["regular", "z_module"]
    assert len(c.rings()) == 1


def test_registry_has_17_checks():
    assert len(THEOREM_IDS) == 17 == len(set(THEOREM_IDS))


def test_suite_subset_report_shape():
    c = generate_corpus(CorpusSpec(z_cyclic_max=6, z_pair_max=3, regular_cyclic_max=6,
                                   named_rings=("T2(Z2)",), quotients=False, free_ring_max=2))
    report = run_theorem_suite(c, ["HIER", "UD1P", "SPEQ"])
    assert [t["id"] for t in report["theorems"]] == ["HIER", "UD1P", "SPEQ"]
    for t in report["theorems"]:
        assert set(t) >= {"id", "tested", "hypothesis_met", "violations", "skipped"}
        assert t["tested"] > 0
    assert report_violations(report) == 0
    assert "total" in report["timing"]


def test_suite_unknown_id():
    with pytest.raises(ValueError):
        run_theorem_suite(generate_corpus(CorpusSpec.empty()), ["NOPE"])


def test_ud1p_on_z4_hypothesis_not_met():
    c = corpus_from_descriptions([{"kind": "z_module", "orders": [4]}])
    t = run_theorem_suite(c, ["UD1P"])["theorems"][0]
    assert t["tested"] == 1 and t["hypothesis_met"] == 0 and not t["violations"]


def test_speq_on_z2_z2():
    c = corpus_from_descriptions([{"kind": "z_module", "orders": [2, 2]}])
    t = run_theorem_suite(c, ["SPEQ"])["theorems"][0]
    assert t["hypothesis_met"] == 1 and not t["violations"]


def test_report_is_deterministic():
    spec = CorpusSpec(z_cyclic_max=4, z_pair_max=2, regular_cyclic_max=4, named_rings=(),
                      quotients=False, free_ring_max=2)
    a = run_theorem_suite(generate_corpus(spec))
    b = run_theorem_suite(generate_corpus(spec))
    a.pop("timing"), b.pop("timing")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_separations(corpus):
    s = find_separation("endo_aip", "centrally_endo_aip", corpus)
    assert s.entry.name == "T2(Z2)_R" and s.replay()
    s = find_separation("ring:centrally_aip", "ring:abelian", corpus)
    assert s.entry.name == "M2(Z2)_R" and s.level == "ring" and s.replay()
    s = find_separation("abelian", "endo_aip", corpus)
    assert s.entry.name == "Z(4)" and s.fails.witness["submodule"] == [[0], [2]]
    assert s.replay()
    assert find_separation("centrally_endo_aip", "rickart", corpus) is None


def test_resolve_level():
    assert resolve_level("endo_aip", "rickart")[0] == "module"
    assert resolve_level("centrally_aip", "abelian")[0] == "ring"
    with pytest.raises(ValueError):
        resolve_level("ring:endo_aip", "abelian")
    with pytest.raises(ValueError):
        resolve_level("ring:abelian", "module:abelian")


def test_named_rings_build():
    for n in ("T2(Z2)", "T2(Z3)", "M2(Z2)", "Z2xZ2", "Z2xZ4"):
        assert named_ring(n).order in (4, 8, 16, 27)
    with pytest.raises(KeyError):
        named_ring("nope")


def test_cross_level_consistency_on_corpus_rings(corpus):
    for r in corpus.rings():
        a = check_ring_property(r, "centrally_aip")
        b = check_module_property(regular_module(r), "centrally_endo_aip")
        assert a.holds == b.holds, r.name
        for v, s in ((a, r), (b, regular_module(r))):
            assert replay(s, v)
