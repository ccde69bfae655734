import pytest

import powergenus.catalog as cat
import powergenus.classifier as cls
import powergenus.groups as gr
from powergenus.errors import OrderCapExceeded, UnknownRule
from powergenus.genus import Budget


def test_reduction_set_q16():
    q16 = gr.dicyclic(4)
    s = cls.reduction_set(q16)
    assert len(s) == 8 and s.is_subgroup()  # the unique Z8
    orders = q16.element_orders()
    assert {int(orders[x]) for x in range(16) if x not in s} == {4}


def test_reduction_set_z2xz6():
    g = cat.get("[12,5]")
    assert len(cls.reduction_set(g)) == 12  # three hexagons cover the group


def test_reduction_set_s3():
    assert len(cls.reduction_set(gr.symmetric(3))) == 1


def test_orientable_examples():
    v = cls.classify_orientable(cat.get("[8,1]"))
    assert v.orientable == "two" and v.table1_label == "[8,1]"

    v = cls.classify_orientable(cat.get("[12,5]"))
    assert v.orientable == "two" and v.table1_label == "[12,5]"
    assert any(s.rule_id == "L4.3" for s in v.trail)
    assert any(s.rule_id == "T3.3" for s in v.trail)

    assert cls.classify_orientable(gr.cyclic(12)).orientable == "at_least_three"
    assert cls.classify_orientable(gr.symmetric(3)).orientable == "planar"
    assert cls.classify_orientable(gr.dihedral(12)).orientable == "one"
    assert cls.classify_orientable(gr.cyclic(7)).orientable == "other_with_bounds"


def test_nonorientable_examples():
    v = cls.classify_nonorientable(cat.get("[12,5]"))
    assert v.nonorientable == "not_two"
    assert any(s.rule_id == "L5.2" for s in v.trail)

    v = cls.classify_nonorientable(gr.cyclic(8))
    assert v.nonorientable == "not_two"
    assert any(s.rule_id == "L5.1" for s in v.trail)

    assert cls.classify_nonorientable(gr.cyclic(4)).nonorientable == "planar"
    v = cls.classify_nonorientable(gr.dihedral(10))
    assert v.nonorientable == "one" and v.nonorientable_value == 1


def test_never_exact_two_nonorientable():
    for e in cat.entries():
        v = cls.classify_nonorientable(cat.get(e.label))
        assert not (v.nonorientable == "exact" and v.nonorientable_value == 2)
        assert v.nonorientable_value != 2


def test_table1_exactly():
    twos = []
    for e in cat.entries():
        v = cls.classify_orientable(cat.get(e.label))
        if v.orientable == "two":
            twos.append((e.label, v.table1_label))
    assert sorted(lbl for lbl, _ in twos) == sorted(cat.TABLE1_LABELS)
    assert all(lbl == named for lbl, named in twos)


def test_trail_replay():
    for label in ("[8,1]", "[12,5]", "Z12", "S4", "[72,43]"):
        v = cls.classify(cat.get(label))
        assert cls.replay_trail(v.trail)
        # a corrupted conclusion is detected
        bad = cls.CertificateStep(v.trail[0].rule_id, v.trail[0].inputs,
                                  "something else")
        assert not cls.replay_trail([bad])


def test_replay_unknown_rule():
    with pytest.raises(UnknownRule):
        cls.replay_step(cls.CertificateStep("L99", {}, "x"))


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        cls.classify_orientable(gr.cyclic(145))
    with pytest.raises(OrderCapExceeded):
        cls.classify_nonorientable(gr.cyclic(145))


def test_verify_lemma_registry():
    for rule in cls.LEMMA_REGISTRY:
        report = cls.verify_lemma(rule)
        assert report.passed, (rule, report.witnesses)
    with pytest.raises(UnknownRule):
        cls.verify_lemma("L9.9")


def test_lemma_31_scan_size():
    report = cls.verify_lemma("L3.1")
    assert report.scanned == 24 and not report.witnesses


def test_cross_validate_consistency():
    budget = Budget(max_nodes=200_000, max_seconds=60)
    for g in (gr.symmetric(3), gr.cyclic(7), cat.get("D12"),
              cat.get("[12,5]")):
        report = cls.cross_validate(g, budget)
        assert report["status"] in ("consistent", "consistent-with"), report


def test_cross_validate_bounds_only():
    # a tiny budget forces bound-only engine results on the K8 block
    report = cls.cross_validate(gr.cyclic(8), Budget(max_nodes=20,
                                                     max_seconds=60))
    assert report["status"] == "consistent-with"
    assert not report["exact"]


def test_verdict_record_stable():
    g = cat.get("[18,3]")
    v = cls.classify(g)
    rec = cls.verdict_record("[18,3]", g, v)
    assert rec.startswith("label=[18,3] order=18 spectrum={1,2,3,6}")
    assert "orientable=two" in rec and "table1=[18,3]" in rec


def test_planarity_criterion_matches_spectrum():
    from powergenus.genus import is_planar
    from powergenus.powergraph import power_graph
    for e in cat.entries():
        g = cat.get(e.label)
        planar = is_planar(power_graph(g)).planar
        assert planar == gr.order_spectrum(g).subset_of({1, 2, 3, 4})
