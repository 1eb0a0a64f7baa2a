import json

import pytest

from wcore.inverses import Weight
from wcore.linalg import DimensionMismatch, Matrix
from wcore.theorems import (
    AUXILIARY,
    REGISTRY,
    TheoremId,
    Verdict,
    check,
    generate_instance,
    roles,
    run_suite,
)
from wcore import generators as g

from .conftest import M

I2 = Weight.identity(2)


def test_registry_has_all_theorems_and_excludes_variants():
    assert len(REGISTRY) == 21
    assert not set(AUXILIARY) & set(REGISTRY)


def test_add_core_on_orthogonal_projectors():
    rep = check(TheoremId.ADD_CORE, {"a": Matrix.diag([1, 0]), "b": Matrix.diag([0, 1]), "m": I2})
    assert rep.overall is Verdict.PASS
    formula = rep.conclusions[-1]
    assert formula.lhs == formula.rhs == Matrix.identity(2)


def test_additive_counterexample_pattern():
    inst = {"a": M([1, 2], [0, 0]), "b": M([-1, 3], [0, 0]), "m": Weight(Matrix.diag([1, 5]))}
    rep = check(TheoremId.ADD_CORE, inst)
    assert rep.overall is Verdict.HYPOTHESIS_NOT_MET
    assert not rep.hypothesis("ab = 0")
    assert not rep.conclusion("a+b in R^(#,m)")
    assert not rep.converse_witness


def test_rol_suff_with_b_equal_a_is_power_rule():
    cfg = g.GenConfig(dim=3, seed=2)
    rng = g.rng_for(cfg, "b=a")
    m = g.random_pd_weight(cfg, rng)
    a = g.gen_core_invertible(cfg, rng, m)
    rep = check(TheoremId.ROL_SUFF, {"a": a, "b": a, "m": m})
    assert rep.overall is Verdict.PASS
    assert rep.conclusion("(a^(#,m))^2 = (a^2)^(#,m)")


def test_rol_converse_pattern():
    inst = {"a": Matrix.diag([1, 0]), "b": M([-1, 1], [0, 0]), "m": Weight(Matrix.diag([1, 2]))}
    rep = check(TheoremId.ROL_SUFF, inst)
    assert rep.conclusion("(ab)^(#,m) = b^(#,m) a^(#,m)")
    assert not rep.hypothesis("a^(#,m) b = b^(#,m) a")
    assert rep.overall is Verdict.HYPOTHESIS_NOT_MET


def test_dual_rol_converse_pattern():
    inst = {"a": M([1, 0], [-1, 0]), "b": M([-1, 0], [1, 0]), "n": Weight(Matrix.diag([1, 2]))}
    rep = check(TheoremId.ROL_DUAL_SUFF, inst)
    assert rep.conclusion("(ab)_(n,#) = b_(n,#) a_(n,#)")
    assert not rep.hypotheses_hold


def test_conclusions_evaluated_when_hypotheses_fail():
    inst = {"a": M([1, 2], [0, 0]), "b": M([-1, 3], [0, 0]), "m": Weight(Matrix.diag([1, 5]))}
    rep = check(TheoremId.ADD_CORE, inst)
    assert len(rep.conclusions) == 2
    # (a+b) has no weighted core inverse so the formula side records no lhs
    assert rep.conclusions[1].lhs is None


def test_dimension_mismatch_is_the_only_error():
    with pytest.raises(DimensionMismatch):
        check(TheoremId.ADD_CORE, {"a": Matrix.identity(2), "b": Matrix.identity(3), "m": I2})
    with pytest.raises(DimensionMismatch):
        check(TheoremId.CLINE, {"x": Matrix.zeros(2, 3), "y": Matrix.zeros(3, 2)})


def test_missing_role_and_unknown_id():
    with pytest.raises(KeyError):
        check(TheoremId.ADD_CORE, {"a": Matrix.identity(2), "m": I2})
    with pytest.raises(ValueError):
        check("NOT_A_THEOREM", {})


@pytest.mark.parametrize("theorem", list(TheoremId))
def test_roles_match_generated_instances(theorem):
    inst = generate_instance(theorem, g.GenConfig(dim=2, seed=0), 0)
    assert set(inst) == set(roles(theorem))


def test_report_json_round_trips():
    rep = check(TheoremId.ADD_CORE, {"a": Matrix.diag([1, 0]), "b": Matrix.diag([0, 1]), "m": I2})
    obj = json.loads(json.dumps(rep.to_json()))
    assert obj["overall"] == "Pass"
    assert obj["conclusions"][1]["lhs"]["entries"] == [["1", "0"], ["0", "1"]]


def test_iff_theorems_check_both_directions():
    rep = check(TheoremId.BAB_CHAR, generate_instance(TheoremId.BAB_CHAR, g.GenConfig(seed=1), 0))
    assert [c.name for c in rep.conclusions] == ["forward", "backward"]
    rep = check(TheoremId.DEDEKIND_EQUIV, generate_instance(TheoremId.DEDEKIND_EQUIV, g.GenConfig(seed=1), 0))
    assert [c.name for c in rep.conclusions] == ["(i) => (ii)", "(ii) => (i)"]


def test_suite_add_core_all_pass():
    s = run_suite(TheoremId.ADD_CORE, 100, 42)
    assert (s.passed, s.failed) == (100, 0)


def test_suite_cline_all_pass():
    s = run_suite(TheoremId.CLINE, 100, 7)
    assert s.passed == 100


def test_suite_undirected_rol_suff_has_no_fail():
    s = run_suite(TheoremId.ROL_SUFF, 100, 1, undirected=True)
    assert s.failed == 0
    assert s.not_met > 50


@pytest.mark.parametrize("dim", [2, 4])
def test_registry_soundness_other_dims(dim):
    for t in REGISTRY:
        assert run_suite(t, 15, 3, dim).failed == 0, t


def test_suite_is_deterministic_and_records_instances():
    a = run_suite(TheoremId.DIFF, 10, 5).to_json()
    b = run_suite(TheoremId.DIFF, 10, 5).to_json()
    assert json.dumps(a) == json.dumps(b)
    assert [i["index"] for i in a["instances"]] == list(range(10))


def test_sum_alt_proof_variant_failures_are_recorded():
    # the variant hypothesis b b^(#,m) a = a does not support the displayed formula
    s = run_suite(TheoremId.SUM_ALT_PROOF_VARIANT, 10, 0)
    assert s.failed == 10
    fail = s.failures[0]
    assert fail["report"]["overall"] == "Fail" and "a" in fail["matrices"]


def test_add_dual_disjoint_needs_ba_zero():
    s = run_suite(TheoremId.ADD_DUAL_DISJOINT_AS_PRINTED, 30, 0)
    assert s.failed > 0
    assert run_suite(TheoremId.ADD_DUAL_DISJOINT, 30, 0).failed == 0
