import copy
import time
from fractions import Fraction

from wcore.linalg import Matrix
from wcore.worked_examples import EXPECTED, examples_to_json, run_examples


def test_all_five_match():
    results = run_examples()
    assert [r.key for r in results] == list(EXPECTED)
    assert all(r.match for r in results), [r.mismatches() for r in results]


def test_specific_reference_values():
    by_key = {r.key: {i.label: i.actual for i in r.items} for r in run_examples()}
    h = Fraction(1, 2)
    assert by_key["weighted_core"]["a^(#,m)"] == Matrix.from_rows([[h, -h], [-h, h]])
    assert by_key["additive_counterexample"]["a+b in R^#"] is False
    assert by_key["core_converse"]["(ab)^(#,m)"] == by_key["core_converse"]["b^(#,m) a^(#,m)"]
    assert by_key["core_converse"]["a^(#,m) b"] != by_key["core_converse"]["b^(#,m) a"]


def test_tampered_value_reports_both_sides():
    bad = copy.deepcopy(EXPECTED)
    bad["weighted_dual_core"]["a_(n,#)"] = Matrix.identity(2)
    results = run_examples(bad)
    broken = [r for r in results if not r.match]
    assert [r.key for r in broken] == ["weighted_dual_core"]
    (item,) = broken[0].mismatches()
    assert item.expected == Matrix.identity(2)
    assert item.actual == Matrix.diag([1, 0])
    obj = examples_to_json(results)
    assert obj["matched"] == 4


def test_bool_is_not_confused_with_matrix():
    bad = copy.deepcopy(EXPECTED)
    bad["core_converse"]["sufficient condition holds"] = 0
    assert not run_examples(bad)[3].match


def test_runtime_under_one_second():
    t0 = time.perf_counter()
    run_examples()
    assert time.perf_counter() - t0 < 1.0
