"""Acceptance criteria 1-8, one PASS/FAIL line each.

Run directly with ``python3 tests/test_acceptance.py`` or through pytest
(``pytest tests/test_acceptance.py -s`` shows the lines inline; they are also
printed in the terminal summary).
"""

from __future__ import annotations

import json
import sys
import time
from typing import Any, Callable

import pytest

from wcore import generators as g
from wcore.formats import to_json_obj
from wcore.inverses import (
    EquationTag,
    Weight,
    clear_caches,
    drazin_inverse,
    eight_nine_family,
    family_member,
    oracle_weighted_core,
    power_rule_check,
    six_seven_family,
    verify_equations,
    weighted_core,
)
from wcore.search import Property, search
from wcore.theorems import REGISTRY, run_suite
from wcore.worked_examples import examples_to_json, run_examples

E = EquationTag
LINES: list[str] = []
FIRST_RUN: dict[int, str] = {}


def _record(n: int, ok: bool, text: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {text}"
    LINES.append(line)
    print(line, file=sys.__stdout__, flush=True)


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True)


# each criterion returns (ok, summary text, canonical report)


def criterion_1() -> tuple[bool, str, str]:
    t0 = time.perf_counter()
    results = run_examples()
    dt = time.perf_counter() - t0
    matched = sum(r.match for r in results)
    return matched == 5 and dt < 1.0, f"worked examples {matched}/5 exact, {dt:.3f}s (< 1s)", _dump(examples_to_json(results))


def criterion_2() -> tuple[bool, str, str]:
    t0 = time.perf_counter()
    rows, bad = [], 0
    for k in (2, 3, 4):
        cfg = g.GenConfig(dim=k, seed=2024)
        for i in range(200):
            rng = g.rng_for(cfg, "oracle", i)
            m = g.random_pd_weight(cfg, rng)
            # ranks 0..k, all index one
            a = g.gen_core_invertible(cfg, rng, m, r=rng.randint(0, k))
            closed, oracle = weighted_core(a, m), oracle_weighted_core(a, m)
            ok = closed.present and oracle.present and closed.value == oracle.value and oracle.solution_dim == 0
            bad += not ok
            rows.append({"k": k, "i": i, "ok": ok, "x": to_json_obj(closed.value)})
    dt = time.perf_counter() - t0
    ok = bad == 0 and dt < 60
    return ok, f"closed form == unique oracle solution on {600 - bad}/600 instances (k=2,3,4), {dt:.1f}s (< 60s)", _dump(rows)


def criterion_3() -> tuple[bool, str, str]:
    t0 = time.perf_counter()
    summaries = [run_suite(t, 100, 11, 3) for t in REGISTRY]
    dt = time.perf_counter() - t0
    fails = {s.theorem.value: s.failed for s in summaries if s.failed}
    met = sum(s.passed + s.failed for s in summaries)
    ok = not fails and dt < 300
    detail = f" in {fails}" if fails else ""
    text = f"{len(summaries)} theorems x 100 at k=3: {met} hypothesis-satisfying, Fail={sum(fails.values())}{detail}, {dt:.1f}s (< 300s)"
    return ok, text, _dump([s.to_json() for s in summaries])


def criterion_4() -> tuple[bool, str, str]:
    rows, bad = [], 0
    cfg = g.GenConfig(dim=3, seed=4)
    for i in range(100):
        rng = g.rng_for(cfg, "classes", i)
        k = rng.randint(2, 4)
        a = g.gen_core_invertible(g.GenConfig(dim=k, seed=4), rng, Weight.identity(k), r=rng.randint(0, k))
        for fam, cls in ((six_seven_family, (E.E6, E.E7)), (eight_nine_family, (E.E8, E.E9))):
            sol = fam(a)
            x = family_member(sol, [rng.randint(-3, 3) for _ in sol.homogeneous])
            member = all(v for _, v in verify_equations(a, x, cls))
            implied = all(v for _, v in verify_equations(a, x, (E.E1, E.E2)))
            bad += not (member and implied)
            rows.append({"i": i, "class": "".join(t.value for t in cls), "member": member, "implied": implied})
    return bad == 0, f"{{6,7}} => {{1,2}} and {{8,9}} => {{1,2}} on {200 - bad}/200 oracle solutions", _dump(rows)


def criterion_5() -> tuple[bool, str, str]:
    rows, bad = [], 0
    cfg = g.GenConfig(dim=3, seed=5)
    for i in range(50):
        rng = g.rng_for(cfg, "power", i)
        m = g.random_pd_weight(cfg, rng)
        a = g.gen_core_invertible(cfg, rng, m, r=rng.randint(1, 3))
        for p in (2, 3):
            ok = power_rule_check(a, m, p)
            bad += not ok
            rows.append({"i": i, "p": p, "ok": ok})
    return bad == 0, f"(a^p)^(#,m) = (a^(#,m))^p for p=2,3 on {100 - bad}/100 checks (50 instances)", _dump(rows)


def criterion_6() -> tuple[bool, str, str]:
    rows, bad = [], 0
    for i in range(100):
        k = 2 + i % 3
        cfg = g.GenConfig(dim=k, seed=6)
        x, y = g.gen_cline_pair(cfg, g.rng_for(cfg, "cline", i))
        kxy, dxy = drazin_inverse(x @ y)
        kyx, dyx = drazin_inverse(y @ x)
        ok = dyx.value == y @ dxy.value @ dxy.value @ x and abs(kxy - kyx) <= 1
        bad += not ok
        rows.append({"i": i, "k": k, "ind_xy": kxy, "ind_yx": kyx, "ok": ok})
    return bad == 0, f"Cline's formula with index bookkeeping on {100 - bad}/100 pairs (k=2..4)", _dump(rows)


def criterion_7() -> tuple[bool, str, str]:
    t0 = time.perf_counter()
    res = search(Property.ROL_CONVERSE, 10_000, dim=2, seed=0)
    dt = time.perf_counter() - t0
    n = len(res.witnesses)
    planted = bool(res.witnesses) and res.witnesses[0]["index"] == 0
    return n >= 1 and planted, f"{n} verified converse witnesses in {res.examined} candidates (planted example at index 0: {planted}), {dt:.1f}s", _dump(res.to_json())


CRITERIA: dict[int, Callable[[], tuple[bool, str, str]]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
    5: criterion_5, 6: criterion_6, 7: criterion_7,
}


def _run(n: int) -> bool:
    ok, text, report = CRITERIA[n]()
    FIRST_RUN[n] = report
    _record(n, ok, text)
    return ok


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    assert _run(n)


def test_criterion_8_determinism():
    missing = [n for n in range(2, 8) if n not in FIRST_RUN]
    for n in missing:
        FIRST_RUN[n] = CRITERIA[n]()[2]
    clear_caches()
    differ = [n for n in range(2, 8) if CRITERIA[n]()[2] != FIRST_RUN[n]]
    _record(8, not differ, f"second run of criteria 2-7 byte-identical{'' if not differ else f'; differs: {differ}'}")
    assert not differ


if __name__ == "__main__":
    results = [_run(n) for n in sorted(CRITERIA)]
    try:
        test_criterion_8_determinism()
        results.append(True)
    except AssertionError:
        results.append(False)
    sys.exit(0 if all(results) else 1)
