"""Five fixed 2x2 instances, recomputed from scratch and compared to reference values.

``EXPECTED`` holds the reference values; :func:`run_examples` accepts a
replacement table so the harness itself can be tested against tampering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Mapping, Union

from .formats import to_json_obj
from .inverses import Weight, gi, wc, wdc
from .linalg import Matrix
from .theorems import TheoremId, check

Value = Union[Matrix, bool, str]

_h = Fraction(1, 2)


def _m(*rows) -> Matrix:
    return Matrix.from_rows(rows)


# inputs per example
A1, M1 = _m([1, 0], [-1, 0]), Weight(_m([2, 1], [1, 2]))
A2, N2 = _m([1, 0], [-1, 0]), Weight(Matrix.diag([1, 2]))
A3, B3, M3 = _m([1, 2], [0, 0]), _m([-1, 3], [0, 0]), Weight(Matrix.diag([1, 5]))
A4, B4, M4 = Matrix.diag([1, 0]), _m([-1, 1], [0, 0]), Weight(Matrix.diag([1, 2]))
A5, B5, N5 = _m([1, 0], [-1, 0]), _m([-1, 0], [1, 0]), Weight(Matrix.diag([1, 2]))

INPUTS: dict[str, dict[str, Any]] = {
    "weighted_core": {"a": A1, "m": M1},
    "weighted_dual_core": {"a": A2, "n": N2},
    "additive_counterexample": {"a": A3, "b": B3, "m": M3},
    "core_converse": {"a": A4, "b": B4, "m": M4},
    "dual_core_converse": {"a": A5, "b": B5, "n": N5},
}

EXPECTED: dict[str, dict[str, Value]] = {
    "weighted_core": {
        "a^(#,m)": _m([_h, -_h], [-_h, _h]),
        "m a x symmetric": True,
        "x a = a^# a": True,
    },
    "weighted_dual_core": {
        "a_(n,#)": Matrix.diag([1, 0]),
        "n y a symmetric": True,
        "a y = a a^#": True,
    },
    "additive_counterexample": {
        "a^(#,m)": Matrix.diag([1, 0]),
        "b in R^(#,m)": True,
        "a+b": _m([0, 5], [0, 0]),
        "(a+b)^2": Matrix.zeros(2),
        "a+b in R^#": False,
        "a+b in R^(#,m)": False,
        "ADD_CORE verdict": "HypothesisNotMet",
    },
    "core_converse": {
        "a^(#,m)": Matrix.diag([1, 0]),
        "b^(#,m)": _m([-1, 0], [0, 0]),
        "(ab)^(#,m)": _m([-1, 0], [0, 0]),
        "b^(#,m) a^(#,m)": _m([-1, 0], [0, 0]),
        "a^(#,m) b": _m([-1, 1], [0, 0]),
        "b^(#,m) a": _m([-1, 0], [0, 0]),
        "reverse order law holds": True,
        "sufficient condition holds": False,
    },
    "dual_core_converse": {
        "a_(n,#)": Matrix.diag([1, 0]),
        "b_(n,#)": _m([-1, 0], [0, 0]),
        "(ab)_(n,#)": _m([-1, 0], [0, 0]),
        "b_(n,#) a_(n,#)": _m([-1, 0], [0, 0]),
        "b_(n,#) b": Matrix.diag([1, 0]),
        "b_(n,#) a": _m([-1, 0], [0, 0]),
        "reverse order law holds": True,
        "sufficient condition holds": False,
    },
}


def _weighted_core() -> dict[str, Value]:
    x = wc(A1, M1)
    return {
        "a^(#,m)": x,
        "m a x symmetric": (M1.matrix @ A1 @ x).is_symmetric(),
        "x a = a^# a": x @ A1 == gi(A1) @ A1,
    }


def _weighted_dual_core() -> dict[str, Value]:
    y = wdc(A2, N2)
    return {
        "a_(n,#)": y,
        "n y a symmetric": (N2.matrix @ y @ A2).is_symmetric(),
        "a y = a a^#": A2 @ y == A2 @ gi(A2),
    }


def _additive_counterexample() -> dict[str, Value]:
    s = A3 + B3
    return {
        "a^(#,m)": wc(A3, M3),
        "b in R^(#,m)": wc(B3, M3) is not None,
        "a+b": s,
        "(a+b)^2": s @ s,
        "a+b in R^#": gi(s) is not None,
        "a+b in R^(#,m)": wc(s, M3) is not None,
        "ADD_CORE verdict": check(TheoremId.ADD_CORE, INPUTS["additive_counterexample"]).overall.value,
    }


def _core_converse() -> dict[str, Value]:
    rep = check(TheoremId.ROL_SUFF, INPUTS["core_converse"])
    xa, xb = wc(A4, M4), wc(B4, M4)
    return {
        "a^(#,m)": xa,
        "b^(#,m)": xb,
        "(ab)^(#,m)": wc(A4 @ B4, M4),
        "b^(#,m) a^(#,m)": xb @ xa,
        "a^(#,m) b": xa @ B4,
        "b^(#,m) a": xb @ A4,
        "reverse order law holds": rep.conclusion("(ab)^(#,m) = b^(#,m) a^(#,m)"),
        "sufficient condition holds": rep.hypotheses_hold,
    }


def _dual_core_converse() -> dict[str, Value]:
    rep = check(TheoremId.ROL_DUAL_SUFF, INPUTS["dual_core_converse"])
    ya, yb = wdc(A5, N5), wdc(B5, N5)
    return {
        "a_(n,#)": ya,
        "b_(n,#)": yb,
        "(ab)_(n,#)": wdc(A5 @ B5, N5),
        "b_(n,#) a_(n,#)": yb @ ya,
        "b_(n,#) b": yb @ B5,
        "b_(n,#) a": yb @ A5,
        "reverse order law holds": rep.conclusion("(ab)_(n,#) = b_(n,#) a_(n,#)"),
        "sufficient condition holds": rep.hypotheses_hold,
    }


_COMPUTE: dict[str, Callable[[], dict[str, Value]]] = {
    "weighted_core": _weighted_core,
    "weighted_dual_core": _weighted_dual_core,
    "additive_counterexample": _additive_counterexample,
    "core_converse": _core_converse,
    "dual_core_converse": _dual_core_converse,
}


@dataclass(frozen=True)
class ItemResult:
    label: str
    expected: Value | None
    actual: Value | None

    @property
    def match(self) -> bool:
        return self.expected is not None and type(self.expected) is type(self.actual) and self.expected == self.actual


@dataclass(frozen=True)
class ExampleResult:
    key: str
    items: tuple[ItemResult, ...]

    @property
    def match(self) -> bool:
        return all(i.match for i in self.items)

    def mismatches(self) -> list[ItemResult]:
        return [i for i in self.items if not i.match]


def _encode(v: Value | None) -> Any:
    return to_json_obj(v) if isinstance(v, Matrix) else v


def run_examples(expected: Mapping[str, Mapping[str, Value]] = EXPECTED) -> list[ExampleResult]:
    out = []
    for key, compute in _COMPUTE.items():
        actual = compute()
        want = expected.get(key, {})
        labels = list(want) + [k for k in actual if k not in want]
        out.append(ExampleResult(key, tuple(ItemResult(lb, want.get(lb), actual.get(lb)) for lb in labels)))
    return out


def examples_to_json(results: list[ExampleResult]) -> dict[str, Any]:
    return {
        "matched": sum(r.match for r in results),
        "total": len(results),
        "examples": [
            {
                "key": r.key,
                "match": r.match,
                "items": [
                    {"label": i.label, "match": i.match, "expected": _encode(i.expected), "actual": _encode(i.actual)}
                    for i in r.items
                ],
            }
            for r in results
        ],
    }
