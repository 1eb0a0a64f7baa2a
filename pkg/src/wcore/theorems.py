"""Mechanized checks of the additive and reverse-order results.

Every registry entry evaluates its hypotheses and conclusions exactly and
returns a :class:`TheoremReport`.  Conclusions are evaluated even when a
hypothesis fails so converse behaviour can be studied.  Biconditionals are
recorded as two implications, with each side's conjuncts kept as
observations; observations never influence the verdict.

An instance is a plain mapping from role names (``"a"``, ``"b"``, ``"m"``,
...) to :class:`Matrix` or :class:`Weight` values.
"""

from __future__ import annotations

import enum
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Mapping

from . import generators as g
from .formats import to_json_obj
from .inverses import Weight, drazin_inverse, gi, wc, wdc
from .linalg import DimensionMismatch, Matrix, col_contained, col_equal


class TheoremId(str, enum.Enum):
    ADD_CORE = "ADD_CORE"
    ADD_CORE_DISJOINT = "ADD_CORE_DISJOINT"
    ADD_DUAL = "ADD_DUAL"
    ADD_DUAL_DISJOINT = "ADD_DUAL_DISJOINT"
    SUM_ALT = "SUM_ALT"
    DIFF = "DIFF"
    ROL_SUFF = "ROL_SUFF"
    ROL_DUAL_SUFF = "ROL_DUAL_SUFF"
    ROL_NEC = "ROL_NEC"
    ROL_A2BA = "ROL_A2BA"
    ROL_DUAL_B2BA = "ROL_DUAL_B2BA"
    ROL_IFF_RANGE = "ROL_IFF_RANGE"
    ROL_IFF_BAB = "ROL_IFF_BAB"
    DEDEKIND_EQUIV = "DEDEKIND_EQUIV"
    DEDEKIND_COR = "DEDEKIND_COR"
    MIXED_GROUP = "MIXED_GROUP"
    UNITARY_A = "UNITARY_A"
    UNITARY_B = "UNITARY_B"
    BAB_CHAR = "BAB_CHAR"
    CLINE = "CLINE"
    GROUP_ADD = "GROUP_ADD"
    # auxiliary variants, excluded from "all"
    SUM_ALT_PROOF_VARIANT = "SUM_ALT_PROOF_VARIANT"
    ADD_DUAL_DISJOINT_AS_PRINTED = "ADD_DUAL_DISJOINT_AS_PRINTED"


AUXILIARY = (TheoremId.SUM_ALT_PROOF_VARIANT, TheoremId.ADD_DUAL_DISJOINT_AS_PRINTED)
REGISTRY = tuple(t for t in TheoremId if t not in AUXILIARY)


class Verdict(str, enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    HYPOTHESIS_NOT_MET = "HypothesisNotMet"


@dataclass(frozen=True)
class Check:
    name: str
    holds: bool
    lhs: Matrix | None = None
    rhs: Matrix | None = None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "holds": self.holds}
        if self.lhs is not None or self.rhs is not None:
            out["lhs"] = None if self.lhs is None else to_json_obj(self.lhs)
            out["rhs"] = None if self.rhs is None else to_json_obj(self.rhs)
        return out


@dataclass(frozen=True)
class TheoremReport:
    theorem: TheoremId
    hypotheses: tuple[Check, ...]
    conclusions: tuple[Check, ...]
    observations: tuple[Check, ...] = ()

    @property
    def hypotheses_hold(self) -> bool:
        return all(c.holds for c in self.hypotheses)

    @property
    def conclusions_hold(self) -> bool:
        return all(c.holds for c in self.conclusions)

    @property
    def overall(self) -> Verdict:
        if not self.hypotheses_hold:
            return Verdict.HYPOTHESIS_NOT_MET
        return Verdict.PASS if self.conclusions_hold else Verdict.FAIL

    @property
    def converse_witness(self) -> bool:
        """Conclusions hold although some hypothesis fails."""
        return not self.hypotheses_hold and self.conclusions_hold

    def hypothesis(self, name: str) -> bool:
        return _lookup(self.hypotheses, name)

    def conclusion(self, name: str) -> bool:
        return _lookup(self.conclusions, name)

    def observation(self, name: str) -> bool:
        return _lookup(self.observations, name)

    def to_json(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem.value,
            "overall": self.overall.value,
            "hypotheses": [c.to_json() for c in self.hypotheses],
            "conclusions": [c.to_json() for c in self.conclusions],
            "observations": [c.to_json() for c in self.observations],
        }


def _lookup(checks: tuple[Check, ...], name: str) -> bool:
    for c in checks:
        if c.name == name:
            return c.holds
    raise KeyError(name)


# ---------------------------------------------------------------------------
# evaluation helpers
# ---------------------------------------------------------------------------


class _Missing(Exception):
    """An inverse required by an expression does not exist."""


class _Recorder:
    def __init__(self, inst: Mapping[str, Any]):
        self.inst = inst
        first = next(v for v in inst.values() if isinstance(v, Matrix))
        self.k = first.rows
        self.eye = Matrix.identity(self.k)
        self.m: Weight | None = inst.get("m")
        self.n: Weight | None = inst.get("n")
        self.sections: dict[str, list[Check]] = {"h": [], "c": [], "o": []}

    # inverses that raise _Missing instead of returning None
    def core(self, x: Matrix) -> Matrix:
        v = wc(x, self.m)
        if v is None:
            raise _Missing
        return v

    def dual(self, x: Matrix) -> Matrix:
        v = wdc(x, self.n)
        if v is None:
            raise _Missing
        return v

    def group(self, x: Matrix) -> Matrix:
        v = gi(x)
        if v is None:
            raise _Missing
        return v

    def has_core(self, x: Matrix) -> bool:
        return wc(x, self.m) is not None

    def has_dual(self, x: Matrix) -> bool:
        return wdc(x, self.n) is not None

    def has_group(self, x: Matrix) -> bool:
        return gi(x) is not None

    def pred(self, section: str, name: str, fn: Callable[[], bool]) -> bool:
        try:
            ok = bool(fn())
        except _Missing:
            ok = False
        self.sections[section].append(Check(name, ok))
        return ok

    def eq(self, section: str, name: str, lhs: Callable[[], Matrix], rhs: Callable[[], Matrix]) -> bool:
        left, right = _value(lhs), _value(rhs)
        ok = left is not None and right is not None and left == right
        self.sections[section].append(Check(name, ok, left, right))
        return ok

    def implies(self, name: str, p: bool, q: bool) -> bool:
        ok = (not p) or q
        self.sections["c"].append(Check(name, ok))
        return ok

    def report(self, theorem: TheoremId) -> TheoremReport:
        s = self.sections
        return TheoremReport(theorem, tuple(s["h"]), tuple(s["c"]), tuple(s["o"]))


def _value(fn: Callable[[], Matrix]) -> Matrix | None:
    try:
        return fn()
    except _Missing:
        return None


def _all(*flags: bool) -> bool:
    return all(flags)


# ---------------------------------------------------------------------------
# additive results
# ---------------------------------------------------------------------------


def _core_members(r: _Recorder, *names: str) -> None:
    for nm in names:
        x = r.inst[nm]
        r.pred("h", f"{nm} in R^(#,m)", lambda x=x: r.has_core(x))


def _dual_members(r: _Recorder, *names: str) -> None:
    for nm in names:
        x = r.inst[nm]
        r.pred("h", f"{nm} in R_(n,#)", lambda x=x: r.has_dual(x))


def _add_core(r: _Recorder, disjoint: bool) -> None:
    a, b, m = r.inst["a"], r.inst["b"], r.m.matrix
    _core_members(r, "a", "b")
    r.pred("h", "a^T m b = 0", lambda: (a.T @ m @ b).is_zero())
    r.pred("h", "ab = 0", lambda: (a @ b).is_zero())
    if disjoint:
        r.pred("h", "ba = 0", lambda: (b @ a).is_zero())
    r.pred("c", "a+b in R^(#,m)", lambda: r.has_core(a + b))
    if disjoint:
        rhs = lambda: r.core(a) + r.core(b)
    else:
        rhs = lambda: (r.eye - r.core(b) @ b) @ r.core(a) + r.core(b)
    r.eq("c", "(a+b)^(#,m) formula", lambda: r.core(a + b), rhs)


def _add_dual(r: _Recorder, disjoint: bool, require_ba: bool) -> None:
    a, b, ni = r.inst["a"], r.inst["b"], r.n.inverse.matrix
    _dual_members(r, "a", "b")
    r.pred("h", "a n^-1 b^T = 0", lambda: (a @ ni @ b.T).is_zero())
    r.pred("h", "ab = 0", lambda: (a @ b).is_zero())
    if require_ba:
        r.pred("h", "ba = 0", lambda: (b @ a).is_zero())
    r.pred("c", "a+b in R_(n,#)", lambda: r.has_dual(a + b))
    if disjoint:
        rhs = lambda: r.dual(a) + r.dual(b)
    else:
        rhs = lambda: r.dual(a) + r.dual(b) @ (r.eye - a @ r.dual(a))
    r.eq("c", "(a+b)_(n,#) formula", lambda: r.dual(a + b), rhs)


def _sum_alt(r: _Recorder, proof_variant: bool) -> None:
    a, b = r.inst["a"], r.inst["b"]
    _core_members(r, "a", "b")
    if proof_variant:
        r.pred("h", "b b^(#,m) a = a", lambda: b @ r.core(b) @ a == a)
    else:
        r.pred("h", "b a^(#,m) a = a", lambda: b @ r.core(a) @ a == a)
    half = Fraction(1, 2)

    def rhs():
        x, y = r.core(a), r.core(b)
        return x * (-half) + y + (x @ b @ y) * half - (x @ a @ y) * half

    r.pred("c", "a+b in R^(#,m)", lambda: r.has_core(a + b))
    r.eq("c", "(a+b)^(#,m) formula", lambda: r.core(a + b), rhs)


def _diff(r: _Recorder) -> None:
    a, b = r.inst["a"], r.inst["b"]
    _core_members(r, "a", "b")
    r.pred("h", "a a^(#,m) b = a", lambda: a @ r.core(a) @ b == a)
    r.pred("h", "b a^(#,m) a = a", lambda: b @ r.core(a) @ a == a)
    r.pred("c", "a-b in R^(#,m)", lambda: r.has_core(a - b))
    r.eq("c", "(a-b)^(#,m) formula", lambda: r.core(a - b), lambda: a @ r.core(a) @ r.core(b) - r.core(b))


def _group_add(r: _Recorder) -> None:
    c, d = r.inst["c"], r.inst["d"]
    r.pred("h", "c in R^#", lambda: r.has_group(c))
    r.pred("h", "d in R^#", lambda: r.has_group(d))
    r.pred("h", "cd = 0", lambda: (c @ d).is_zero())
    r.pred("c", "c+d in R^#", lambda: r.has_group(c + d))

    def rhs():
        cg, dg = r.group(c), r.group(d)
        return (r.eye - d @ dg) @ cg + dg @ (r.eye - c @ cg)

    r.eq("c", "(c+d)^# formula", lambda: r.group(c + d), rhs)


# ---------------------------------------------------------------------------
# reverse order laws
# ---------------------------------------------------------------------------


def _rol_identity(r: _Recorder, section: str) -> bool:
    a, b = r.inst["a"], r.inst["b"]
    return r.eq(section, "(ab)^(#,m) = b^(#,m) a^(#,m)", lambda: r.core(a @ b), lambda: r.core(b) @ r.core(a))


def _rol_suff(r: _Recorder) -> None:
    a, b = r.inst["a"], r.inst["b"]
    _core_members(r, "a", "b")
    r.eq("h", "a^(#,m) b = b^(#,m) a", lambda: r.core(a) @ b, lambda: r.core(b) @ a)
    r.eq("h", "a a^(#,m) = b a^(#,m)", lambda: a @ r.core(a), lambda: b @ r.core(a))
    _rol_identity(r, "c")
    r.eq("c", "b^(#,m) a^(#,m) = (a^(#,m))^2", lambda: r.core(b) @ r.core(a), lambda: r.core(a) @ r.core(a))
    r.eq("c", "(a^(#,m))^2 = (a^2)^(#,m)", lambda: r.core(a) @ r.core(a), lambda: r.core(a @ a))


def _rol_dual_suff(r: _Recorder) -> None:
    a, b = r.inst["a"], r.inst["b"]
    _dual_members(r, "a", "b")
    r.eq("h", "a b_(n,#) = b a_(n,#)", lambda: a @ r.dual(b), lambda: b @ r.dual(a))
    r.eq("h", "b_(n,#) b = b_(n,#) a", lambda: r.dual(b) @ b, lambda: r.dual(b) @ a)
    r.eq("c", "(ab)_(n,#) = b_(n,#) a_(n,#)", lambda: r.dual(a @ b), lambda: r.dual(b) @ r.dual(a))
    r.eq("c", "b_(n,#) a_(n,#) = (b_(n,#))^2", lambda: r.dual(b) @ r.dual(a), lambda: r.dual(b) @ r.dual(b))
    r.eq("c", "(b_(n,#))^2 = (b^2)_(n,#)", lambda: r.dual(b) @ r.dual(b), lambda: r.dual(b @ b))


def _rol_nec(r: _Recorder) -> None:
    a, b, m = r.inst["a"], r.inst["b"], r.m.matrix
    _core_members(r, "a", "b")
    _rol_identity(r, "h")
    ab = a @ b
    r.eq("c", "ab = b b^(#,m) ab", lambda: ab, lambda: b @ r.core(b) @ ab)
    r.eq("c", "ab = b^(#,m) b ab", lambda: ab, lambda: r.core(b) @ b @ ab)
    r.pred("c", "col(b^(#,m) a) in col(ab)", lambda: col_contained(r.core(b) @ a, ab))
    r.pred("c", "col(ab) in col(ba)", lambda: col_contained(ab, b @ a))

    def c_and_x():
        return ab @ r.core(b), b @ r.core(b) @ r.core(a)

    r.pred("c", "b b^(#,m) a^(#,m) satisfies (3^m) for c", lambda: (m @ c_and_x()[0] @ c_and_x()[1]).is_symmetric())
    r.eq("c", "b b^(#,m) a^(#,m) satisfies (6) for c", lambda: c_and_x()[1] @ c_and_x()[0] @ c_and_x()[0], lambda: c_and_x()[0])


def _rol_a2ba(r: _Recorder) -> None:
    a, b = r.inst["a"], r.inst["b"]
    _core_members(r, "a", "b")
    r.eq("h", "a^2 = ba", lambda: a @ a, lambda: b @ a)
    r.pred("c", "ab in R^(#,m)", lambda: r.has_core(a @ b))
    _rol_identity(r, "c")
    r.pred("c", "a b b^(#,m) in R^(#,m)", lambda: r.has_core(a @ b @ r.core(b)))
    r.eq("c", "(a b b^(#,m))^(#,m) = b b^(#,m) a^(#,m)", lambda: r.core(a @ b @ r.core(b)), lambda: b @ r.core(b) @ r.core(a))


def _rol_dual_b2ba(r: _Recorder) -> None:
    a, b = r.inst["a"], r.inst["b"]
    _dual_members(r, "a", "b")
    r.eq("h", "b^2 = ba", lambda: b @ b, lambda: b @ a)
    r.pred("c", "ab in R_(n,#)", lambda: r.has_dual(a @ b))
    r.eq("c", "(ab)_(n,#) = b_(n,#) a_(n,#)", lambda: r.dual(a @ b), lambda: r.dual(b) @ r.dual(a))


def _rol_iff_range(r: _Recorder) -> None:
    a, b, m = r.inst["a"], r.inst["b"], r.m.matrix
    _core_members(r, "a", "b")
    r.pred("h", "ab in R^(#,m)", lambda: r.has_core(a @ b))
    r.pred("h", "col(a^T m b) = col(m b a^T)", lambda: col_equal(a.T @ m @ b, m @ b @ a.T))
    left = _rol_identity(r, "o")
    inc1 = r.pred("o", "col(b^(#,m) a) in col(ab)", lambda: col_contained(r.core(b) @ a, a @ b))
    inc2 = r.pred("o", "col(ab) in col(ba)", lambda: col_contained(a @ b, b @ a))
    weighted = r.eq(
        "o", "m b b^(#,m) a a^(#,m) = m a a^(#,m) b b^(#,m)",
        lambda: m @ b @ r.core(b) @ a @ r.core(a), lambda: m @ a @ r.core(a) @ b @ r.core(b),
    )
    plain = r.eq(
        "o", "b b^(#,m) a a^(#,m) = a a^(#,m) b b^(#,m)",
        lambda: b @ r.core(b) @ a @ r.core(a), lambda: a @ r.core(a) @ b @ r.core(b),
    )
    right = _all(inc1, inc2, weighted)
    r.implies("forward", left, right)
    r.implies("backward", right, left)
    r.pred("o", "backward with unweighted identity", lambda: (not _all(inc1, inc2, plain)) or left)


def _rol_iff_bab(r: _Recorder) -> None:
    a, b = r.inst["a"], r.inst["b"]
    _core_members(r, "a", "b")
    r.pred("h", "ab in R^(#,m)", lambda: r.has_core(a @ b))
    left = _rol_identity(r, "o")
    c1 = r.eq("o", "b (ab)^(#,m) = b b^(#,m) a^(#,m)", lambda: b @ r.core(a @ b), lambda: b @ r.core(b) @ r.core(a))
    c2 = r.eq("o", "a b b^(#,m) = b^(#,m) b a b b^(#,m)", lambda: a @ b @ r.core(b), lambda: r.core(b) @ b @ a @ b @ r.core(b))
    right = _all(c1, c2)
    r.implies("forward", left, right)
    r.implies("backward", right, left)


def _dedekind_i(r: _Recorder, a: Matrix, b: Matrix) -> bool:
    return _all(
        r.pred("o", "(i) ab in R^(#,m)", lambda: r.has_core(a @ b)),
        r.pred("o", "(i) ba in R^(#,m)", lambda: r.has_core(b @ a)),
        r.eq("o", "(i) a^(#,m) b^(#,m) = (ba)^(#,m)", lambda: r.core(a) @ r.core(b), lambda: r.core(b @ a)),
        r.eq("o", "(i) b^(#,m) a^(#,m) = (ab)^(#,m)", lambda: r.core(b) @ r.core(a), lambda: r.core(a @ b)),
    )


def _dedekind_ii(r: _Recorder, a: Matrix, b: Matrix, ranges: bool) -> bool:
    flags = [
        r.pred("o", "(ii) b a a^(#,m) in R^(#,m)", lambda: r.has_core(b @ a @ r.core(a))),
        r.pred("o", "(ii) a b b^(#,m) in R^(#,m)", lambda: r.has_core(a @ b @ r.core(b))),
        r.eq("o", "(ii) b b^(#,m) a^(#,m) = (a b b^(#,m))^(#,m)", lambda: b @ r.core(b) @ r.core(a), lambda: r.core(a @ b @ r.core(b))),
        r.eq("o", "(ii) a a^(#,m) b^(#,m) = (b a a^(#,m))^(#,m)", lambda: a @ r.core(a) @ r.core(b), lambda: r.core(b @ a @ r.core(a))),
    ]
    if ranges:
        flags.append(r.pred("o", "(ii) col(ba) = col((ba)^2)", lambda: col_equal(b @ a, b @ a @ b @ a)))
        flags.append(r.pred("o", "(ii) col(ab) = col((ab)^2)", lambda: col_equal(a @ b, a @ b @ a @ b)))
    return _all(*flags)


def _dedekind(r: _Recorder, ranges: bool) -> None:
    a, b = r.inst["a"], r.inst["b"]
    _core_members(r, "a", "b")
    first = _dedekind_i(r, a, b)
    second = _dedekind_ii(r, a, b, ranges)
    r.implies("(i) => (ii)", first, second)
    r.implies("(ii) => (i)", second, first)


def _mixed_group(r: _Recorder) -> None:
    a, b = r.inst["a"], r.inst["b"]
    _core_members(r, "a", "b")
    first = _all(
        r.eq("o", "(i) a^(#,m) ab = b a a^(#,m)", lambda: r.core(a) @ a @ b, lambda: b @ a @ r.core(a)),
        r.eq("o", "(i) b^(#,m) ba = a b b^(#,m)", lambda: r.core(b) @ b @ a, lambda: a @ b @ r.core(b)),
        r.eq("o", "(i) a a^(#,m) b^(#,m) = b^(#,m) a^(#,m) a", lambda: a @ r.core(a) @ r.core(b), lambda: r.core(b) @ r.core(a) @ a),
    )
    second = _all(
        r.pred("o", "(ii) ab in R^#", lambda: r.has_group(a @ b)),
        r.pred("o", "(ii) ba in R^#", lambda: r.has_group(b @ a)),
        r.eq("o", "(ii) (ab)^# = b^(#,m) a^(#,m)", lambda: r.group(a @ b), lambda: r.core(b) @ r.core(a)),
        r.eq("o", "(ii) (ba)^# = a^(#,m) b^(#,m)", lambda: r.group(b @ a), lambda: r.core(a) @ r.core(b)),
    )
    r.implies("(i) => (ii)", first, second)
    r.implies("(ii) => (i)", second, first)


def _unitary_b(r: _Recorder) -> None:
    a, b = r.inst["a"], r.inst["b"]
    _core_members(r, "a", "b")
    r.pred("h", "ab in R^(#,m)", lambda: r.has_core(a @ b))
    r.pred("h", "b unitary", lambda: b.T @ b == r.eye and b @ b.T == r.eye)
    r.pred("h", "col(b^T a^(#,m)) in col(a^(#,m))", lambda: col_contained(b.T @ r.core(a), r.core(a)))
    r.eq("c", "(ab)^(#,m) = b^T a^(#,m)", lambda: r.core(a @ b), lambda: b.T @ r.core(a))


def _unitary_a(r: _Recorder) -> None:
    a, b = r.inst["a"], r.inst["b"]
    _core_members(r, "a", "b")
    r.pred("h", "ab in R^(#,m)", lambda: r.has_core(a @ b))
    r.pred("h", "a unitary", lambda: a.T @ a == r.eye and a @ a.T == r.eye)
    r.pred("h", "col(a) in col(b)", lambda: col_contained(a, b))
    r.eq("c", "(ab)^(#,m) = b^(#,m) a^T", lambda: r.core(a @ b), lambda: r.core(b) @ a.T)


def _bab_char(r: _Recorder) -> None:
    a, b = r.inst["a"], r.inst["b"]
    r.pred("h", "a in R^#", lambda: r.has_group(a))
    r.pred("h", "ab in R^(#,m)", lambda: r.has_core(a @ b))
    left = r.pred("o", "col(a) in col(bab)", lambda: col_contained(a, b @ a @ b))
    right = _all(
        r.pred("o", "a in R^(#,m)", lambda: r.has_core(a)),
        r.eq("o", "a^(#,m) = b (ab)^(#,m)", lambda: r.core(a), lambda: b @ r.core(a @ b)),
    )
    r.implies("forward", left, right)
    r.implies("backward", right, left)


def _cline(r: _Recorder) -> None:
    x, y = r.inst["x"], r.inst["y"]
    kxy, dxy = drazin_inverse(x @ y)
    kyx, dyx = drazin_inverse(y @ x)
    r.pred("h", "xy Drazin invertible", lambda: dxy.present)
    r.eq("c", "(yx)^D = y ((xy)^D)^2 x", lambda: dyx.value, lambda: y @ dxy.value @ dxy.value @ x)
    r.pred("c", "|ind(xy) - ind(yx)| <= 1", lambda: abs(kxy - kyx) <= 1)


_CHECKERS: dict[TheoremId, Callable[[_Recorder], None]] = {
    TheoremId.ADD_CORE: lambda r: _add_core(r, False),
    TheoremId.ADD_CORE_DISJOINT: lambda r: _add_core(r, True),
    TheoremId.ADD_DUAL: lambda r: _add_dual(r, False, False),
    TheoremId.ADD_DUAL_DISJOINT: lambda r: _add_dual(r, True, True),
    TheoremId.ADD_DUAL_DISJOINT_AS_PRINTED: lambda r: _add_dual(r, True, False),
    TheoremId.SUM_ALT: lambda r: _sum_alt(r, False),
    TheoremId.SUM_ALT_PROOF_VARIANT: lambda r: _sum_alt(r, True),
    TheoremId.DIFF: _diff,
    TheoremId.ROL_SUFF: _rol_suff,
    TheoremId.ROL_DUAL_SUFF: _rol_dual_suff,
    TheoremId.ROL_NEC: _rol_nec,
    TheoremId.ROL_A2BA: _rol_a2ba,
    TheoremId.ROL_DUAL_B2BA: _rol_dual_b2ba,
    TheoremId.ROL_IFF_RANGE: _rol_iff_range,
    TheoremId.ROL_IFF_BAB: _rol_iff_bab,
    TheoremId.DEDEKIND_EQUIV: lambda r: _dedekind(r, True),
    TheoremId.DEDEKIND_COR: lambda r: _dedekind(r, False),
    TheoremId.MIXED_GROUP: _mixed_group,
    TheoremId.UNITARY_A: _unitary_a,
    TheoremId.UNITARY_B: _unitary_b,
    TheoremId.BAB_CHAR: _bab_char,
    TheoremId.CLINE: _cline,
    TheoremId.GROUP_ADD: _group_add,
}

_DUAL_WEIGHTED = {
    TheoremId.ADD_DUAL, TheoremId.ADD_DUAL_DISJOINT, TheoremId.ADD_DUAL_DISJOINT_AS_PRINTED,
    TheoremId.ROL_DUAL_SUFF, TheoremId.ROL_DUAL_B2BA,
}
_UNWEIGHTED = {TheoremId.CLINE: ("x", "y"), TheoremId.GROUP_ADD: ("c", "d")}


def roles(theorem: TheoremId) -> tuple[str, ...]:
    """Instance keys expected by ``check`` for this theorem."""
    if theorem in _UNWEIGHTED:
        return _UNWEIGHTED[theorem]
    return ("a", "b", "n" if theorem in _DUAL_WEIGHTED else "m")


def check(theorem: TheoremId | str, instance: Mapping[str, Any]) -> TheoremReport:
    theorem = TheoremId(theorem)
    expected = roles(theorem)
    missing = [k for k in expected if k not in instance]
    if missing:
        raise KeyError(f"{theorem.value} instance lacks {missing}")
    inst = {k: instance[k] for k in expected}
    dims = set()
    for key, v in inst.items():
        if isinstance(v, Weight):
            dims.add(v.dim)
        elif isinstance(v, Matrix):
            if not v.is_square():
                raise DimensionMismatch(f"{key} must be square, got {v.shape}")
            dims.add(v.rows)
        else:
            raise TypeError(f"{key} must be a Matrix or Weight")
    if len(dims) != 1:
        raise DimensionMismatch(f"instance dimensions disagree: {sorted(dims)}")
    rec = _Recorder(inst)
    _CHECKERS[theorem](rec)
    return rec.report(theorem)


# ---------------------------------------------------------------------------
# instance generation per theorem
# ---------------------------------------------------------------------------

Instance = dict[str, Any]


def _weighted(fn):
    def build(cfg: g.GenConfig, rng: random.Random) -> Instance:
        w = g.random_weight(cfg, rng)
        a, b = fn(cfg, rng, w)
        return {"a": a, "b": b, "w": w}

    return build


def _mixed(*builders, weights=None):
    def build(cfg: g.GenConfig, rng: random.Random) -> Instance:
        return rng.choices(builders, weights=weights)[0](cfg, rng)

    return build


def _from_triple(fn):
    def build(cfg: g.GenConfig, rng: random.Random) -> Instance:
        a, b, w = fn(cfg, rng)
        return {"a": a, "b": b, "w": w}

    return build


_block = _from_triple(g.gen_block_pair)
_block_orth = _from_triple(lambda cfg, rng: g.gen_block_pair(cfg, rng, orthogonal=True))
_core_pair = _weighted(lambda cfg, rng, w: g.gen_core_pair(cfg, rng, w))
_core_pair_prod = _weighted(lambda cfg, rng, w: g.gen_core_pair(cfg, rng, w, product=True))


def _cline_inst(cfg, rng):
    x, y = g.gen_cline_pair(cfg, rng)
    return {"x": x, "y": y}


def _group_add_inst(cfg, rng):
    c, d = g.gen_group_orthogonal_pair(cfg, rng)
    return {"c": c, "d": d}


_DIRECTED: dict[TheoremId, Callable[[g.GenConfig, random.Random], Instance]] = {
    TheoremId.ADD_CORE: _weighted(lambda cfg, rng, w: g.gen_additive_pair(cfg, rng, w)),
    TheoremId.ADD_CORE_DISJOINT: _weighted(lambda cfg, rng, w: g.gen_additive_pair(cfg, rng, w, disjoint=True)),
    TheoremId.ADD_DUAL: _weighted(lambda cfg, rng, w: g.gen_dual_additive_pair(cfg, rng, w)),
    TheoremId.ADD_DUAL_DISJOINT: _weighted(lambda cfg, rng, w: g.gen_dual_additive_pair(cfg, rng, w, disjoint=True)),
    TheoremId.ADD_DUAL_DISJOINT_AS_PRINTED: _weighted(lambda cfg, rng, w: g.gen_dual_additive_pair(cfg, rng, w)),
    TheoremId.SUM_ALT: _weighted(g.gen_sum_alt_pair),
    TheoremId.SUM_ALT_PROOF_VARIANT: _weighted(g.gen_range_cover_pair),
    TheoremId.DIFF: _weighted(g.gen_difference_pair),
    TheoremId.ROL_SUFF: _from_triple(g.gen_rol_suff_pair),
    TheoremId.ROL_DUAL_SUFF: _from_triple(g.gen_rol_dual_suff_pair),
    TheoremId.ROL_NEC: _mixed(_from_triple(g.gen_rol_suff_pair), _block, _weighted(g.gen_a2ba_pair)),
    TheoremId.ROL_A2BA: _weighted(g.gen_a2ba_pair),
    TheoremId.ROL_DUAL_B2BA: _weighted(g.gen_b2ba_pair),
    TheoremId.ROL_IFF_RANGE: _mixed(_block_orth, _weighted(g.gen_range_swap_pair)),
    TheoremId.ROL_IFF_BAB: _mixed(_block, _core_pair_prod, _weighted(g.gen_a2ba_pair)),
    TheoremId.DEDEKIND_EQUIV: _mixed(_block, _core_pair, _weighted(g.gen_a2ba_pair)),
    TheoremId.DEDEKIND_COR: _mixed(_block, _core_pair, _weighted(g.gen_a2ba_pair)),
    TheoremId.MIXED_GROUP: _mixed(_block, _core_pair),
    TheoremId.UNITARY_A: _weighted(g.gen_unitary_a_instance),
    TheoremId.UNITARY_B: _weighted(g.gen_unitary_b_instance),
    TheoremId.BAB_CHAR: _weighted(g.gen_bab_instance),
    TheoremId.CLINE: _cline_inst,
    TheoremId.GROUP_ADD: _group_add_inst,
}


def generate_instance(theorem: TheoremId, cfg: g.GenConfig, index: int, undirected: bool = False) -> Instance:
    """Instance ``index`` of the seeded stream for ``theorem``, keyed by :func:`roles`."""
    theorem = TheoremId(theorem)
    rng = g.rng_for(cfg, theorem.value, index, "u" if undirected else "d")
    if undirected and theorem not in _UNWEIGHTED:
        raw = _core_pair(cfg, rng)
    else:
        raw = _DIRECTED[theorem](cfg, rng)
    wkey = "n" if theorem in _DUAL_WEIGHTED else "m"
    return {(wkey if k == "w" else k): v for k, v in raw.items()}


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def instance_to_json(inst: Mapping[str, Any]) -> dict[str, Any]:
    return {k: to_json_obj(v.matrix if isinstance(v, Weight) else v) for k, v in inst.items()}


@dataclass
class SuiteSummary:
    theorem: TheoremId
    seed: int
    dim: int
    count: int
    undirected: bool = False
    verdicts: list[str] = field(default_factory=list)
    instances: list[dict[str, Any]] = field(default_factory=list)
    failures: list[dict[str, Any]] = field(default_factory=list)
    converse_witnesses: int = 0

    def tally(self, verdict: Verdict) -> int:
        return sum(1 for v in self.verdicts if v == verdict.value)

    @property
    def passed(self) -> int:
        return self.tally(Verdict.PASS)

    @property
    def failed(self) -> int:
        return self.tally(Verdict.FAIL)

    @property
    def not_met(self) -> int:
        return self.tally(Verdict.HYPOTHESIS_NOT_MET)

    def to_json(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem.value,
            "seed": self.seed,
            "dim": self.dim,
            "count": self.count,
            "undirected": self.undirected,
            "pass": self.passed,
            "fail": self.failed,
            "hypothesis_not_met": self.not_met,
            "converse_witnesses": self.converse_witnesses,
            "instances": [{"index": i, "verdict": v, "matrices": m} for i, (v, m) in enumerate(zip(self.verdicts, self.instances))],
            "failures": self.failures,
        }


def _run_one(args: tuple[TheoremId, g.GenConfig, int, bool]) -> tuple[str, dict[str, Any], bool, dict[str, Any] | None]:
    theorem, cfg, index, undirected = args
    inst = generate_instance(theorem, cfg, index, undirected)
    rep = check(theorem, inst)
    mats = instance_to_json(inst)
    failure = {"index": index, "matrices": mats, "report": rep.to_json()} if rep.overall is Verdict.FAIL else None
    return rep.overall.value, mats, rep.converse_witness, failure


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("WCORE_THREADS", "1")))
    except ValueError:
        return 1


def run_suite(theorem: TheoremId | str, count: int, seed: int, dim: int = 3, undirected: bool = False) -> SuiteSummary:
    """Check ``count`` seeded instances; results are ordered by instance index."""
    theorem = TheoremId(theorem)
    if count < 0:
        raise ValueError("count must be non-negative")
    cfg = g.GenConfig(dim=dim, seed=seed)
    summary = SuiteSummary(theorem, seed, dim, count, undirected)
    jobs = [(theorem, cfg, i, undirected) for i in range(count)]
    workers = _workers()
    if workers > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    for verdict, mats, witness, failure in results:
        summary.verdicts.append(verdict)
        summary.instances.append(mats)
        summary.converse_witnesses += witness
        if failure is not None:
            summary.failures.append(failure)
    return summary
