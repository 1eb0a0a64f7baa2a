"""Randomized search for converse-refuting and direction-refuting instances.

Candidates are drawn from a seeded stream whose first entry is a planted
known witness (when one exists for the property).  Every emitted witness is
re-checked from scratch through :func:`wcore.theorems.check` before it is
reported.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from . import generators as g
from . import worked_examples as wx
from .inverses import Weight
from .linalg import Matrix, rank
from .theorems import TheoremId, TheoremReport, check, instance_to_json


class Property(str, enum.Enum):
    ROL_CONVERSE = "rol_converse"
    DUAL_ROL_CONVERSE = "dual_rol_converse"
    ROL_IFF_DIRECTION = "rol_iff_direction"


_ROL = "(ab)^(#,m) = b^(#,m) a^(#,m)"
_DUAL_ROL = "(ab)_(n,#) = b_(n,#) a_(n,#)"
_IFF_THEOREMS = (TheoremId.ROL_IFF_RANGE, TheoremId.ROL_IFF_BAB)


@dataclass
class SearchResult:
    prop: Property
    budget: int
    dim: int
    seed: int
    examined: int = 0
    witnesses: list[dict[str, Any]] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        return {
            "property": self.prop.value,
            "budget": self.budget,
            "dim": self.dim,
            "seed": self.seed,
            "examined": self.examined,
            "witness_count": len(self.witnesses),
            "witnesses": self.witnesses,
        }


def _small_matrix(rng: random.Random, k: int, bound: int) -> Matrix:
    # low ranks dominate: reverse-order coincidences live there
    r = rng.choice([1] * 3 + list(range(1, k + 1)))
    left = g.random_integer_matrix(rng, k, r, bound)
    right = g.random_integer_matrix(rng, r, k, bound)
    return left @ right


def _small_weight(rng: random.Random, k: int) -> Weight:
    if rng.random() < 0.5:
        return Weight(Matrix.diag([rng.randint(1, 3) for _ in range(k)]))
    p = g.random_integer_matrix(rng, k, k, 1)
    return Weight(p.T @ p + Matrix.identity(k))


def _candidates(prop: Property, dim: int, seed: int) -> Iterator[dict[str, Any]]:
    if dim == 2 and prop is Property.ROL_CONVERSE:
        yield dict(wx.INPUTS["core_converse"])
    elif dim == 2 and prop is Property.DUAL_ROL_CONVERSE:
        yield dict(wx.INPUTS["dual_core_converse"])
    rng = random.Random(f"search/{prop.value}/{dim}/{seed}")
    key = "n" if prop is Property.DUAL_ROL_CONVERSE else "m"
    bound = 2 if dim <= 2 else 3
    while True:
        yield {"a": _small_matrix(rng, dim, bound), "b": _small_matrix(rng, dim, bound), key: _small_weight(rng, dim)}


def _index_one(x: Matrix) -> bool:
    return rank(x) == rank(x @ x)


def _rol_converse(inst: dict[str, Any]) -> list[TheoremReport]:
    a, b, m = inst["a"], inst["b"], inst["m"]
    # cheap index filter before any inverse is formed
    if not (_index_one(a) and _index_one(b) and _index_one(a @ b)):
        return []
    rep = check(TheoremId.ROL_SUFF, inst)
    members = rep.hypothesis("a in R^(#,m)") and rep.hypothesis("b in R^(#,m)")
    return [rep] if members and rep.conclusion(_ROL) and not rep.hypotheses_hold else []


def _dual_rol_converse(inst: dict[str, Any]) -> list[TheoremReport]:
    a, b = inst["a"], inst["b"]
    if not (_index_one(a) and _index_one(b) and _index_one(a @ b)):
        return []
    rep = check(TheoremId.ROL_DUAL_SUFF, inst)
    members = rep.hypothesis("a in R_(n,#)") and rep.hypothesis("b in R_(n,#)")
    return [rep] if members and rep.conclusion(_DUAL_ROL) and not rep.hypotheses_hold else []


def _iff_direction(inst: dict[str, Any]) -> list[TheoremReport]:
    a, b = inst["a"], inst["b"]
    if not (_index_one(a) and _index_one(b) and _index_one(a @ b)):
        return []
    out = []
    for t in _IFF_THEOREMS:
        rep = check(t, inst)
        if rep.hypotheses_hold and not rep.conclusions_hold:
            out.append(rep)
    return out


_TESTS: dict[Property, Callable[[dict[str, Any]], list[TheoremReport]]] = {
    Property.ROL_CONVERSE: _rol_converse,
    Property.DUAL_ROL_CONVERSE: _dual_rol_converse,
    Property.ROL_IFF_DIRECTION: _iff_direction,
}


def is_witness(prop: Property | str, inst: dict[str, Any]) -> bool:
    return bool(_TESTS[Property(prop)](inst))


def search(prop: Property | str, budget: int, dim: int = 2, seed: int = 0, max_witnesses: int | None = None) -> SearchResult:
    """Examine up to ``budget`` candidates, stopping early after ``max_witnesses``."""
    prop = Property(prop)
    if budget < 0:
        raise ValueError("budget must be non-negative")
    result = SearchResult(prop, budget, dim, seed)
    stream = _candidates(prop, dim, seed)
    for index in range(budget):
        inst = next(stream)
        result.examined += 1
        for rep in _TESTS[prop](inst):
            again = check(rep.theorem, inst)
            assert again.to_json() == rep.to_json(), "witness failed to re-verify"
            result.witnesses.append({"index": index, "theorem": rep.theorem.value, "matrices": instance_to_json(inst), "report": rep.to_json()})
        if max_witnesses is not None and len(result.witnesses) >= max_witnesses:
            break
    return result

