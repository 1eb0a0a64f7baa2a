"""Probes behind the recorded discrepancies.

1. additive formula with the range-cover hypothesis ``b b^(#,m) a = a`` in place
   of ``b a^(#,m) a = a``;
2. disjoint dual additive formula without ``ba = 0``;
3. transpose duality: ``(a^(#,m))^T`` against the dual core inverse of ``a^T``
   with weight ``m`` and with ``m^-1``, under positive definite and indefinite weights.
"""

import argparse
from collections import Counter

from wcore import generators as g
from wcore.inverses import EquationTag, RingContext, Weight, inverse_13m, inverse_14n, verify_equations, wc, wdc
from wcore.linalg import Matrix
from wcore.theorems import TheoremId, run_suite


def duality(count: int, dim: int, seed: int, indefinite: bool) -> Counter:
    cfg = g.GenConfig(dim=dim, seed=seed, indefinite=indefinite)
    tally: Counter = Counter()
    for i in range(count):
        rng = g.rng_for(cfg, "duality", i)
        m = g.random_weight(cfg, rng)
        a = g.random_rank_matrix(cfg, rng, rng.randint(1, dim - 1))
        x = wc(a, m)
        tally["13m exists"] += inverse_13m(a, m).present
        tally["14n exists for (a^T, m)"] += inverse_14n(a.T, m).present
        tally["14n exists for (a^T, m^-1)"] += inverse_14n(a.T, m.inverse).present
        if x is None:
            continue
        tally["core present"] += 1
        tally["x^T == dual(a^T, m)"] += wdc(a.T, m) == x.T
        tally["x^T == dual(a^T, m^-1)"] += wdc(a.T, m.inverse) == x.T
    return tally


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    for dim in (2, 3, 4):
        for t in (TheoremId.SUM_ALT_PROOF_VARIANT, TheoremId.ADD_DUAL_DISJOINT_AS_PRINTED):
            s = run_suite(t, args.count, args.seed, dim)
            print(f"k={dim} {t.value:<30} pass={s.passed} fail={s.failed} not_met={s.not_met}")
    for indefinite in (False, True):
        label = "indefinite" if indefinite else "positive definite"
        print(f"duality, {label} weights, k=3:", dict(duality(args.count, 3, args.seed, indefinite)))

    # the {1,3^m} element transposes into aT{1,4^(m^-1)}, not aT{1,4^m}
    a = Matrix.from_rows([[2, -1], [-4, 2]])
    m = Weight(Matrix.from_rows([[6, -1], [-1, 3]]))
    x = inverse_13m(a, m).value
    for label, w in (("m", m), ("m^-1", m.inverse)):
        cert = verify_equations(a.T, x.T, [EquationTag.E1, EquationTag.E4n], RingContext(2, Weight.identity(2), w))
        print(f"x^T against a^T with weight {label}:", {t.value: ok for t, ok in cert})
    print("(a^(#,m))^T == dual(a^T, m):", wc(a, m).T == wdc(a.T, m), "| with m^-1:", wc(a, m).T == wdc(a.T, m.inverse))

if __name__ == "__main__":
    main()
