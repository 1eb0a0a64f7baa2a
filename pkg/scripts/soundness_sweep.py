"""Run every theorem suite (registry plus auxiliary variants) directed and undirected.

    python3 scripts/soundness_sweep.py --dims 2 3 4 --count 100 --seed 5 --out sweep.json
"""

import argparse
import json
import time

from wcore.theorems import AUXILIARY, REGISTRY, run_suite


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--dims", type=int, nargs="+", default=[3])
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=5)
    p.add_argument("--out")
    args = p.parse_args()

    rows = []
    for dim in args.dims:
        for undirected in (False, True):
            for t in REGISTRY + AUXILIARY:
                t0 = time.perf_counter()
                s = run_suite(t, args.count, args.seed, dim, undirected=undirected)
                tag = "U" if undirected else "D"
                print(
                    f"k={dim} {tag} {t.value:<30} pass={s.passed:<4} fail={s.failed:<4} "
                    f"not_met={s.not_met:<4} converse={s.converse_witnesses:<4} {time.perf_counter() - t0:5.1f}s",
                    flush=True,
                )
                rows.append({"dim": dim, "undirected": undirected, "theorem": t.value, "auxiliary": t in AUXILIARY,
                             "pass": s.passed, "fail": s.failed, "hypothesis_not_met": s.not_met})
    registry_fails = sum(r["fail"] for r in rows if not r["auxiliary"])
    print(f"registry Fail total: {registry_fails}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=1)


if __name__ == "__main__":
    main()
