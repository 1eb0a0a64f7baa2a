"""Converse and direction searches for the reverse order laws.

    python3 scripts/converse_search.py --budget 10000 --dims 2 3
"""

import argparse
import json
import time

from wcore.search import Property, search


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--dims", type=int, nargs="+", default=[2])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    args = p.parse_args()

    results = []
    for dim in args.dims:
        for prop in Property:
            t0 = time.perf_counter()
            res = search(prop, args.budget, dim, args.seed)
            first = [w["index"] for w in res.witnesses[:5]]
            print(f"k={dim} {prop.value:<18} witnesses={len(res.witnesses):<5} first indices={first} {time.perf_counter() - t0:.1f}s", flush=True)
            results.append(res.to_json())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(results, fh)


if __name__ == "__main__":
    main()
