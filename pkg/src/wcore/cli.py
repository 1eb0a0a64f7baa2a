"""Command-line front end.

Exit codes: 0 success, 1 usage/parse/dimension error, 2 inverse absent,
3 a false verdict (suite Fail, failed verification, example mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any, Callable, Sequence

from . import inverses as inv
from .formats import FormatError, dumps_text, from_json_obj, loads, to_json_obj
from .linalg import DimensionMismatch, Matrix
from .search import Property, search
from .theorems import REGISTRY, TheoremId, Verdict, check, run_suite
from .worked_examples import examples_to_json, run_examples

EXIT_OK, EXIT_ERROR, EXIT_ABSENT, EXIT_FALSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_matrix(path: str) -> Matrix:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return loads(text)


def _emit(obj: Any, out: str | None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _one(a: Matrix) -> inv.InverseResult:
    x = inv.one_inverse(a)
    return inv.InverseResult(x, inv.verify_equations(a, x, [inv.EquationTag.E1]))


# weighted kinds need --weight; the rest reject it
_WEIGHTED: dict[str, Callable[[Matrix, inv.Weight], inv.InverseResult]] = {
    "g13m": inv.inverse_13m,
    "g14n": inv.inverse_14n,
    "wcore": inv.weighted_core,
    "wdualcore": inv.weighted_dual_core,
}
_PLAIN: dict[str, Callable[[Matrix], inv.InverseResult]] = {
    "one": _one,
    "group": inv.group_inverse,
    "core": inv.core_inverse,
    "dualcore": inv.dual_core_inverse,
}
KINDS = ["one", "g13m", "g14n", "group", "drazin", "core", "wcore", "dualcore", "wdualcore"]


def cmd_compute(args: argparse.Namespace) -> int:
    a = _read_matrix(args.matrix)
    index = None
    if args.kind in _WEIGHTED:
        if not args.weight:
            raise UsageError(f"--weight is required for kind {args.kind}")
        res = _WEIGHTED[args.kind](a, inv.Weight(_read_matrix(args.weight)))
    elif args.weight:
        raise UsageError(f"kind {args.kind} takes no weight")
    elif args.kind == "drazin":
        index, res = inv.drazin_inverse(a)
    else:
        res = _PLAIN[args.kind](a)
    cert = {t.value: ok for t, ok in res.certificate}
    if args.format == "json":
        obj: dict[str, Any] = {"kind": args.kind, "present": res.present, "value": to_json_obj(res.value) if res.present else None}
        if index is not None:
            obj["index"] = index
        obj["certificate"] = cert
        obj["method"] = res.method.value
        _emit(obj, None)
    else:
        sys.stdout.write(dumps_text(res.value) if res.present else "ABSENT\n")
        if index is not None:
            sys.stdout.write(f"index {index}\n")
        if cert:
            sys.stdout.write("certificate " + " ".join(f"{k}={'true' if v else 'false'}" for k, v in cert.items()) + "\n")
    return EXIT_OK if res.present else EXIT_ABSENT


def _read_instance(path: str) -> dict[str, Any]:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON instance: {exc}") from exc
    if not isinstance(raw, dict):
        raise FormatError("instance must be a JSON object of role -> matrix")
    inst: dict[str, Any] = {}
    for key, val in raw.items():
        if isinstance(val, list) and val and isinstance(val[0], list):
            # bare nested rows are accepted as shorthand
            val = {"rows": len(val), "cols": len(val[0]), "entries": val}
        mat = from_json_obj(val)
        inst[key] = inv.Weight(mat) if key in ("m", "n") else mat
    return inst


def cmd_verify(args: argparse.Namespace) -> int:
    if args.theorem:
        if not args.instance:
            raise UsageError("--theorem needs --instance")
        rep = check(_theorem(args.theorem), _read_instance(args.instance))
        _emit(rep.to_json(), args.out)
        return EXIT_FALSE if rep.overall is Verdict.FAIL else EXIT_OK
    if not (args.matrix and args.candidate and args.tags):
        raise UsageError("verify needs --theorem/--instance or --matrix/--candidate/--tags")
    a, x = _read_matrix(args.matrix), _read_matrix(args.candidate)
    try:
        tags = [inv.EquationTag(t.strip()) for t in args.tags.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    dim = a.rows
    ctx = inv.RingContext(
        dim,
        inv.Weight(_read_matrix(args.m)) if args.m else inv.Weight.identity(dim),
        inv.Weight(_read_matrix(args.n)) if args.n else inv.Weight.identity(dim),
    )
    cert = inv.verify_equations(a, x, tags, ctx, args.k)
    _emit({t.value: ok for t, ok in cert}, args.out)
    return EXIT_OK if all(ok for _, ok in cert) else EXIT_FALSE


def _theorem(name: str) -> TheoremId:
    try:
        return TheoremId(name.upper())
    except ValueError as exc:
        raise UsageError(f"unknown theorem {name!r}") from exc


def cmd_suite(args: argparse.Namespace) -> int:
    ids = list(REGISTRY) if args.theorem.lower() == "all" else [_theorem(args.theorem)]
    reports, any_fail = [], False
    for t in ids:
        t0 = time.perf_counter()
        s = run_suite(t, args.count, args.seed, args.dim, undirected=args.undirected)
        any_fail |= s.failed > 0
        reports.append(s.to_json())
        print(
            f"{t.value:<30} pass={s.passed:<4} fail={s.failed:<4} hypothesis_not_met={s.not_met:<4} ({time.perf_counter() - t0:.1f}s)",
            file=sys.stderr if not args.out else sys.stdout,
        )
    doc = {"seed": args.seed, "dim": args.dim, "count": args.count, "suites": reports}
    if args.out:
        _emit(doc, args.out)
    elif not args.quiet:
        _emit(doc, None)
    return EXIT_FALSE if any_fail else EXIT_OK


def cmd_examples(args: argparse.Namespace) -> int:
    results = run_examples()
    if args.json:
        _emit(examples_to_json(results), None)
    else:
        for r in results:
            print(f"{r.key:<26} {'match' if r.match else 'MISMATCH'}")
            for item in r.mismatches():
                print(f"  {item.label}: expected {item.expected!r}, got {item.actual!r}")
        print(f"{sum(r.match for r in results)}/{len(results)} examples match")
    return EXIT_OK if all(r.match for r in results) else EXIT_FALSE


def cmd_search(args: argparse.Namespace) -> int:
    res = search(args.property, args.budget, args.dim, args.seed, args.max_witnesses)
    _emit(res.to_json(), args.out)
    print(f"{res.prop.value}: {len(res.witnesses)} witnesses in {res.examined} candidates", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wcore", description="Exact weighted core inverses and theorem checks over M_k(Q).")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute one generalized inverse")
    c.add_argument("--kind", required=True, choices=KINDS)
    c.add_argument("--matrix", required=True, help="matrix file (text or JSON), '-' for stdin")
    c.add_argument("--weight", help="symmetric invertible weight file")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="check a theorem instance or a candidate inverse")
    v.add_argument("--theorem")
    v.add_argument("--instance", help="JSON object mapping roles (a, b, m, ...) to matrices")
    v.add_argument("--matrix")
    v.add_argument("--candidate")
    v.add_argument("--tags", help="comma-separated equation tags, e.g. E1,E2,E3m")
    v.add_argument("--m", help="weight used by E3m")
    v.add_argument("--n", help="weight used by E4n")
    v.add_argument("--k", type=int, help="index used by E6k")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("suite", help="run seeded theorem suites")
    s.add_argument("--theorem", default="all", help="theorem id or 'all'")
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--dim", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--undirected", action="store_true", help="random core-invertible pairs instead of directed generators")
    s.add_argument("--out")
    s.add_argument("--quiet", action="store_true", help="suppress the JSON report on stdout")
    s.set_defaults(func=cmd_suite)

    e = sub.add_parser("examples", help="recompute the five worked examples")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_examples)

    r = sub.add_parser("search", help="search for converse or direction witnesses")
    r.add_argument("--property", required=True, choices=[x.value for x in Property])
    r.add_argument("--budget", type=int, default=10_000)
    r.add_argument("--dim", type=int, default=2)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--max-witnesses", type=int)
    r.add_argument("--out")
    r.set_defaults(func=cmd_search)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, FormatError, DimensionMismatch, inv.InvalidWeight, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
