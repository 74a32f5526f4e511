"""Command-line entry point: ``rwise <command> ...``.

Exit codes: 0 ok, 1 verification failure, 2 usage or malformed input,
3 precondition violated (e.g. counting on a non-intersecting family without
--force), 4 search found a family beating the reference count.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path
from typing import Any

from . import constructions
from .covers import classify_cover_family, covering_number, min_covers
from .family import (Family, FamilyError, NotIntersectingError, elements_of, is_maximal,
                     is_r_wise_t_intersecting, is_trivial, iter_triangles)
from .formulas import (exact_count_G, format_exact, intersection_floor, lemma21_gate, lower_bound_L21,
                       size_bound_L22, size_bound_L42, size_bound_L42_special, size_bounds_L24,
                       threshold_n0)
from .hypergraph import build_cover_hypergraph, decompose, verdict_consequence
from .io import FamilyFileError, dumps, read_family
from .search import SearchReport, exhaustive_search, stochastic_search
from .verify import SUITES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_PRECONDITION, EXIT_EXCEEDED = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _emit(obj: Any) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def gate_status(n: int, k: int, r: int, t: int) -> dict[str, Any]:
    """Which large-n guarantees apply at these parameters."""
    gates: dict[str, Any] = {"n>=k^4": lemma21_gate(n, k)}
    for lemma in ("4.3", "4.4", "4.5", "4.6"):
        if lemma == "4.3" and r < 3:
            continue
        spec = threshold_n0(r, t, lemma)
        gates[f"lemma{lemma}"] = {"c": format_exact(spec.c), "d": format_exact(spec.d),
                                  "n0": format_exact(spec.n0(k)), "holds": spec.holds(n, k)}
    return gates


# construct -----------------------------------------------------------------

def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--family {args.family} needs {', '.join(missing)}")


def cmd_construct(args: argparse.Namespace) -> int:
    kind = args.family
    if kind in ("g", "gprime", "two-block"):
        _need(args, "n", "k", "r", "t")
        builder = {"g": constructions.build_G, "gprime": constructions.build_Gprime,
                   "two-block": constructions.build_two_block}[kind]
        fam, r = builder(args.n, args.k, args.r, args.t), args.r
    elif kind == "g-block":
        _need(args, "n", "k", "r", "t", "i")
        fam, r = constructions.build_G_block(args.n, args.k, args.r, args.t, args.i), args.r
    elif kind == "trivial":
        _need(args, "n", "k", "t")
        fam, r = constructions.build_trivial(args.n, args.k, args.t), args.r
    else:
        _need(args, "n", "k", "t", "ell")
        fam, r = constructions.build_frankl(args.n, args.k, args.t, args.ell), args.r
    text = dumps(fam, r, args.t)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        if not args.quiet:
            _emit({"family": kind, "size": len(fam), "out": args.out})
    else:
        sys.stdout.write(text)
    return EXIT_OK


# family reports ------------------------------------------------------------

def _load(args: argparse.Namespace) -> tuple[Family, int, int]:
    fam, meta = read_family(args.inp)
    r = args.r if args.r is not None else meta.get("r", 2)
    t = args.t if args.t is not None else meta.get("t")
    if t is None:
        raise UsageError("t is neither given with --t nor stored in the file")
    return fam, r, t


def _sets(masks) -> list[list[int]]:
    return [list(elements_of(m)) for m in masks]


def cmd_check(args: argparse.Namespace) -> int:
    fam, r, t = _load(args)
    inter = is_r_wise_t_intersecting(fam, r, t)
    report = {"n": fam.n, "k": fam.k, "r": r, "t": t, "size": len(fam), "intersecting": inter,
              "trivial": is_trivial(fam, t), "maximal": inter and is_maximal(fam, r, t),
              "tau": covering_number(fam, t) if len(fam) else None}
    if not args.quiet and fam.n >= r + t:
        report["gates"] = gate_status(fam.n, fam.k, r, t)
    _emit(report)
    return EXIT_OK


def cmd_triangles(args: argparse.Namespace) -> int:
    fam, r, t = _load(args)
    if not args.force and not is_r_wise_t_intersecting(fam, r, t):
        raise NotIntersectingError(f"family is not {r}-wise {t}-intersecting; pass --force to count anyway")
    count = 0
    for tri in iter_triangles(fam, r, t, force=True):
        count += 1
        if args.list and not args.quiet:
            _emit(_sets(tri))
    report: dict[str, Any] = {"r": r, "t": t, "triangle_count": count, "forced": bool(args.force)}
    if not args.quiet and fam.n >= r + t and fam.k >= r + t - 1:
        report["reference_count"] = exact_count_G(fam.n, fam.k, r, t)
        report["gates"] = gate_status(fam.n, fam.k, r, t)
    _emit(report)
    return EXIT_OK


def cmd_covers(args: argparse.Namespace) -> int:
    fam, r, t = _load(args)
    if not len(fam):
        raise UsageError("the empty family has no finite covering number")
    tau = covering_number(fam, t)
    covers = min_covers(fam, t)
    report: dict[str, Any] = {"t": t, "tau": tau, "min_cover_count": len(covers)}
    try:
        cls = classify_cover_family(fam, t, r)
        report["classification"] = cls.label
    except FamilyError as exc:
        report["classification"] = None
        report["classification_note"] = str(exc)
    if args.list and not args.quiet:
        report["min_covers"] = _sets(covers)
    _emit(report)
    return EXIT_OK


def cmd_hypergraph(args: argparse.Namespace) -> int:
    fam, r, t = _load(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        hg = build_cover_hypergraph(fam, t)
        rep = decompose(hg, r)
    report: dict[str, Any] = {
        "r": r, "t": t, "tau": hg.tau, "edge_count": len(hg.edges),
        "components": [{"order": c.order, "clique": c.is_clique, "vertices": list(elements_of(c.vertices))}
                       for c in rep.components],
        "verdict": rep.verdict.value if rep.verdict else None,
        "warnings": [str(w.message) for w in caught] + list(rep.warnings),
    }
    if rep.verdict is not None:
        claim = verdict_consequence(rep.verdict, r, t, rep)
        report["claim"] = {"statement": claim.description, "applies": claim.applies(fam.n, fam.k),
                           "holds": claim.check(fam)}
    if args.list and not args.quiet:
        report["edges"] = _sets(hg.edges)
    _emit(report)
    return EXIT_OK


# formula -------------------------------------------------------------------

FORMULA_ARGS = {
    "exact-count": ("n", "k", "r", "t"),
    "lower-21": ("n", "k", "r", "t"),
    "size-22": ("n", "k", "t"),
    "size-24": ("n", "k", "t", "case"),
    "size-42": ("n", "k", "t", "ell", "s"),
    "floor-41": ("r", "s", "t"),
    "threshold": ("r", "t", "lemma"),
}


def cmd_formula(args: argparse.Namespace) -> int:
    which = args.which
    missing = [f"--{a}" for a in FORMULA_ARGS[which] if getattr(args, a) is None]
    if missing and not (which == "size-42" and args.r is not None and args.ell is None and args.s is None):
        raise UsageError(f"--which {which} needs {', '.join(missing)}")
    a = args
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        if which == "exact-count":
            value: Any = exact_count_G(a.n, a.k, a.r, a.t)
        elif which == "lower-21":
            value = lower_bound_L21(a.n, a.k, a.r, a.t)
        elif which == "size-22":
            value = size_bound_L22(a.n, a.k, a.t)
        elif which == "size-24":
            value = size_bounds_L24(a.n, a.k, a.t, a.case)
        elif which == "size-42":
            if a.ell is None:
                full, relaxed = size_bound_L42_special(a.n, a.k, a.r, a.t)
                value = None
                print(f"{format_exact(full)} {format_exact(relaxed)}")
            else:
                value = size_bound_L42(a.n, a.k, a.t, a.ell, a.s)
        elif which == "floor-41":
            value = intersection_floor(a.r, a.s, a.t)
        else:
            spec = threshold_n0(a.r, a.t, a.lemma)
            value = None
            line = f"c={format_exact(spec.c)} d={format_exact(spec.d)}"
            if not spec.c_exact and spec.c_base is not None:
                line += f" c_exact=max({format_exact(spec.c_base)}^(1/{spec.c_root}),2)"
            if a.k is not None:
                line += f" n0={format_exact(spec.n0(a.k))}"
            print(line)
    if value is not None:
        print(format_exact(value))
    if not args.quiet:
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
    return EXIT_OK


# verify --------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite, max_n=args.max_n, max_k=args.max_k, seed=args.seed,
                        samples=args.samples)
    failed = 0
    for res in results:
        failed += res.failed
        if not args.quiet:
            print(f"{res.name}: {res.passed} passed, {res.failed} failed")
            for what in res.failures:
                print(f"  FAIL {what}")
        if res.counterexample is not None:
            path = Path(args.counterexample_dir) / f"counterexample-{res.name}.json"
            path.write_text(json.dumps(res.counterexample, indent=1) + "\n", encoding="utf-8")
            if not args.quiet:
                print(f"  first counterexample written to {path}")
    summary = {"suite": args.suite, "passed": sum(r.passed for r in results), "failed": failed,
               "suites": {r.name: [r.passed, r.failed] for r in results}}
    print("SUMMARY " + json.dumps(summary, separators=(",", ":")))
    return EXIT_OK if failed == 0 else EXIT_VERIFY


# search --------------------------------------------------------------------

def _search_output(report: SearchReport, args: argparse.Namespace) -> int:
    data = report.to_dict()
    data["gates"] = gate_status(report.n, report.k, report.r, report.t) if report.n >= report.r + report.t else None
    text = json.dumps(data, separators=(",", ":")) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.quiet:
        _emit({"best_count": report.best_count, "reference_count": report.reference_count,
               "exceeded": report.exceeded, "families_examined": report.families_examined})
    elif not args.out:
        sys.stdout.write(text)
    else:
        _emit({"best_count": report.best_count, "exceeded": report.exceeded, "out": args.out})
    return EXIT_EXCEEDED if report.exceeded else EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    if args.mode == "exhaustive":
        if args.r not in (None, 2):
            raise UsageError("exhaustive search supports r = 2 only")
        report = exhaustive_search(args.n, args.k, args.t)
    else:
        if args.r is None:
            raise UsageError("stochastic search needs --r")
        report = stochastic_search(args.n, args.k, args.r, args.t, seed=args.seed,
                                   budget=args.budget, workers=args.workers)
    return _search_output(report, args)


# parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rwise", description="r-wise t-intersecting families and their triangles")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="summary output only")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="write a named construction to a family file")
    p.add_argument("--family", required=True, choices=["g", "gprime", "trivial", "frankl", "two-block", "g-block"])
    for name in ("n", "k", "r", "t", "ell", "i"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_construct)

    for name, func, helptext in (("check", cmd_check, "intersection, triviality, maximality, tau"),
                                 ("triangles", cmd_triangles, "count (r+1, t)-triangles"),
                                 ("covers", cmd_covers, "covering number, minimum covers, classification"),
                                 ("hypergraph", cmd_hypergraph, "cover hypergraph components and verdict")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--in", dest="inp", required=True, help="family file")
        p.add_argument("--r", type=int, help="default: file value, else 2")
        p.add_argument("--t", type=int, help="default: file value")
        p.add_argument("--list", action="store_true", help="also list triangles, covers or edges")
        p.add_argument("--force", action="store_true", help="count even if the family is not r-wise t-intersecting")
        p.set_defaults(func=func)

    p = sub.add_parser("formula", parents=[common], help="evaluate a closed form exactly")
    p.add_argument("--which", required=True, choices=list(FORMULA_ARGS))
    for name in ("n", "k", "r", "t", "case", "ell", "s"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--lemma", choices=["4.3", "4.4", "4.5", "4.6"])
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", default="all", choices=[*SUITES, "all"])
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int, help="random cases for the sampled suites")
    p.add_argument("--counterexample-dir", default=".", help="where the first counterexample is written")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="look for triangle-rich maximal families")
    p.add_argument("mode", choices=["exhaustive", "stochastic"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=100)
    p.add_argument("--workers", type=int, help="default: $RWISE_WORKERS, else 1")
    p.add_argument("--out", help="write the report here")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotIntersectingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (UsageError, FamilyFileError, FamilyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
