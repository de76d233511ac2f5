"""Command-line interface.

Exit codes: 0 all checks pass, 1 a check failed, 2 invalid input,
3 a truncated check did not stabilize on its ladder.
"""

import argparse
from concurrent.futures import ProcessPoolExecutor
import json
import os
import sys

from liedual import catalog as _catalog
from liedual import checks
from liedual.io import (
    InputError, load_algebra, load_bimodule, load_ideal, load_module, parse_ladder,
)
from liedual.lie import LieAlgebraError, LieModule, validate
from liedual.trunc import TruncationError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3

EXT_FINITE_MODULES = {
    # name -> (algebra, action dict) for modules used by the suite
    "r2-diag": ("r2", [[[0, 0], [0, 1]], [[0, 0], [0, 0]]]),
}


def suite_tasks(seed=0, samples=100):
    """The full verification suite as picklable task tuples."""
    tasks = []
    for e in _catalog.catalog():
        name = e.name
        tasks.append(("axioms", name, ()))
        tasks.append(("pbw", name, (6,)))
        tasks.append(("character", name, ()))
        tasks.append(("cohomology", name, ()))
        for ideal in ("whole", "commutator", "center"):
            if e.ideals[ideal].m:
                tasks.append(("delta", name, (ideal, samples, seed)))
        for b in ("trivial", "adjoint", "dual-adjoint"):
            tasks.append(("poincare", name, (b,)))
    for name, module in (("sl2", "trivial"), ("r2", "trivial"), ("r2", "r2-diag")):
        tasks.append(("ext_finite", name, (module, (3, 4, 5, 6))))
    for name, ideal in (("r2", "span:y"), ("heis3", "center"), ("r3(1)", "commutator")):
        tasks.append(("ext_quotient", name, (ideal, (3, 4, 5, 6))))
    for name in ("abelian1", "abelian2", "r2"):
        tasks.append(("hh_self", name, ((3, 4, 5, 6),)))
    return tasks


def _module(g, spec):
    if spec in EXT_FINITE_MODULES:
        _, acts = EXT_FINITE_MODULES[spec]
        return LieModule(g, acts, name=spec)
    return load_module(g, spec)


def run_task(task):
    check, name, args = task
    g = load_algebra(name)
    if check == "axioms":
        return checks.verify_axioms(g)
    if check == "pbw":
        return checks.verify_pbw(g, *args)
    if check == "character":
        return checks.verify_character(g)
    if check == "cohomology":
        return checks.verify_cohomology(g)
    if check == "delta":
        ideal, samples, seed = args
        return checks.verify_delta(g, load_ideal(g, ideal), ideal, samples, seed)
    if check == "poincare":
        (b,) = args
        return checks.verify_poincare(g, load_bimodule(g, b), b)
    if check == "ext_finite":
        module, ladder = args
        return checks.verify_ext_finite(g, _module(g, module), ladder, module)
    if check == "ext_quotient":
        ideal, ladder = args
        return checks.verify_ext_quotient(g, load_ideal(g, ideal), ladder, ideal)
    if check == "hh_self":
        (ladder,) = args
        return checks.verify_hh_self(g, ladder)
    raise InputError("unknown check %r" % check)


def run_tasks(tasks, jobs=1):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_task, tasks))
    else:
        reports = [run_task(t) for t in tasks]
    return sorted(reports, key=lambda r: r.sort_key())


def report_document(reports, seed=None, include_timing=False):
    doc = {"schema_version": checks.SCHEMA_VERSION,
           "reports": [r.to_dict(include_timing) for r in reports]}
    if seed is not None:
        doc["seed"] = seed
    return doc


def dump_report(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _summary(rep):
    inputs = rep.inputs
    extra = ", ".join("%s=%s" % (k, v) for k, v in sorted(inputs.items())
                      if k not in ("algebra", "algebra_digest", "dim"))
    line = "%-20s %-13s %-9s %s" % (rep.verdict.upper(), rep.check, inputs.get("algebra"), extra)
    if rep.failures:
        line += "  [mismatch: %s]" % ", ".join(rep.failures)
    return line


def _emit(reports, args, seed=None):
    for rep in reports:
        print(_summary(rep))
    if getattr(args, "report", None):
        with open(args.report, "w") as f:
            f.write(dump_report(report_document(reports, seed, args.timings)))
    return checks.overall_exit_code(reports)


def cmd_catalog(args):
    if args.action == "list":
        for e in _catalog.catalog():
            lam = ",".join(str(v) for v in e.expected_character[0])
            print("%-9s dim=%d  commutator=%d  center=%d  lambda=(%s)  %s"
                  % (e.name, e.algebra.n, e.ideals["commutator"].m, e.ideals["center"].m, lam, e.note))
        return EXIT_OK
    try:
        e = _catalog.lookup(args.name)
    except KeyError as exc:
        raise InputError(str(exc)) from None
    from liedual.io import algebra_to_dict
    print(json.dumps(algebra_to_dict(e.algebra), indent=2))
    return EXIT_OK


def cmd_check(args):
    if args.input:
        g = load_algebra("file:" + args.input)
    else:
        g = load_algebra(args.algebra)
    if args.what == "jacobi":
        rep = checks.verify_axioms(g)
        if not rep.passed:
            v = rep.observed["violation"]
            print("%s at (%s)" % (v["kind"], ", ".join(v["labels"])), file=sys.stderr)
        return _emit([rep], args)
    try:
        validate(g)
    except LieAlgebraError as exc:
        raise InputError("not a Lie algebra: %s" % exc) from None
    if args.what == "pbw":
        return _emit([checks.verify_pbw(g, args.degree)], args)
    if args.what == "delta":
        h = load_ideal(g, args.ideal)
        return _emit([checks.verify_delta(g, h, args.ideal, args.samples, args.seed)], args, args.seed)
    raise InputError("unknown check %r" % args.what)


def cmd_verify(args):
    g = load_algebra(args.algebra)
    try:
        validate(g)
    except LieAlgebraError as exc:
        raise InputError("not a Lie algebra: %s" % exc) from None
    ladder = parse_ladder(args.ladder) if args.ladder else None
    what = args.what
    if what == "character":
        rep = checks.verify_character(g)
    elif what == "cohomology":
        rep = checks.verify_cohomology(g)
    elif what == "poincare":
        rep = checks.verify_poincare(g, load_bimodule(g, args.bimodule), args.bimodule)
    elif what == "ext-finite":
        rep = checks.verify_ext_finite(g, load_module(g, args.module), ladder, args.module)
    elif what == "ext-quotient":
        h = load_ideal(g, args.ideal)
        if h.m in (0, g.n):
            raise InputError("ext-quotient needs a proper nonzero ideal (got dim %d)" % h.m)
        rep = checks.verify_ext_quotient(g, h, ladder, args.ideal)
    elif what == "hh-self":
        rep = checks.verify_hh_self(g, ladder, max_n=args.max_n)
    else:
        raise InputError("unknown verification %r" % what)
    return _emit([rep], args)


def cmd_suite(args):
    reports = run_tasks(suite_tasks(args.seed, args.samples), args.jobs)
    code = _emit(reports, args, args.seed)
    counts = {}
    for r in reports:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    print("; ".join("%s: %d" % kv for kv in sorted(counts.items())))
    return code


def build_parser():
    p = argparse.ArgumentParser(prog="liedual", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--report", help="write a JSON report to this path")
        sp.add_argument("--timings", action="store_true", help="include wall-clock ms in the report")

    c = sub.add_parser("catalog", help="list or show built-in algebras")
    c.add_argument("action", choices=["list", "show"])
    c.add_argument("name", nargs="?")
    c.set_defaults(func=cmd_catalog)

    k = sub.add_parser("check", help="structural checks")
    k.add_argument("what", choices=["jacobi", "pbw", "delta"])
    k.add_argument("--input", help="algebra JSON file")
    k.add_argument("--algebra", default="builtin:r2")
    k.add_argument("--degree", type=int, default=6)
    k.add_argument("--ideal", default="whole")
    k.add_argument("--samples", type=int, default=100)
    k.add_argument("--seed", type=int, default=0)
    common(k)
    k.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", help="duality and Ext verifications")
    v.add_argument("what", choices=["character", "cohomology", "poincare", "ext-finite",
                                    "ext-quotient", "hh-self"])
    v.add_argument("--algebra", required=True, help="builtin:NAME or file:PATH")
    v.add_argument("--bimodule", default="trivial", help="trivial|adjoint|dual-adjoint|file:PATH")
    v.add_argument("--module", default="trivial", help="trivial|adjoint|coadjoint|file:PATH")
    v.add_argument("--ideal", default="commutator", help="commutator|center|span:a,b")
    v.add_argument("--ladder", help="comma-separated cutoffs, e.g. 3,4,5,6")
    v.add_argument("--max-n", type=int, default=2, help="largest dimension allowed for hh-self")
    common(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("suite", help="run every check over the catalog")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--jobs", type=int, default=min(4, os.cpu_count() or 1),
                   help="worker processes (1 runs in-process)")
    common(s)
    s.set_defaults(func=cmd_suite)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, TruncationError, LieAlgebraError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


run_cli = main


if __name__ == "__main__":
    sys.exit(main())
