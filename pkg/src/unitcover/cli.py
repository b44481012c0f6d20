"""Command line interface.

Groups are given either as a path to a JSON group-definition file or as
``constructor:args``, e.g. ``dihedral:4``, ``abelian:2,2``, ``example_G:2``.
All commands print JSON; the exit code is 0 iff every check passed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions as C
from .cocycles import Cocycle, compute_spaces
from .extensions import extension_exponent, mu_cover, omega_product, plp_check, schur_cover, unitary_cover_exponent
from .groups import GroupError
from .harness import (SUITE_CORPUS_ORDER, SUITES, Analyzer, bounds_report, bounds_table, generate_corpus,
                      run_suite)
from .multiplier import schur_multiplier_homology


def parse_group(text: str):
    if os.path.exists(text):
        return C.load_group(text)
    name, _, args = text.partition(":")
    if name not in C.NAMED:
        raise GroupError(f"{text!r} is neither a file nor one of {sorted(C.NAMED)}")
    if name == "abelian" or name == "abelian_cover":
        return C.NAMED[name]([int(a) for a in args.split(",") if a])
    vals = []
    for a in filter(None, args.split(",")):
        try:
            vals.append(int(a))
        except ValueError:
            vals.append(a)
    return C.NAMED[name](*vals)


def _emit(obj, ok: bool = True) -> int:
    print(json.dumps(obj, indent=1, sort_keys=True))
    return 0 if ok else 1


def _write_json(obj, path):
    Path(path).write_text(json.dumps(obj, sort_keys=True))


def cmd_multiplier(args) -> int:
    G = parse_group(args.group)
    sp = compute_spaces(G)
    inv = sp.multiplier_invariants
    out = {"order": G.order, "multiplier": list(inv.factors), "exponent": inv.exponent, "method": "cocycles"}
    ok = True
    if args.homology:
        h = schur_multiplier_homology(G).invariants
        out["homology"] = list(h.factors)
        ok = h.factors == inv.factors
    return _emit(out, ok)


def cmd_zu_exp(args) -> int:
    G = parse_group(args.group)
    sp = compute_spaces(G)
    return _emit({"order": G.order, "exp_G": G.exponent, "exp_Zu": sp.zu_exponent,
                  "exp_Gamma_u": unitary_cover_exponent(G, sp),
                  "multiplier": list(sp.multiplier_invariants.factors)})


def _extension_summary(ext) -> dict:
    return {"label": ext.label, "order": ext.total.order, "base_order": ext.base.order,
            "kernel": list(ext.kernel_invariants.factors), "exponent": extension_exponent(ext),
            "plp": plp_check(ext)}


def cmd_cover(args) -> int:
    G = parse_group(args.group)
    if args.mu is None:
        ext = schur_cover(G)
    else:
        mu = [int(a) for a in args.mu.split(",")]
        ext = mu_cover(G, mu[0] if len(mu) == 1 and not args.coords else mu)
    if args.out:
        _write_json(ext.to_spec(), args.out)
    return _emit(_extension_summary(ext))


def cmd_omega_product(args) -> int:
    G = parse_group(args.group)
    if args.cocycles:
        docs = json.loads(Path(args.cocycles).read_text())
        gens = [Cocycle(G, int(d["modulus"]), d["values"]) for d in docs]
        ext = omega_product(G, gens)
    else:
        ext = schur_cover(G)
    if args.out:
        _write_json(ext.to_spec(), args.out)
    return _emit(_extension_summary(ext))


def _analyzer(args) -> Analyzer:
    return Analyzer(use_cache=not args.no_cache, cache_dir=args.cache_dir)


def cmd_verify(args) -> int:
    an = _analyzer(args)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    corpora = {}
    for name in names:
        mo = args.max_order or SUITE_CORPUS_ORDER[name]
        if mo not in corpora:
            corpora[mo] = generate_corpus(mo)
        reports.append(run_suite(name, args.max_order, an, corpora[mo]))
    docs = [json.loads(r.to_json()) for r in reports]
    if args.summary:
        docs = [{k: d[k] for k in ("suite", "params", "pass", "checked", "failed")} |
                {"failures": [v for v in d["verdicts"] if not v["pass"]]} for d in docs]
    return _emit(docs if len(docs) > 1 else docs[0], all(r.passed for r in reports))


def cmd_report(args) -> int:
    an = _analyzer(args)
    rep = bounds_report(generate_corpus(args.max_order), an, args.max_order)
    if args.table:
        print(bounds_table(rep))
        return 0 if rep["pass"] else 1
    return _emit(rep, rep["pass"])


def cmd_corpus(args) -> int:
    entries = generate_corpus(args.max_order)
    listing = [{"name": e.name, "order": e.order, "tags": e.tags, "digest": e.group.digest} for e in entries]
    if args.emit:
        d = Path(args.emit)
        d.mkdir(parents=True, exist_ok=True)
        for i, e in enumerate(entries):
            _write_json(C.group_to_spec(e.group), d / f"{i:04d}.json")
        _write_json(listing, d / "index.json")
    return _emit({"count": len(entries), "groups": listing})


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="unitcover", description="Schur multipliers and unitary cocycles of finite groups")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("multiplier", help="Schur multiplier M(G)")
    p.add_argument("group")
    p.add_argument("--homology", action="store_true", help="cross-check against the bar-complex computation")
    p.set_defaults(func=cmd_multiplier)

    p = sub.add_parser("zu-exp", help="exponents of Z_u(G) and of the unitary cover")
    p.add_argument("group")
    p.set_defaults(func=cmd_zu_exp)

    p = sub.add_parser("cover", help="mu-cover (with --mu) or Schur cover")
    p.add_argument("group")
    p.add_argument("--mu", help="class index, or comma-separated coordinates in M(G)")
    p.add_argument("--coords", action="store_true", help="read a single --mu value as a coordinate tuple")
    p.add_argument("--out", help="write the extension as a group-definition file")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("omega-product", help="central extension twisted by given cocycles")
    p.add_argument("group")
    p.add_argument("--cocycles", help="JSON list of {modulus, values}; default: a Schur section")
    p.add_argument("--out")
    p.set_defaults(func=cmd_omega_product)

    for name, f, hlp in (("verify", cmd_verify, "run verification suites"),
                         ("report", cmd_report, "bounds comparison report")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("--no-cache", action="store_true")
        p.add_argument("--cache-dir", default=None)
        p.set_defaults(func=f)
        if name == "verify":
            p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
            p.add_argument("--max-order", type=int, default=None)
            p.add_argument("--summary", action="store_true", help="omit passing verdicts")
        else:
            p.add_argument("--bounds", action="store_true", help="(default) the bounds comparison")
            p.add_argument("--max-order", type=int, default=64)
            p.add_argument("--table", action="store_true", help="plain-text table instead of JSON")

    p = sub.add_parser("corpus", help="list the test corpus")
    p.add_argument("--max-order", type=int, default=32)
    p.add_argument("--emit", metavar="DIR", help="write one group file per entry")
    p.set_defaults(func=cmd_corpus)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
