"""Command-line entry point: ``vanishlab <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import groupspec
from .chartab import character_table
from .corpus import MODES, bundled_corpus_dir, emit_report, run_corpus
from .cyclo import classify_zero_sum, parse_roots
from .errors import ParseError, VanishlabError
from .vanish import check_theorem_a, nonvanishing_structure


def _analyze(args) -> int:
    G = groupspec.ingest(args.file)
    rep = nonvanishing_structure(G)
    verdict = check_theorem_a(G, rep)
    if args.json:
        out = rep.to_json()
        out["theorem_a"] = {"status": verdict.status, "detail": verdict.detail}
        print(json.dumps(out, indent=2))
    else:
        print(f"group     {rep.name}")
        print(f"order     {rep.order}")
        print(f"classes   {len(G.classes)}")
        print(f"|V(G)|    {rep.vanishing_count}")
        print(f"pv        {rep.pv}")
        print(f"N_v       subgroup={rep.nv_is_subgroup} abelian={rep.nv_abelian} normal={rep.nv_normal}")
        print(f"m         {rep.theorem_a_m if rep.theorem_a_m is not None else '-'}")
        print(f"theorem-a {verdict.status} {verdict.detail}".rstrip())
    return 1 if verdict.status == "fail" else 0


def _chartab(args) -> int:
    G = groupspec.ingest(args.file)
    sys.stdout.write(character_table(G).export_text())
    return 0


def _verify(args) -> int:
    directory = bundled_corpus_dir() if args.corpus == "bundled" else Path(args.corpus)
    manifest = run_corpus(directory, args.mode, workers=args.workers)
    data = emit_report(manifest, args.format, timing=not args.no_timing)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return manifest.exit_code


def _construct(args) -> int:
    call = groupspec.parse_builtin_call([args.builtin, *args.params])
    spec = groupspec.spec_for_builtin(call, name=args.name or "", expand=args.expand)
    text = groupspec.dumps(spec)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _sumzero(args) -> int:
    dec = classify_zero_sum(parse_roots(args.roots))
    print(dec.describe())
    for delta, pattern in dec.blocks:
        print(f"  {delta} * {pattern}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vanishlab", description="Vanishing elements of finite groups.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="vanishing data of one group file")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=_analyze)

    c = sub.add_parser("chartab", help="print the character table of a group file")
    c.add_argument("file")
    c.set_defaults(func=_chartab)

    v = sub.add_parser("verify", help="run a corpus of group files")
    v.add_argument("--corpus", required=True, help="directory of .grp files, or 'bundled'")
    v.add_argument("--mode", required=True, choices=MODES)
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--no-timing", action="store_true", help="omit timing fields")
    v.add_argument("--workers", type=int, default=None)
    v.add_argument("-o", "--output")
    v.set_defaults(func=_verify)

    k = sub.add_parser("construct", help="write a group file for a builtin family")
    k.add_argument("builtin", choices=sorted(groupspec.BUILTINS))
    k.add_argument("params", nargs="*")
    k.add_argument("--name")
    k.add_argument("--expand", action="store_true", help="write semidirect products with explicit actions")
    k.add_argument("-o", "--output")
    k.set_defaults(func=_construct)

    s = sub.add_parser("sumzero", help="classify a vanishing sum of roots of unity")
    s.add_argument("roots", nargs="+", help="roots such as z3, -z4^3, 1")
    s.set_defaults(func=_sumzero)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    # negative roots like -z4 must not be taken for options
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "sumzero":
        argv = ["sumzero", "--", *argv[1:]]
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
    except (VanishlabError, OSError, ValueError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
