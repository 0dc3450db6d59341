"""Command-line front end: ``vsg <command> FILE ...``.

Exit status: 0 success, 1 negative verdict, 2 usage or parse error,
3 budget exceeded.  The default seed for sampling commands comes from the
VSG_SEED environment variable.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import experiments as ex
from . import group as grp
from . import invariants as inv
from .corpus import random_k6_code
from .gauss import shadow
from .moves import ALL_MOVES, CLASSICAL_MOVES, canonical_key, moves
from .realizability import (PLIABLE, RIGID, BudgetExceeded as RealizeBudget,
                            brute_force_realizable, realizable)
from .search import DEFAULT_BUDGET, DEFAULT_DEPTH, equivalent_bounded
from .vsgfile import ParseError, load

OK, NEGATIVE, USAGE, BUDGET = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _default_seed():
    raw = os.environ.get("VSG_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise _Usage(f"VSG_SEED must be an integer, got {raw!r}") from None


def _cycle_str(cycle):
    return " ".join(eid if d > 0 else f"{eid}^-1" for eid, d in cycle.steps)


def _pair_str(pair):
    return f"({_cycle_str(pair.first)}) | ({_cycle_str(pair.second)})"


def _yn(flag):
    return "yes" if flag else "no"


def emit(report, fmt, out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(report, indent=2) + "\n")
        return
    for key, value in report.items():
        if isinstance(value, list):
            out.write(f"{key}:\n")
            for item in value:
                out.write(f"  {item}\n")
        else:
            out.write(f"{key}: {value}\n")


# -- commands ---------------------------------------------------------------------
# Each returns (exit status, report dict).

def cmd_validate(args):
    code = load(args.file)
    g = code.graph
    return OK, {"status": "valid", "vertices": len(g.vertices), "edges": len(g.edges),
                "crossings": len(code.signs)}


def cmd_shadow(args):
    sh = shadow(load(args.file))
    return OK, {"shadow": [f"{eid}: " + " ".join(map(str, seq)) for eid, seq in sh.passages]}


def cmd_realize(args):
    code = load(args.file)
    mode = RIGID if args.rigid else PLIABLE
    if args.rigid and code.graph.rotations is None:
        raise _Usage("--rigid needs rotation lines in the file")
    v = realizable(code, mode)
    report = {"realizable": _yn(v.realizable), "mode": mode, "note": v.note}
    if v.realizable:
        report["sign_coherent"] = _yn(v.sign_coherent)
        if v.rigid_coherent is not None:
            report["rigid_coherent"] = _yn(v.rigid_coherent)
    if args.oracle:
        o = brute_force_realizable(code, mode, budget=args.oracle_budget)
        report["oracle"] = _yn(o)
        report["agree"] = _yn(o == v.realizable)
    if v.realizable:
        report["certificate"] = v.diagram.face_report().splitlines()
    return (OK if v.realizable else NEGATIVE), report


def cmd_lk(args):
    code = load(args.file)
    return OK, {"lk": str(inv.linking_number(code, args.c1, args.c2))}


def cmd_tprofile(args):
    code = load(args.file)
    prof = inv.t_link_profile(code)
    return OK, {"members": inv.t_collection_size(code.graph), "profile": inv.format_profile(prof)}


def cmd_yamada(args):
    code = load(args.file)
    return OK, {"yamada": str(inv.yamada(code, budget=args.budget))}


def cmd_group(args):
    code = load(args.file)
    p = grp.wirtinger(code)
    report = {"generators": len(p.generators), "relators": len(p.relators),
              "presentation": str(p), "abelianization_rank": grp.abelianization_rank(p)}
    if args.hom:
        try:
            target = grp.group_by_name(args.hom)
        except (KeyError, ValueError):
            raise _Usage(f"unknown group {args.hom!r} (try Z3 or S3)") from None
        report["hom"] = args.hom
        report["hom_count"] = grp.hom_count(p, target, budget=args.budget)
    return OK, report


def cmd_neighbors(args):
    code = load(args.file)
    allowed = ALL_MOVES if args.forbidden else CLASSICAL_MOVES
    rows = [f"{m.kind} {m.site} -> {canonical_key(m.code)[:12]}" for m in moves(code, allowed)]
    return OK, {"count": len(rows), "moves": rows}


def cmd_equiv(args):
    a, b = load(args.file), load(args.file2)
    r = equivalent_bounded(a, b, depth=args.depth, budget=args.budget, forbidden=args.forbidden)
    report = {"equivalent": r.status, "explored": r.explored}
    if r.witness:
        report["witness"] = r.witness
    if r.trace is not None:
        report["trace"] = r.trace.lines()
    if r.status == "yes":
        return OK, report
    return (BUDGET if r.budget_exhausted else NEGATIVE), report


def cmd_ivl(args):
    code = load(args.file)
    r = ex.ivl1_witness(code)
    report = {"applicable": _yn(r.applicable), "holds": _yn(r.holds)}
    if r.note:
        report["note"] = r.note
    report["odd_pairs"] = [f"{_pair_str(p)} lk {lk}" for p, lk in r.odd_pairs]
    report["virtualized"] = [f"{c}: " + (f"{_pair_str(p)} lk {lk}" if p else "none")
                             for c, p, lk in r.per_crossing]
    return (OK if r.holds else NEGATIVE), report


def cmd_cg6(args):
    rng = random.Random(args.seed)
    rows = []
    ok = True
    for i in range(args.samples):
        code = random_k6_code(rng)
        parity = ex.conway_gordon_parity(code)
        certified = len(ex.detect_links(code).certified)
        ok = ok and parity == 1 and certified > 0
        rows.append(f"{i}: crossings {len(code.signs)} certified {certified} parity {parity}")
    return (OK if ok else NEGATIVE), {"seed": args.seed, "samples": rows,
                                      "all_parity_one": _yn(ok)}


def cmd_vu(args):
    code = load(args.file)
    up = ex.vu_upper(code, k=args.max, budget=args.budget, depth=args.depth)
    lows = ex.vu_lower_singletons(code)
    itself = ex.nontriviality_certificate(code)
    lower = 0
    if itself:
        lower = 2 if lows and all(c for _, c in lows) else 1
    report = {"vu_upper": "none" if up.size is None else up.size,
              "crossings": [] if up.crossings is None else list(up.crossings),
              "trace": [] if up.trace is None else up.trace.lines(),
              "nontrivial": itself or "no certificate",
              "singletons": [f"{c}: {cert or 'no certificate'}" for c, cert in lows],
              "vu_lower": lower}
    if up.size is not None and up.size == lower:
        report["vu"] = lower
    if up.size is None:
        return (BUDGET if up.budget_exhausted else NEGATIVE), report
    return OK, report


def cmd_demo(args):
    d = ex.forbidden_separation_demo(samples=args.samples, seed=args.seed)
    report = {"graph": "handcuff",
              "first_profile": inv.format_profile(d.profile_first),
              "second_profile": inv.format_profile(d.profile_second),
              "separated": _yn(d.separated),
              "random_steps": d.steps, "violations": d.violations}
    return (OK if d.separated and not d.violations else NEGATIVE), report


# -- parser -----------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="report format (default text)")

    ap = argparse.ArgumentParser(prog="vsg", description="Virtual spatial graph diagrams.",
                                 parents=[common])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, file=True, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        if file:
            p.add_argument("file")
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate, help="parse and validate a .vsg file")
    add("gauss-shadow", cmd_shadow, help="print the code without roles and signs")
    p = add("realize", cmd_realize, help="decide classical realizability")
    p.add_argument("--rigid", action="store_true", help="keep the stored vertex rotations")
    p.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    p.add_argument("--oracle-budget", type=int, default=10 ** 7)
    p = add("lk", cmd_lk, help="linking number of two closed components")
    p.add_argument("c1")
    p.add_argument("c2")
    add("tprofile", cmd_tprofile, help="linking profile of T(G)")
    p = add("yamada", cmd_yamada, help="Yamada polynomial")
    p.add_argument("--budget", type=int, default=inv.DEFAULT_YAMADA_BUDGET,
                   help="maximum number of classical crossings (default %(default)s)")
    p = add("group", cmd_group, help="Wirtinger presentation")
    p.add_argument("--hom", metavar="GROUP", help="count homomorphisms to Z3 or S3")
    p.add_argument("--budget", type=int, default=10 ** 6, help="search nodes for --hom")

    mv = sub.add_parser("moves", parents=[common], help="move neighbourhoods and equivalence")
    msub = mv.add_subparsers(dest="moves_command", required=True)
    p = msub.add_parser("neighbors", parents=[common])
    p.add_argument("file")
    p.add_argument("--forbidden", action="store_true")
    p.set_defaults(fn=cmd_neighbors)
    p = msub.add_parser("equiv", parents=[common])
    p.add_argument("file")
    p.add_argument("file2")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--forbidden", action="store_true", help="also allow forbidden moves")
    p.set_defaults(fn=cmd_equiv)

    add("ivl", cmd_ivl, help="odd linking after each single virtualization")
    p = add("cg6", cmd_cg6, file=False, help="Conway-Gordon parity on random K6 diagrams")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=None)
    p = add("vu", cmd_vu, help="virtual unknotting number bounds")
    p.add_argument("--max", type=int, default=3)
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    demo = sub.add_parser("demo", parents=[common], help="demonstrations")
    dsub = demo.add_subparsers(dest="demo_command", required=True)
    p = dsub.add_parser("forbidden", parents=[common])
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=cmd_demo)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        status, report = args.fn(args)
    except ParseError as exc:
        for d in exc.diagnostics:
            print(f"{getattr(args, 'file', '')}:{d}", file=sys.stderr)
        return USAGE
    except OSError as exc:
        print(f"vsg: {exc}", file=sys.stderr)
        return USAGE
    except (_Usage, inv.ComponentError, ex.PreconditionError) as exc:
        print(f"vsg: {exc}", file=sys.stderr)
        return USAGE
    except (RealizeBudget, inv.BudgetExceeded, grp.BudgetExceeded) as exc:
        print(f"vsg: budget exceeded: {exc}", file=sys.stderr)
        return BUDGET
    emit(report, getattr(args, "format", "text"))
    return status


if __name__ == "__main__":
    sys.exit(main())
