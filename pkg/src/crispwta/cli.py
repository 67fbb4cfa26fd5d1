"""Command line front end: ``crispwta <command> ...``.

Exit status is 0 on success, 1 for a negative verdict (counterexample,
exhausted budget, property not established) and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from .errors import (AlphabetMismatch, BudgetExceeded, NotCrispDeterministic, NotEstablished,
                     ParseError, WtaError)
from .fileformat import load_mealy, load_wta, write_wta
from .mealy import explore_monoid, format_seq
from .mealy import to_wta as mealy_to_wta
from .nerode import build_nerode
from .rootalg import RootWeightAlgebra, to_wta as algebra_to_wta
from .rundet import build_run_det, check_finite_order_property
from .terms import parse_tree, split_word, word_tree
from .wta import (SEMANTICS, export_hypergraph, first_difference, is_bu_deterministic,
                  is_crisp_deterministic, is_total)

DEFAULT_BUDGET = 10_000


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _load(path):
    obj = load_wta(path)
    return algebra_to_wta(obj) if isinstance(obj, RootWeightAlgebra) else obj


def _tree_arg(A, args):
    if args.word is not None:
        if args.tree is not None:
            raise ParseError("give either a tree or --word, not both")
        leaves = A.alphabet.of_rank(0)
        if len(leaves) != 1 or A.alphabet.max_rank > 1:
            raise AlphabetMismatch("--word needs a monadic alphabet with exactly one leaf symbol")
        t = word_tree(split_word(args.word), leaves[0])
    elif args.tree is not None:
        t = parse_tree(args.tree)
    else:
        raise ParseError("no tree given")
    try:
        from .terms import check_tree
        check_tree(t, A.alphabet)
    except ValueError as exc:
        raise AlphabetMismatch(str(exc)) from None
    return t


def cmd_check(args, out):
    A = _load(args.file)
    B = A.bimonoid
    print(f"bimonoid: {B.name}", file=out)
    print(f"semiring: {_yes(B.is_semiring)}", file=out)
    print(f"additively idempotent: {_yes(B.is_add_idempotent)}", file=out)
    print(f"states: {len(A.states)}", file=out)
    print(f"transitions: {len(A.delta)}", file=out)
    print(f"bu-deterministic: {_yes(is_bu_deterministic(A))}", file=out)
    print(f"total: {_yes(is_total(A))}", file=out)
    print(f"crisp-deterministic: {_yes(is_crisp_deterministic(A))}", file=out)
    return 0


def cmd_eval(args, out):
    A = _load(args.file)
    t = _tree_arg(A, args)
    fmt = A.bimonoid.format
    if args.semantics in ("init", "both"):
        init = SEMANTICS["init"](A, t)
        print(f"init: {fmt(init)}", file=out)
    if args.semantics in ("run", "both"):
        run = SEMANTICS["run"](A, t)
        print(f"run: {fmt(run)}", file=out)
    if args.semantics == "both":
        print("agree: " + _yes(init == run), file=out)
    return 0


def cmd_determinize(args, out):
    A = _load(args.file)
    report = sys.stderr if args.output is None else out
    if args.mode == "init":
        res = build_nerode(A, max_states=args.max_states)
        print(f"states: {res.size}", file=report)
        for v in res.vectors:
            vec = "[" + ", ".join(A.bimonoid.format(x) for x in v) + "]"
            print(f"{res.names[v]} = {vec} witness {res.witnesses[v]}", file=report)
    else:
        od = check_finite_order_property(A, args.closure_budget, args.order_budget)
        print(f"H: {{{', '.join(A.bimonoid.format(h) for h in sorted(od.H))}}} "
              f"index: {od.index} period: {od.period}", file=report)
        res = build_run_det(A, od, max_states=args.max_states)
        print(f"states: {res.size}", file=report)
        for pi in res.pistates:
            print(f"{res.names[pi]} = {pi.describe(A)} witness {res.witnesses[pi]}", file=report)
    text = write_wta(res.wta)
    if args.output is None:
        out.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}", file=out)
    return 0


def cmd_equiv(args, out):
    A = _load(args.file_a)
    B = _load(args.file_b)
    sem_b = args.semantics_b or args.semantics
    if args.word is not None:
        if A.alphabet != B.alphabet:
            raise AlphabetMismatch("automata over different alphabets")
        args.tree = None
        t = _tree_arg(A, args)
        diff = t if SEMANTICS[args.semantics](A, t) != SEMANTICS[sem_b](B, t) else None
        scope = f"on {t}"
    else:
        diff = first_difference(A, B, args.max_size, args.semantics, sem_b)
        scope = f"up to size {args.max_size}"
    if diff is None:
        print(f"equivalent {scope}", file=out)
        return 0
    fmt = A.bimonoid.format
    print(f"counterexample: {diff}", file=out)
    print(f"  A ({args.semantics}): {fmt(SEMANTICS[args.semantics](A, diff))}", file=out)
    print(f"  B ({sem_b}): {fmt(SEMANTICS[sem_b](B, diff))}", file=out)
    return 1


def cmd_export(args, out):
    out.write(export_hypergraph(_load(args.file)))
    return 0


def cmd_mealy_explore(args, out):
    M = load_mealy(args.file)
    elements = explore_monoid(M, budget=args.budget)
    print(f"finite: {len(elements)} elements", file=out)
    for f in elements:
        print(f"  {format_seq(f)}", file=out)
    return 0


def cmd_mealy_to_wta(args, out):
    text = write_wta(mealy_to_wta(load_mealy(args.file)))
    if args.output is None:
        out.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crispwta", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="report determinism predicates and bimonoid flags")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("eval", help="evaluate a tree")
    e.add_argument("file")
    e.add_argument("tree", nargs="?")
    e.add_argument("--word", help="monadic tree given as a word (letters, or comma separated)")
    e.add_argument("--semantics", choices=["init", "run", "both"], default="both")
    e.set_defaults(func=cmd_eval)

    d = sub.add_parser("determinize", help="build an equivalent crisp-deterministic wta")
    d.add_argument("file")
    d.add_argument("--mode", choices=["init", "run"], default="init")
    d.add_argument("--max-states", type=int, default=DEFAULT_BUDGET)
    d.add_argument("--closure-budget", type=int, default=DEFAULT_BUDGET)
    d.add_argument("--order-budget", type=int, default=DEFAULT_BUDGET)
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_determinize)

    q = sub.add_parser("equiv", help="bounded equivalence check")
    q.add_argument("file_a")
    q.add_argument("file_b")
    q.add_argument("--semantics", choices=["init", "run"], default="init")
    q.add_argument("--semantics-b", choices=["init", "run"],
                   help="semantics for the second automaton (default: same as --semantics)")
    q.add_argument("--max-size", type=int, default=7)
    q.add_argument("--word")
    q.set_defaults(func=cmd_equiv)

    x = sub.add_parser("export", help="functional hypergraph as a DOT document")
    x.add_argument("file")
    x.add_argument("--format", choices=["graph"], default="graph")
    x.set_defaults(func=cmd_export)

    m = sub.add_parser("mealy", help="Mealy machine tools")
    msub = m.add_subparsers(dest="mealy_command", required=True)
    me = msub.add_parser("explore", help="close the generated monoid under a budget")
    me.add_argument("file")
    me.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    me.set_defaults(func=cmd_mealy_explore)
    mw = msub.add_parser("to-wta", help="the simulating wta over the function bimonoid")
    mw.add_argument("file")
    mw.add_argument("-o", "--output")
    mw.set_defaults(func=cmd_mealy_to_wta)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("max_states", "closure_budget", "order_budget", "budget", "max_size"):
        if getattr(args, name, 1) < 1:
            parser.error(f"--{name.replace('_', '-')} must be >= 1")
    try:
        return args.func(args, out)
    except (BudgetExceeded, NotEstablished) as exc:
        extra = f" (explored {exc.explored})" if getattr(exc, "explored", None) is not None else ""
        print(f"{type(exc).__name__}: {exc}{extra}", file=out)
        return 1
    except (ParseError, AlphabetMismatch, NotCrispDeterministic, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WtaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
