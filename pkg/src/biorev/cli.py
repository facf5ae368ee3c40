"""Command-line entry point.

Exit codes: 0 ok, 1 negative result (inconsistent revision, failed suite,
failed round trip), 2 parse error, 3 invariant violation.
"""
from __future__ import annotations

import argparse
import json
import shlex
import sys

from . import canonical as canon
from . import orders, postulates
from .errors import FormulaSyntaxError, InvariantError, ProblemFileError, SizeGuardError, UnknownAtomError
from .logic import AtomTable, canonical_formula, format_formula, format_worldset, mod, show_worldset
from .npr import NprState, npr_revise
from .problem import ProblemFile, emit_problem, load_problem
from .revision import CLASS_OF_INTERPRETATION, revise_models

EXIT_OK, EXIT_NEGATIVE, EXIT_PARSE, EXIT_INVARIANT = 0, 1, 2, 3

_RANDOM_CLASSES = {
    "bob": "biorder", "ztbob": "z-transitive", "tbob": "transitive",
    "iob": "interval", "agm": "total-preorder",
}
for _c in orders.INTERPRETATION_CLASSES:
    _RANDOM_CLASSES[_c] = _c


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _emit(args, payload, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _show(ws, pf: ProblemFile, args) -> str:
    return show_worldset(ws, pf.table, getattr(args, "pretty", False))


def cmd_revise(args, pf: ProblemFile) -> int:
    state = pf.state()
    a = mod(args.formula, pf.table)
    if args.npr:
        out = npr_revise(NprState(state), a)
        credible = bool(out) and out & ~a == 0
        note = "input credible" if credible else "input incredible: retained K"
    else:
        out = revise_models(state, a)
        note = "consistent" if out else "inconsistent (destabilising input)"
    payload = {
        "input": args.formula,
        "models": format_worldset(out, pf.table.n),
        "formula": format_formula(canonical_formula(out, pf.table)),
        "consistent": out != 0,
        "note": note,
    }
    lines = [f"models: {_show(out, pf, args)}", f"formula: {payload['formula']}", note]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if out else EXIT_NEGATIVE


def _operator(pf: ProblemFile, suite: str, npr: bool):
    state = pf.state()
    if npr or suite.endswith("-NPR"):
        return postulates.OperatorUnderTest.of_npr(NprState(state), pf.table)
    return postulates.OperatorUnderTest.of_state(state, pf.table)


def cmd_check(args, pf: ProblemFile) -> int:
    op = _operator(pf, args.suite, args.npr)
    reports = postulates.check_suite(op, args.suite, args.mode, args.seed, args.count)
    ok = all(r.holds for r in reports)
    payload = {"suite": args.suite, "holds": ok, "reports": [r.to_json() for r in reports]}
    lines = [str(r) for r in reports]
    lines.append(f"suite {args.suite}: {'holds' if ok else 'fails'}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_canonical(args, pf: ProblemFile) -> int:
    op = postulates.OperatorUnderTest.of_state(pf.state(), pf.table)
    trace = canon.extract_canonical(op)
    rt = canon.roundtrip_verify(op, trace)
    if args.json:
        print(json.dumps({"trace": trace.to_json(), "roundtrip": rt.to_json()}, indent=2))
    else:
        def fmt(ws):
            return _show(ws, pf, args)
        comments = [f"U[{i - 1}] = {fmt(u)}" for i, u in enumerate(trace.u_seq)]
        comments += [f"V[{i - 1}] = {fmt(v)}" for i, v in enumerate(trace.v_seq)]
        comments.append(f"n = {trace.n}; roundtrip {rt.verdict}")
        print(emit_problem(pf.table, trace.result, k_models=op.k_models, comments=tuple(comments)), end="")
    return EXIT_OK if rt.holds else EXIT_NEGATIVE


def cmd_classify(args, pf: ProblemFile) -> int:
    op = postulates.OperatorUnderTest.of_state(pf.state(), pf.table)
    cls = canon.classify_black_box(op)
    names = [c for c in ("IOB", "BOB", "ZTBOB", "TBOB") if c in cls.classes]
    payload = {"classes": names, "evidence": cls.evidence}
    _emit(args, payload, "classes: " + (", ".join(names) or "none"))
    return EXIT_OK if cls.classes else EXIT_NEGATIVE


def cmd_transform(args, pf: ProblemFile) -> int:
    interp = pf.interpretation()
    rel = pf.relation if pf.relation is not None else orders.relation_of(interp)
    k = pf.k_models()
    target = args.target
    if target == "sphere":
        sr = orders.to_sphere_ranking(interp)
        print(emit_problem(pf.table, k_models=k, sphere=sr), end="")
        return EXIT_OK
    if target == "compressed":
        print(emit_problem(pf.table, orders.compress(interp), k_models=k, clazz=pf.clazz), end="")
        return EXIT_OK
    if target == "interval":
        new = orders.to_interval_order(rel, permissive=args.permissive)
    elif target == "total-preorder":
        new = orders.to_total_preorder(rel)
    else:
        new = orders.trim_dissonant_outedges(rel)
    print(emit_problem(pf.table, k_models=k, relation=new), end="")
    return EXIT_OK


def cmd_random(args) -> int:
    try:
        table = AtomTable.parse(args.atoms)
    except ValueError as e:
        raise ProblemFileError(str(e)) from None
    clazz = _RANDOM_CLASSES[args.clazz.lower()]
    anchor = mod(args.anchor, table) if args.anchor else table.full
    bm = orders.random_interpretation(table, anchor, clazz, args.max_rank, args.seed)
    tag = CLASS_OF_INTERPRETATION[clazz]
    print(emit_problem(table, bm, k_models=anchor, clazz=tag,
                       comments=(f"random {clazz} interpretation, seed {args.seed}",)), end="")
    return EXIT_OK


def cmd_run(args, pf: ProblemFile) -> int:
    worst = EXIT_OK
    for line in pf.commands:
        print(f"$ {line}")
        worst = max(worst, main([*shlex.split(line)[:1], args.file, *shlex.split(line)[1:]]))
    return worst


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(prog="biorev", description="Biorder-based belief revision toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def with_file(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--pretty", action="store_true", help="barred valuation style")
        return sp

    sp = with_file("revise", "revise the file's belief state by a formula")
    sp.add_argument("formula")
    sp.add_argument("--npr", action="store_true", help="non-prioritised revision")
    sp.set_defaults(func=cmd_revise)

    sp = with_file("check", "check a postulate suite")
    sp.add_argument("--suite", required=True, choices=sorted(postulates.SUITES))
    sp.add_argument("--mode", default="exhaustive", choices=("exhaustive", "sampled"))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=2000)
    sp.add_argument("--npr", action="store_true", help="check the non-prioritised operator")
    sp.set_defaults(func=cmd_check)

    sp = with_file("canonical", "extract the canonical interpretation of the file's operator")
    sp.set_defaults(func=cmd_canonical)

    sp = with_file("classify", "classify the file's operator from its behaviour alone")
    sp.set_defaults(func=cmd_classify)

    sp = with_file("transform", "rewrite the file's ordering")
    sp.add_argument("--target", required=True,
                    choices=("interval", "total-preorder", "sphere", "compressed", "trim"))
    sp.add_argument("--permissive", action="store_true", help="skip the z-transitivity precondition")
    sp.set_defaults(func=cmd_transform)

    sp = with_file("run", "execute the file's command: lines")
    sp.set_defaults(func=cmd_run)

    sp = sub.add_parser("random", help="print a seeded random problem file")
    sp.add_argument("--atoms", required=True)
    sp.add_argument("--anchor", help="formula whose models become K (default: all valuations)")
    sp.add_argument("--class", dest="clazz", default="bob", choices=sorted(_RANDOM_CLASSES))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-rank", type=int, default=3)
    sp.set_defaults(func=cmd_random, file=None)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.file is None:
            return args.func(args)
        return args.func(args, load_problem(args.file))
    except (FormulaSyntaxError, UnknownAtomError, ProblemFileError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (InvariantError, SizeGuardError) as e:
        print(f"invariant violation: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as e:
        print(f"invariant violation: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
