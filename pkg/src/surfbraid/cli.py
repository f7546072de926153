"""Command line front end: ``sbw <subcommand> ...``.

Exit codes: 0 decided true / success, 1 decided false, 2 bounds exhausted,
64 usage error.
"""

from __future__ import annotations

import argparse
import io
import os
import sys
from typing import Sequence

from . import ces_solver as cs
from .morphisms import REFUTED, VERIFIED, builtin_map, compose, verify_map
from .presentations import (
    GROUP,
    MONOID,
    Presentation,
    analyze_presentation,
    appendix_boundary,
    appendix_closed,
    boundary,
    boundary_star,
    build_presentation,
    planar,
    read_presentation,
    torus_n,
    torus2_v2,
    write_presentation,
)
from .reversing import (
    BOUND_EXCEEDED,
    REVERSED_TO_EMPTY,
    ReversingLimits,
    build_complement_table,
    completeness_scan,
    reverse_search,
)
from .rewrite_search import SearchLimits, bfs_equal, class_oracle, congruence_class, default_limits
from .words import Alphabet, Word, format_letters, format_word, parse_word

EXIT_TRUE, EXIT_FALSE, EXIT_BOUNDS, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    def exit(self, status=0, message=None):
        if message:
            raise UsageError(message)
        raise _HelpExit()


class _HelpExit(Exception):
    pass


def _param(text: str):
    if "," in text or text.startswith("{"):
        return [int(x) for x in text.strip("{}").split(",") if x]
    return int(text)


def parse_params(items: Sequence[str] | None) -> list:
    try:
        return [_param(x) for x in items or []]
    except ValueError:
        raise UsageError(f"parameters must be integers or comma-separated sets, got {items}") from None


def load_presentation(source: str, params: Sequence[str] | None = None, kind: str | None = None) -> Presentation:
    """A presentation file, or a catalog family addressed by name."""
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            p = read_presentation(fh.read())
    else:
        p = build_presentation(source, *parse_params(params))
    return p.as_kind(kind) if kind else p


def _instance(name: str) -> cs.SolverInstance:
    try:
        return cs.INSTANCES[name]
    except KeyError:
        raise UsageError(f"unknown instance {name!r}; known: {', '.join(cs.INSTANCES)}") from None


def _instance_for(alphabet: Alphabet) -> cs.SolverInstance:
    for inst in cs.INSTANCES.values():
        if inst.alphabet == alphabet:
            return inst
    raise UsageError(f"no solver instance acts on generators {' '.join(alphabet.names)}")


def _limits(args, *words: Word) -> SearchLimits:
    base = default_limits(*words)
    return SearchLimits(args.max_length or base.max_word_length, args.max_states or base.max_states)


# -- subcommands --------------------------------------------------------------

def cmd_present(args, out):
    p = load_presentation(args.family, args.params, args.kind)
    out.write(write_presentation(p))
    return EXIT_TRUE


def cmd_analyze(args, out):
    p = load_presentation(args.pres, args.params, args.kind)
    a = analyze_presentation(p)
    out.write(f"positive: {str(a.positive).lower()}\n")
    out.write(f"homogeneous: {str(a.homogeneous).lower()}\n")
    out.write(f"generators: {len(p.alphabet)}\nrelations: {len(p.relations)}\n")
    out.write("abelianization:\n")
    for i, name in enumerate(p.alphabet.names):
        out.write(f"  {name}: {' '.join(str(col[i]) for col in a.abelianization)}\n")
    return EXIT_TRUE


def cmd_eq(args, out):
    p = load_presentation(args.pres, args.params)
    u, v = parse_word(args.u, p.alphabet), parse_word(args.v, p.alphabet)
    verdict = bfs_equal(p, u, v, args.mode, _limits(args, u, v))
    if verdict.equal:
        out.write(f"Equal in {len(verdict.path)} steps ({verdict.states_explored} states)\n")
        w = u.letters
        out.write(f"  {format_letters(w, p.alphabet, args.raw)}\n")
        for step in verdict.path:
            tag = p.relations[step.relation].label if step.kind == "rel" else step.kind
            out.write(f"  {format_letters(step.result, p.alphabet, args.raw)}    [{tag} @{step.position}]\n")
        return EXIT_TRUE
    if verdict.inequality_certified:
        out.write("NotEqual (abelianization separates the words)\n")
        return EXIT_FALSE
    out.write(f"NotWithinBounds ({verdict.states_explored} states)\n")
    return EXIT_BOUNDS


def cmd_class(args, out):
    p = load_presentation(args.pres, args.params)
    w = parse_word(args.word, p.alphabet)
    mode = args.mode or p.kind
    c = congruence_class(p, w, _limits(args, w), mode)
    out.write(f"{'closed' if c.closed else 'open'} class, {len(c.members)} members\n")
    for m in c.words(p):
        out.write(format_word(m, args.raw) + "\n")
    return EXIT_TRUE if c.closed else EXIT_BOUNDS


def _rev_limits(args) -> ReversingLimits:
    return ReversingLimits(args.max_steps, args.max_configurations)


def cmd_reverse(args, out):
    p = load_presentation(args.pres, args.params)
    w = parse_word(args.word, p.alphabet)
    verdict = reverse_search(build_complement_table(p), w, _rev_limits(args))
    out.write(f"{verdict.status} ({verdict.configurations} configurations)\n")
    if verdict.status == REVERSED_TO_EMPTY:
        for cfg in verdict.trace:
            out.write(f"  {format_letters(cfg, p.alphabet, args.raw)}\n")
        return EXIT_TRUE
    for t in sorted(verdict.terminals, key=lambda t: (len(t), t)):
        out.write(f"terminal: {format_letters(t, p.alphabet, args.raw)}\n")
    for u, v in sorted(verdict.stuck):
        out.write(f"stuck: {p.alphabet.name_of(u)}^-1 {p.alphabet.name_of(v)}\n")
    return EXIT_BOUNDS if verdict.status == BOUND_EXCEEDED else EXIT_FALSE


def cmd_complete_scan(args, out):
    p = load_presentation(args.pres, args.params, MONOID)
    if args.oracle == "solver":
        inst = _instance(args.instance) if args.instance else _instance_for(p.alphabet)
        if inst.alphabet != p.alphabet:
            raise UsageError(f"instance {inst.name} does not act on this presentation")
        key = lambda w: cs.normal_form(inst, Word(inst.alphabet, w))  # noqa: E731
    else:
        key = class_oracle(p, args.bound)
    report = completeness_scan(p, key, args.bound, _rev_limits(args), name=args.pres)
    for line in report.lines(p.alphabet):
        out.write(line + "\n")
    return EXIT_TRUE


def _nf(inst, text):
    return cs.normal_form(inst, parse_word(text, inst.alphabet))


def cmd_nf(args, out):
    inst = _instance(args.instance)
    out.write(_nf(inst, args.word).format(inst) + "\n")
    return EXIT_TRUE


def cmd_eq2(args, out):
    inst = _instance(args.instance)
    g, h = _nf(inst, args.u), _nf(inst, args.v)
    out.write(f"{g.format(inst)}\n{h.format(inst)}\n{'equal' if g == h else 'different'}\n")
    return EXIT_TRUE if g == h else EXIT_FALSE


def cmd_conj(args, out):
    inst = _instance(args.instance)
    g, h = _nf(inst, args.u), _nf(inst, args.v)
    r = cs.conjugacy(inst, g, h)
    if r is None:
        out.write("none\n")
        return EXIT_FALSE
    assert cs.conjugate_by(inst, r, g) == h
    out.write(format_letters(r.word, inst.alphabet, args.raw) + "\n")
    return EXIT_TRUE


def cmd_garside(args, out):
    inst = _instance(args.instance)
    j, g = cs.garside_decompose(inst, _nf(inst, args.word))
    out.write(f"j: {j}\npositive part: {g.format(inst)}\n")
    return EXIT_TRUE


def cmd_divisors(args, out):
    inst = _instance(args.instance)
    target = _nf(inst, args.word)
    if not cs.is_positive(inst, target):
        raise UsageError("divisors needs a positive element")
    wt = cs.weights(inst, target)
    cands = cs.enumerate_positive(inst, wt)
    left = [d for d in cands if cs.divides(inst, d, target, "left")]
    right = [d for d in cands if cs.divides(inst, d, target, "right")]
    out.write(f"left divisors: {len(left)}\n")
    for d in left:
        out.write(f"  {d.format(inst)}\n")
    out.write(f"right divisors: {len(right)}\n")
    for d in right:
        out.write(f"  {d.format(inst)}\n")
    out.write(f"balanced: {str(set(left) == set(right)).lower()}\n")
    return EXIT_TRUE


def _map_source(name: str, params: list) -> Presentation:
    if name == "psi":
        return appendix_boundary(*params)
    if name == "psibar":
        return boundary(*params, kind=GROUP)
    if name == "closed_theta":
        return appendix_closed(*params)
    if name == "torus_abc":
        return torus2_v2(GROUP)
    if name == "torus_abc_inverse":
        return torus_n(2, GROUP)
    if name == "planar_rho":
        n, p, I = params
        return planar(n, p, I, GROUP)
    raise UsageError(f"unknown map {name!r}")


def _map_target(name: str, params: list) -> Presentation:
    if name == "psi":
        return boundary(*params, kind=GROUP)
    if name == "psibar":
        return appendix_boundary(*params)
    if name == "closed_theta":
        from .presentations import closed
        return closed(*params, kind=GROUP)
    if name == "torus_abc":
        return torus_n(2, GROUP)
    if name == "torus_abc_inverse":
        return torus2_v2(GROUP)
    if name == "planar_rho":
        n, p, _ = params
        return boundary(n, 0, p, kind=GROUP)
    raise UsageError(f"unknown map {name!r}")


def cmd_verify_map(args, out):
    params = parse_params(args.params)
    m = builtin_map(args.map, *params)
    source = _map_source(args.map, params)
    target = _map_target(args.map, params)
    if args.then:
        second = builtin_map(args.then)
        m = compose(m, second)
        target = _map_target(args.then, [])
    if args.prover == "solver":
        prover = _instance(args.instance) if args.instance else _instance_for(m.target)
    else:
        prover = target
    limits = SearchLimits(args.max_length or 16, args.max_states or default_limits().max_states)
    checks = verify_map(m, source, prover, limits if args.prover == "bfs" else None)
    for c in checks:
        out.write(f"{c.index:3d} {c.label:6s} {c.status:8s} {c.detail}\n")
    if any(c.status == REFUTED for c in checks):
        return EXIT_FALSE
    return EXIT_TRUE if all(c.status == VERIFIED for c in checks) else EXIT_BOUNDS


def cmd_scan_cr3k(args, out):
    n, g, p = parse_params(args.params)
    star = boundary_star(n, g, p, args.kmax)
    base = boundary(n, g, p)
    code = EXIT_TRUE
    for rel in star.relations:
        if not rel.label.startswith("CR3") or "_" not in rel.label:
            continue
        left = Word(base.alphabet, rel.left.letters)
        right = Word(base.alphabet, rel.right.letters)
        c = congruence_class(base, left, _limits(args, left, right), MONOID)
        reached = right.letters in c.members
        state = "closed" if c.closed else "open"
        out.write(f"{rel.label:8s} {format_word(left, args.raw)} : {state} class of size {len(c.members)}, "
                  f"right side {'reached' if reached else 'not reached'}\n")
        if not c.closed:
            code = EXIT_BOUNDS
    return code


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sbw", description="Positive presentations of surface braid groups.")
    parser.add_argument("--raw", action="store_true", help="print words one letter per token")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pres_args(sp, flag="--pres"):
        sp.add_argument(flag, required=True, help="presentation file or catalog family")
        sp.add_argument("--params", nargs="*", default=[], help="catalog parameters; sets as 1,3")

    def search_args(sp):
        sp.add_argument("--max-states", type=int, default=None)
        sp.add_argument("--max-length", type=int, default=None)

    def rev_args(sp):
        sp.add_argument("--max-steps", type=int, default=200)
        sp.add_argument("--max-configurations", type=int, default=10**5)

    sp = sub.add_parser("present", help="print a catalog presentation")
    pres_args(sp, "--family")
    sp.add_argument("--kind", choices=[GROUP, MONOID], default=None)
    sp.set_defaults(func=cmd_present)

    sp = sub.add_parser("analyze", help="positivity, homogeneity, abelianization")
    pres_args(sp)
    sp.add_argument("--kind", choices=[GROUP, MONOID], default=None)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("eq", help="bounded search for a rewriting path")
    pres_args(sp)
    sp.add_argument("--mode", choices=[GROUP, MONOID], default=MONOID)
    search_args(sp)
    sp.add_argument("u")
    sp.add_argument("v")
    sp.set_defaults(func=cmd_eq)

    sp = sub.add_parser("class", help="congruence class of a word")
    pres_args(sp)
    sp.add_argument("--mode", choices=[GROUP, MONOID], default=None)
    search_args(sp)
    sp.add_argument("word")
    sp.set_defaults(func=cmd_class)

    sp = sub.add_parser("reverse", help="word reversing")
    pres_args(sp)
    rev_args(sp)
    sp.add_argument("word")
    sp.set_defaults(func=cmd_reverse)

    sp = sub.add_parser("complete-scan", help="bounded completeness evidence")
    pres_args(sp)
    sp.add_argument("--oracle", choices=["solver", "bfs"], default="solver")
    sp.add_argument("--instance", default=None)
    sp.add_argument("--bound", type=int, required=True)
    rev_args(sp)
    sp.set_defaults(func=cmd_complete_scan)

    for name, func, nargs in (("nf", cmd_nf, 1), ("eq2", cmd_eq2, 2), ("conj", cmd_conj, 2),
                              ("garside", cmd_garside, 1), ("divisors", cmd_divisors, 1)):
        sp = sub.add_parser(name)
        sp.add_argument("--instance", default="torus3")
        if nargs == 1:
            sp.add_argument("word")
        else:
            sp.add_argument("u")
            sp.add_argument("v")
        sp.set_defaults(func=func)

    sp = sub.add_parser("verify-map", help="check relators through a generator map")
    sp.add_argument("--map", required=True)
    sp.add_argument("--params", nargs="*", default=[])
    sp.add_argument("--then", default=None, help="built-in map applied afterwards")
    sp.add_argument("--prover", choices=["solver", "bfs"], default="solver")
    sp.add_argument("--instance", default=None)
    search_args(sp)
    sp.set_defaults(func=cmd_verify_map)

    sp = sub.add_parser("scan-cr3k", help="congruence classes of (CR3)_k left sides")
    sp.add_argument("--params", nargs=3, required=True, metavar=("N", "G", "P"))
    sp.add_argument("--kmax", type=int, default=3)
    search_args(sp)
    sp.set_defaults(func=cmd_scan_cr3k)
    return parser


def run_command(argv: Sequence[str]) -> tuple[int, str]:
    out = io.StringIO()
    try:
        args = build_parser().parse_args(list(argv))
        code = args.func(args, out)
    except _HelpExit:
        return EXIT_TRUE, out.getvalue()
    except UsageError as exc:
        return EXIT_USAGE, f"error: {exc}\n"
    except ValueError as exc:
        return EXIT_USAGE, f"error: {exc}\n"
    return code, out.getvalue()


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run_command(sys.argv[1:] if argv is None else argv)
    (sys.stderr if code == EXIT_USAGE else sys.stdout).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
