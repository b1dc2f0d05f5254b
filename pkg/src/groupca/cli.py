"""Command-line front end.

Exit codes: 0 success, 1 a checked property failed, 2 bad input, 3 a size
cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import laws
from .automaton import DEFAULT_TABLE_CAP, RuleTable, compose_global, equals, rule_from_json, rule_to_json, star
from .config import Alphabet, Configuration, config_from_json
from .errors import CAError, CapExceededError
from .group import GroupContext, parse_group
from .memory import minimize
from .subshift import closure_check, member, periodic_members, sft_from_json, star_restricted
from .uniform import (
    basic_entourage,
    compose_relations,
    diagonal_preimage,
    infer_from_oracle,
    rule_oracle,
    subset,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def load_rule(ref: str, ctx: GroupContext | None = None, k: int | None = None) -> RuleTable:
    """A rule from a JSON file or a ``builtin:<name>`` reference."""
    data = ref if ref.startswith("builtin:") else _read_json(ref)
    if isinstance(data, dict) and "rule" in data:
        data = dict(data["rule"], **{key: data[key] for key in ("group", "alphabet") if key in data})
    return rule_from_json(data, ctx, k)


def format_elements(ctx: GroupContext, elements) -> str:
    return ",".join(ctx.format_element(g) for g in elements) if elements else "(empty)"


def format_rule(t: RuleTable) -> str:
    return f"memory: {format_elements(t.ctx, t.memory)}\ntable: {json.dumps(list(t.table))}"


# -- subcommands ----------------------------------------------------------------


def cmd_minimize(args) -> int:
    rule = load_rule(args.rule)
    canon = minimize(rule)
    removed = [s for s in rule.memory if s not in canon.memory]
    print(format_rule(canon))
    print(f"removed: {format_elements(rule.ctx, removed) if removed else '(none)'}")
    return EXIT_OK


def cmd_compose(args) -> int:
    a, b = load_rule(args.rule_a), load_rule(args.rule_b)
    if a.ctx != b.ctx or a.k != b.k:
        raise InputError("rules are defined on different groups or alphabets")
    compose = star if args.method == "star" else compose_global
    result = minimize(compose(a, b, cap=args.cap))
    status = EXIT_OK
    if args.check_both:
        other = compose_global if args.method == "star" else star
        match = equals(result, other(a, b, cap=args.cap))
        print(f"star vs global: {'match' if match else 'MISMATCH'}", file=sys.stderr)
        status = EXIT_OK if match else EXIT_VIOLATION
    text = json.dumps(rule_to_json(result))
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return status


def _counterexample_text(detail) -> str:
    def show(v):
        if isinstance(v, RuleTable):
            return format_rule(minimize(v)).replace("\n", "; ")
        return repr(v)

    items = detail if isinstance(detail, tuple) else (detail,)
    return " | ".join(show(v) for v in items)


def cmd_verify(args) -> int:
    seed = args.seed
    if args.law == "theoremA":
        report = laws.check_theorem_a(args.samples or 1000, seed)
    elif args.law == "monoid":
        report = laws.check_monoid(args.samples or 300, seed)
    elif args.law == "homomorphism":
        report = laws.check_homomorphism_chain(args.samples or 100, seed)
    elif args.law == "corollaryB":
        report = laws.check_corollary_b(sampled=500 if args.samples is None else args.samples, seed=seed)
    else:
        report = laws.check_equivariance(args.samples or 20, seed)
    print(report)
    if not report.ok:
        print(f"counterexample: {_counterexample_text(report.failures[0])}")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_infer(args) -> int:
    if not args.oracle.startswith("builtin:"):
        raise InputError("only builtin:<name> oracles are available from the command line")
    target = load_rule(args.oracle)
    result = infer_from_oracle(rule_oracle(target), args.rmax, n_random=args.probes, seed=args.seed)
    if not result.ok:
        (x, y), (fx, fy) = result.witness, result.values
        print(f"not inferred up to radius {result.radius} ({result.n_probes} probes)")
        print(f"witness: f({json.dumps(x.to_json())}) = {fx}, f({json.dumps(y.to_json())}) = {fy}")
        return EXIT_VIOLATION
    print(f"radius: {result.radius} ({result.label()})")
    print(format_rule(result.rule))
    return EXIT_OK


def _line(label: str, ok: bool, detail: str) -> str:
    return f"{label}: {'PASS' if ok else 'FAIL'} ({detail})"


def cmd_entourage(args) -> int:
    ctx = parse_group(args.group)
    A = Alphabet(args.alphabet)
    rule = load_rule(args.rule, ctx, args.alphabet)
    if rule.ctx != ctx or rule.k != A.size:
        raise InputError("rule does not match --group/--alphabet")
    V = diagonal_preimage(rule, ctx, A)
    lines = []
    if args.check == "theoremA":
        W = basic_entourage(ctx, A, rule.memory)
        lines.append(_line("W_S <= V", subset(W, V), f"|W_S|={len(W)}, |V|={len(V)}"))
    else:
        G = ctx.enumerate()
        windows = [frozenset(s) for s in laws.powerset(G)]
        W = {s: basic_entourage(ctx, A, s) for s in windows}
        memory_sets = [s for s in windows if subset(W[s], V)]
        VV = compose_relations(V, V)
        pairs = [(s, t) for s in memory_sets for t in memory_sets]
        meet_ok = meet_v = prod_ok = 0
        for s, t in pairs:
            WST = compose_relations(W[s], W[t])
            meet_ok += subset(W[s & t], WST)
            prod_ok += subset(WST, VV)
            meet_v += subset(W[s & t], V)
        n = len(pairs)
        lines.append(_line("W_{S&S'} <= W_S o W_S'", meet_ok == n, f"{meet_ok}/{n} memory-set pairs"))
        lines.append(_line("W_S o W_S' <= V o V", prod_ok == n, f"{prod_ok}/{n} memory-set pairs"))
        lines.append(_line("V o V <= V", subset(VV, V), f"|V o V|={len(VV)}, |V|={len(V)}"))
        lines.append(_line("W_{S&S'} <= V", meet_v == n, f"{meet_v}/{n} memory-set pairs"))
    print("\n".join(lines))
    return EXIT_OK if all("PASS" in line for line in lines) else EXIT_VIOLATION


def cmd_subshift(args) -> int:
    rules = [load_rule(r) for r in args.rule]
    ctx = rules[0].ctx if rules else GroupContext.integers(1)
    data = _read_json(args.sft)
    if "group" in data:
        ctx = parse_group(data["group"])
    A = Alphabet(data.get("alphabet", rules[0].k if rules else 2))
    X = sft_from_json(ctx, A, data)
    probes = []
    if args.config:
        probes.append(config_from_json(ctx, _read_json(args.config)))
    if args.check == "member":
        if not probes:
            raise InputError("--check member needs --config")
        ok = member(X, probes[0])
        print(f"member: {'yes' if ok else 'no'}")
        return EXIT_OK
    if ctx == GroupContext.integers(1):
        probes += periodic_members(X, args.period_max)
    if not rules:
        raise InputError(f"--check {args.check} needs --rule")
    if args.check == "closure":
        status = EXIT_OK
        for rule in rules:
            bad = closure_check(rule, X, probes)
            detail = f"{len(probes)} probes" if bad is None else f"counterexample {json.dumps(bad.to_json())}"
            print(_line(f"closure {format_elements(ctx, minimize(rule).memory)}", bad is None, detail))
            status = status if bad is None else EXIT_VIOLATION
        return status
    if len(rules) != 2:
        raise InputError("--check star needs exactly two --rule arguments")
    composite = minimize(star_restricted(rules[0], rules[1], X, probes))
    print(_line("closure of composite", True, f"{len(probes)} probes"))
    print(format_rule(composite))
    return EXIT_OK


def _run_system(args):
    data = _read_json(args.system)
    if "group" not in data:
        raise InputError("system file needs a 'group'")
    ctx = parse_group(data["group"])
    if ctx.family != "integers" or ctx.rank > 2:
        raise InputError("run supports Z and Z^2 only")
    k = data.get("alphabet", 2)
    rule = rule_from_json(data["rule"], ctx, k)
    if "configuration" not in data:
        raise InputError("system file needs a 'configuration'")
    x = config_from_json(ctx, data["configuration"])
    window = args.window if args.window else data.get("window")
    if window is None:
        raise InputError("declare a window with --window or a 'window' entry")
    if ctx.rank == 1:
        window = [window] if isinstance(window[0], int) else window
    if len(window) != ctx.rank or any(len(w) != 2 or w[0] > w[1] for w in window):
        raise InputError(f"bad window {window!r}")
    return rule, x, window


def _cells(x: Configuration, window) -> list:
    if len(window) == 1:
        lo, hi = window[0]
        return [[x.at((i,)) for i in range(lo, hi + 1)]]
    (x0, x1), (y0, y1) = window
    return [[x.at((i, j)) for j in range(y0, y1 + 1)] for i in range(x0, x1 + 1)]


def _row_text(row, k) -> str:
    return "".join(map(str, row)) if k <= 10 else " ".join(map(str, row))


def _pgm(rows, k) -> str:
    body = "\n".join(" ".join(map(str, r)) for r in rows)
    return f"P2\n{len(rows[0])} {len(rows)}\n{max(k - 1, 1)}\n{body}\n"


def simulate(rule: RuleTable, x: Configuration, steps: int) -> list:
    history = [x]
    for _ in range(steps):
        x = rule.apply(x)
        history.append(x)
    return history


def cmd_run(args) -> int:
    rule, x, window = _run_system(args)
    frames = [_cells(c, window) for c in simulate(rule, x, args.steps)]
    k = rule.k
    if args.format == "rows":
        if len(window) == 1:
            text = "\n".join(_row_text(f[0], k) for f in frames) + "\n"
        else:
            text = "".join(
                f"step {t}\n" + "\n".join(_row_text(r, k) for r in f) + "\n" for t, f in enumerate(frames)
            )
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    if not args.out:
        raise InputError("--format pgm needs --out")
    out = Path(args.out)
    if len(window) == 1:
        out.write_text(_pgm([f[0] for f in frames], k))
    else:
        for t, f in enumerate(frames):
            out.with_name(f"{out.stem}_{t:04d}{out.suffix or '.pgm'}").write_text(_pgm(f, k))
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 42)")
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS, help="largest rule table to build")

    parser = argparse.ArgumentParser(prog="groupca", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minimize", parents=[common], help="minimal memory set of a rule")
    p.add_argument("rule")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("compose", parents=[common], help="compose two rules")
    p.add_argument("rule_a")
    p.add_argument("rule_b")
    p.add_argument("--method", choices=("star", "global"), default="star")
    p.add_argument("--check-both", action="store_true")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("verify", parents=[common], help="run a seeded property suite")
    p.add_argument("law", choices=("monoid", "equivariance", "corollaryB", "theoremA", "homomorphism"))
    p.add_argument("--samples", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("infer", parents=[common], help="recover a rule from a local oracle")
    p.add_argument("--oracle", required=True, help="builtin:<name>")
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--probes", type=int, default=64, help="random probes per pattern class")
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("entourage", parents=[common], help="check entourage inclusions exactly")
    p.add_argument("--check", choices=("theoremA", "corollaryB"), required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--alphabet", type=int, required=True)
    p.add_argument("--rule", required=True)
    p.set_defaults(func=cmd_entourage)

    p = sub.add_parser("subshift", parents=[common], help="subshift membership and closure")
    p.add_argument("--sft", required=True)
    p.add_argument("--rule", action="append", default=[])
    p.add_argument("--check", choices=("closure", "member", "star"), default="closure")
    p.add_argument("--config")
    p.add_argument("--period-max", type=int, default=4)
    p.set_defaults(func=cmd_subshift)

    p = sub.add_parser("run", parents=[common], help="simulate on Z or Z^2")
    p.add_argument("system")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--format", choices=("rows", "pgm"), default="rows")
    p.add_argument("--window", type=int, nargs="+", help="lo hi (Z) or x0 x1 y0 y1 (Z^2)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_run)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.seed = getattr(args, "seed", 42)
    args.cap = getattr(args, "cap", DEFAULT_TABLE_CAP)
    if getattr(args, "window", None):
        w = args.window
        if len(w) not in (2, 4):
            parser.error("--window takes 2 or 4 integers")
        args.window = [w[i : i + 2] for i in range(0, len(w), 2)]
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, CAError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
