"""Command-line front end.

Every subcommand builds a :class:`~semiframes.scenario.Scenario` and runs
it through :func:`~semiframes.report.run_scenario`; the human-readable report
goes to stderr and, with ``--json``, the JSON document to stdout.

Exit status: 0 when nothing is FALSIFIED (and every reproduction matches),
2 when some check is FALSIFIED, 3 for configuration or input errors.

Examples::

    python -m semiframes classify "weighted weight=1/n"
    python -m semiframes transform image "weighted weight=n" "diagonal 1/n"
    python -m semiframes direct-sum "weighted weight=n%2 index=(n+1)/2 dim=(d+1)//2" \\
        "weighted weight=1-n%2 index=n/2 dim=d//2"
    python -m semiframes check --random 20 --seed 1
    python -m semiframes reproduce-paper example-3.8 --json
    python -m semiframes run scenario.txt
"""

import argparse
import sys

from .errors import ScenarioError, SemiframeError
from .ladder import TruncationLadder
from .report import render_text, run_scenario, to_json
from .scenario import (EXAMPLES, OPERATOR_KINDS, SEQUENCE_KINDS, TASK_KINDS, Scenario,
                       builtin_scenario, check_scenario, format_scenario, parse_declaration,
                       parse_scenario)

EXIT_OK, EXIT_FALSIFIED, EXIT_CONFIG = 0, 2, 3


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ConfigError(message)


def _ladder(text):
    try:
        return TruncationLadder.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _seed(text):
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _tol(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--ladder", type=_ladder, default=None,
                   help="truncation levels, e.g. 8,16,32,64,128")
    p.add_argument("--seed", type=_seed, default=None, help="seed for random instances")
    p.add_argument("--tol-abs", type=_tol, default=None,
                   help="absolute rank tolerance (default: relative machine tolerance)")
    p.add_argument("--json", action="store_true", help="write the JSON report to stdout")
    return p


def build_parser():
    common = _common()
    parser = _Parser(prog="semiframes", description="Classify sequences on truncation ladders.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="classify one sequence")
    p.add_argument("sequence", help="sequence declaration, e.g. 'weighted weight=1/n'")
    p.add_argument("--span", action="store_true", help="classify on the closed span")

    p = sub.add_parser("transform", parents=[common], help="transform a sequence")
    p.add_argument("mode", choices=["image", "identity-plus", "operator-sum", "family-sum"])
    p.add_argument("sequence", help="sequence declaration")
    p.add_argument("arg", help="operator declaration (sequence for family-sum)")
    p.add_argument("second", nargs="?", help="second operator for operator-sum")

    p = sub.add_parser("direct-sum", parents=[common], help="direct sum of two sequences")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("check", parents=[common], help="run the proposition suite")
    p.add_argument("--no-builtin", action="store_true", help="skip the named instances")
    p.add_argument("--random", type=int, default=0, help="random instances per proposition")
    p.add_argument("--stress", action="store_true", help="use the stress generator")
    p.add_argument("--counterexamples", action="store_true",
                   help="include instances known to falsify some directions")
    p.add_argument("--prop", action="append", default=None, help="restrict to an id")

    p = sub.add_parser("reproduce-paper", parents=[common], help="reproduce worked examples")
    p.add_argument("examples", nargs="*", metavar="example",
                   help="one of " + ", ".join(EXAMPLES) + " or all (default)")

    p = sub.add_parser("run", parents=[common], help="run a scenario file ('-' for stdin)")
    p.add_argument("scenario")

    p = sub.add_parser("format", help="print a scenario in canonical form")
    p.add_argument("scenario", help="file, '-' for stdin, or a built-in name")
    return parser


def _decl(text, name, table, kind):
    try:
        return parse_declaration(f"{name} = {text}", table)
    except ValueError as exc:
        raise ConfigError(f"bad {kind} declaration {text!r}: {exc}") from None


def _task(text):
    return parse_declaration(text, TASK_KINDS)


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path):
    from .scenario import BUILTIN

    if path in BUILTIN:
        return builtin_scenario(path)
    return parse_scenario(_read(path))


def scenario_from_args(args):
    """Translate parsed arguments into a :class:`Scenario`."""
    seqs, ops, tasks = [], [], []
    cmd = args.command
    if cmd == "run":
        return _load(args.scenario)
    if cmd == "classify":
        seqs.append(_decl(args.sequence, "f", SEQUENCE_KINDS, "sequence"))
        tasks.append(_task("classify f" + (" span=true" if args.span else "")))
    elif cmd == "transform":
        seqs.append(_decl(args.sequence, "f", SEQUENCE_KINDS, "sequence"))
        if args.mode == "family-sum":
            seqs.append(_decl(args.arg, "g", SEQUENCE_KINDS, "sequence"))
            tasks.append(_task("transform family-sum f g"))
        else:
            ops.append(_decl(args.arg, "L", OPERATOR_KINDS, "operator"))
            line = f"transform {args.mode} f L"
            if args.mode == "operator-sum":
                if args.second is None:
                    raise ConfigError("operator-sum needs a second operator")
                ops.append(_decl(args.second, "M", OPERATOR_KINDS, "operator"))
                line += " second=M"
            tasks.append(_task(line))
        if args.second is not None and args.mode != "operator-sum":
            raise ConfigError(f"{args.mode} takes no second operator")
    elif cmd == "direct-sum":
        seqs.append(_decl(args.left, "f", SEQUENCE_KINDS, "sequence"))
        seqs.append(_decl(args.right, "g", SEQUENCE_KINDS, "sequence"))
        tasks.append(_task("direct-sum f g"))
    elif cmd == "check":
        if args.random < 0:
            raise ConfigError("--random must be nonnegative")
        line = (f"suite builtin={'false' if args.no_builtin else 'true'} random={args.random}"
                f" stress={'true' if args.stress else 'false'}"
                f" counterexamples={'true' if args.counterexamples else 'false'}")
        if args.prop:
            line += " props=" + ",".join(args.prop)
        tasks.append(_task(line))
    elif cmd == "reproduce-paper":
        bad = [e for e in args.examples if e not in EXAMPLES + ("all",)]
        if bad:
            raise ConfigError(f"unknown example(s) {', '.join(bad)}; expected one of "
                              + ", ".join(EXAMPLES + ("all",)))
        wanted = args.examples or ["all"]
        names = EXAMPLES if "all" in wanted else tuple(dict.fromkeys(wanted))
        tasks += [_task(f"reproduce-paper {n}") for n in names]
    scenario = Scenario(sequences=tuple(seqs), operators=tuple(ops), tasks=tuple(tasks))
    diags = check_scenario(scenario)
    if diags:
        raise ScenarioError(diags)
    return scenario


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "format":
            stdout.write(format_scenario(_load(args.scenario)))
            return EXIT_OK
        scenario = scenario_from_args(args).with_options(args.ladder, args.seed, args.tol_abs)
        report = run_scenario(scenario)
    except ScenarioError as exc:
        for line, msg in exc.diagnostics:
            stderr.write(f"line {line}: {msg}\n" if line else f"error: {msg}\n")
        return EXIT_CONFIG
    except (ConfigError, SemiframeError, ValueError, TypeError, KeyError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_CONFIG
    stderr.write(render_text(report))
    if args.json:
        stdout.write(to_json(report))
    return report["summary"]["exit_status"]


if __name__ == "__main__":
    sys.exit(main())
