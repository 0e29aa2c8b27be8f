"""Command line: ``opendhondt compute|check|search|compare``.

Exit codes
----------
compute  0 ok, 2 unreadable or invalid input, 3 subset cap exceeded
check    0 satisfied, 1 violated, 4 inconclusive (2 and 3 as above)
search   0 nothing found, 1 counterexample found
compare  0 always once the grid is printed (2 and 3 as above)
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from opendhondt import axioms
from opendhondt.dhondt import divisor_apportionment
from opendhondt.errors import (
    ElectionError,
    InstanceTooLarge,
    NotClosedListShaped,
    PreconditionFailed,
    RuleCannotRun,
)
from opendhondt.fileformat import emit_election, read_election
from opendhondt.generate import ElectionGenerator
from opendhondt.model import as_closed_list
from opendhondt.report import DET, ENUM, TIE_CAP
from opendhondt.rules import RULES, get_rule
from opendhondt.search import search_counterexample

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_INCONCLUSIVE = 4


def exact(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def decimal2(x) -> str:
    x = Fraction(x)
    cents = math.floor(abs(x) * 100 + Fraction(1, 2))
    sign = "-" if x < 0 and cents else ""
    return f"{sign}{cents // 100}.{cents % 100:02d}"


class Printer:
    """Renders numbers, committees and key/value pairs in one of two styles."""

    def __init__(self, e, fmt, out):
        self.e = e
        self.machine = fmt == "machine"
        self.out = out

    def num(self, x) -> str:
        if not isinstance(x, Fraction):
            return str(x)
        return exact(x) if self.machine else decimal2(x)

    def committee(self, W) -> str:
        names = self.e.labels(W)
        return " ".join(names) if self.machine else "{" + ", ".join(names) + "}"

    def line(self, text=""):
        print(text, file=self.out)

    def pair(self, key, value):
        self.line(f"{key}: {value}")

    def value(self, v):
        if isinstance(v, frozenset):
            return self.committee(v)
        if isinstance(v, (list, tuple)) and v and isinstance(v[0], frozenset):
            return " | ".join(self.committee(w) for w in v)
        if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
            return self.num(v)
        if hasattr(v, "profile"):
            return "\n" + emit_election(v).rstrip()
        return str(v)


def _print_report(p: Printer, report, trace: bool, max_ties: int):
    e = p.e
    p.pair("rule", report.rule)
    p.pair("ties", report.tie_mode)
    if report.all_tied:
        p.pair("all_tied", "yes")
        p.pair("note", f"every committee of size {e.seats} wins; showing the deterministic pick")
    for i, W in enumerate(report.winner_sets, 1):
        extra = ""
        if W in report.scores and report.scores[W] is not None:
            extra = f"  (score {p.num(report.scores[W])})"
        p.pair(f"winners {i}" if len(report.winner_sets) > 1 else "winners",
               p.committee(W) + extra)
    if report.truncated:
        p.pair("truncated", f"tie family cut at {max_ties} sets")
    if trace and report.trace:
        for step in report.trace:
            p.pair(f"iteration {step.iteration} elected", e.candidates[step.chosen])
            for c, v in step.values:
                if p.machine:
                    p.pair(f"iteration {step.iteration} {e.candidates[c]}", p.num(v))
                else:
                    p.line(f"  {e.candidates[c]:>8}  {p.num(v):>12}")


def _print_dhondt(p: Printer):
    e = p.e
    cle = as_closed_list(e)
    if cle is None:
        raise ElectionError("ballots are not disjoint lists with at least `seats` members")
    result = divisor_apportionment(cle)
    names = ["{" + ",".join(e.labels(members)) + "}" for members in cle.lists]
    p.pair("rule", "dhondt")
    if p.machine:
        for i, name in enumerate(names):
            p.pair(f"list {i + 1}", name)
            p.pair(f"list {i + 1} votes", cle.votes[i])
            p.pair(f"list {i + 1} seats", result.seats[i])
            for j, q in enumerate(result.quotients[i]):
                p.pair(f"list {i + 1} quotient {j + 1}", p.num(q))
    else:
        width = max(12, *(len(n) for n in names)) + 2
        p.line("divisor " + "".join(f"{n:>{width}}" for n in names))
        for j in range(cle.seats):
            cells = []
            for i in range(len(names)):
                mark = "*" if j < result.seats[i] else " "
                cells.append(f"{p.num(result.quotients[i][j]) + mark:>{width}}")
            p.line(f"{j + 1:>7} " + "".join(cells))
        p.line("seats   " + "".join(f"{s:>{width}}" for s in result.seats))
    p.pair("winners", p.committee(result.elected))


def cmd_compute(args, out) -> int:
    e = read_election(args.file)
    p = Printer(e, args.format, out)
    ties = ENUM if args.ties == "enum" else DET
    if args.rule == "dhondt":
        _print_dhondt(p)
        return EXIT_OK
    names = list(RULES) if args.rule == "all" else [args.rule]
    for k, name in enumerate(names):
        if k:
            p.line()
        report = get_rule(name)(e, ties=ties, max_ties=args.max_ties)
        _print_report(p, report, args.trace, args.max_ties)
    return EXIT_OK


def _print_verdict(p: Printer, verdict, rule_name, max_outcomes=TIE_CAP):
    p.pair("rule", rule_name)
    p.pair("axiom", verdict.axiom)
    p.pair("status", verdict.status)
    for key, v in verdict.witness.items():
        if key in ("rule", "ties"):
            continue
        if key == "candidate":
            v = p.e.candidates[v]
        if key == "q" and not p.machine:
            p.pair("q", f"{exact(v)} ({decimal2(v)})")
            continue
        p.pair(key, p.value(v))
    for item, status in verdict.outcomes[:max_outcomes]:
        label = p.committee(item) if isinstance(item, frozenset) else f"construction {item}"
        p.pair(f"outcome {label}", status)
    if len(verdict.outcomes) > max_outcomes:
        p.pair("truncated", f"{len(verdict.outcomes) - max_outcomes} more outcomes not shown")


def cmd_check(args, out) -> int:
    e = read_election(args.file)
    p = Printer(e, args.format, out)
    rule = get_rule(args.rule)
    ties = ENUM if args.ties == "enum" else DET
    axiom = args.axiom
    if axiom == "pop-mono" and args.group:
        group = e.ids(args.group.split(","))
        ballot = e.ids(args.ballot.split(",")) if args.ballot else None
        verdict = axioms.check_population_monotonicity(rule, e, group, ballot, ties)
    elif axiom == "lower-quota":
        verdict = axioms.check_rule_committees(rule, axiom, e, ties,
                                               max_types=args.max_types)
    elif axiom == "ejr":
        verdict = axioms.check_rule_committees(rule, axiom, e, ties, max_ell=args.max_ell)
    else:
        verdict = axioms.evaluate(rule, axiom, e, ties)
    _print_verdict(p, verdict, args.rule, args.max_ties)
    return {axioms.SATISFIED: EXIT_OK, axioms.VIOLATED: EXIT_VIOLATED}.get(
        verdict.status, EXIT_INCONCLUSIVE)


def cmd_search(args, out) -> int:
    gen = ElectionGenerator(
        seed=args.seed, max_candidates=args.max_candidates, max_seats=args.max_seats,
        max_types=args.max_types, max_count=args.max_count,
        closed_lists=args.axiom == "closed-list",
    )
    ties = ENUM if args.ties == "enum" else DET
    found = search_counterexample(get_rule(args.rule), args.axiom, gen, args.trials, ties)
    if found is None:
        print(f"# no counterexample for {args.rule} / {args.axiom} in {args.trials} trials"
              f" (seed {args.seed})", file=out)
        return EXIT_OK
    header = (f"counterexample: {args.rule} violates {args.axiom}\n"
              f"seed {args.seed}, trial {found.trial}, ties {ties}")
    out.write(emit_election(found.election, header))
    return EXIT_VIOLATED


COMPARE_AXIOMS = ("jr", "ejr", "lower-quota", "house-mono", "pop-mono", "closed-list")


def cmd_compare(args, out) -> int:
    e = read_election(args.file)
    ties = ENUM if args.ties == "enum" else DET
    rules = args.rules.split(",") if args.rules else list(RULES)
    width = max(len(a) for a in COMPARE_AXIOMS) + 2
    print("rule  " + "".join(f"{a:>{width}}" for a in COMPARE_AXIOMS), file=out)
    for name in rules:
        rule = get_rule(name)
        cells = []
        for axiom in COMPARE_AXIOMS:
            try:
                cells.append(axioms.evaluate(rule, axiom, e, ties).status)
            except (PreconditionFailed, NotClosedListShaped):
                cells.append("n/a")
            except (RuleCannotRun, InstanceTooLarge):
                cells.append("cap")
        print(f"{name:<6}" + "".join(f"{c:>{width}}" for c in cells), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opendhondt",
        description="Approval-based committee rules and axiom checks.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    rule_names = sorted(RULES)

    def common(sp):
        sp.add_argument("--ties", choices=("det", "enum"), default="det")
        sp.add_argument("--format", choices=("table", "machine"), default="table")

    c = sub.add_parser("compute", help="run a rule on an election file")
    c.add_argument("rule", choices=rule_names + ["all", "dhondt"])
    c.add_argument("file")
    c.add_argument("--trace", action="store_true", help="print per-round values")
    c.add_argument("--max-ties", type=int, default=TIE_CAP)
    common(c)
    c.set_defaults(func=cmd_compute)

    k = sub.add_parser("check", help="check one axiom for a rule on an election file")
    k.add_argument("rule", choices=rule_names)
    k.add_argument("axiom", choices=axioms.AXIOMS)
    k.add_argument("file")
    k.add_argument("--group", help="comma-separated G for a single population check")
    k.add_argument("--ballot", help="comma-separated ballot A moved towards G")
    k.add_argument("--max-types", type=int, default=axioms.LOWER_QUOTA_TYPE_CAP)
    k.add_argument("--max-ell", type=int, default=None)
    k.add_argument("--max-ties", type=int, default=TIE_CAP)
    common(k)
    k.set_defaults(func=cmd_check)

    s = sub.add_parser("search", help="seeded random counterexample search")
    s.add_argument("rule", choices=rule_names)
    s.add_argument("axiom", choices=axioms.AXIOMS)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--max-candidates", type=int, default=6)
    s.add_argument("--max-seats", type=int, default=4)
    s.add_argument("--max-types", type=int, default=8)
    s.add_argument("--max-count", type=int, default=50)
    s.add_argument("--ties", choices=("det", "enum"), default="det")
    s.set_defaults(func=cmd_search)

    g = sub.add_parser("compare", help="rule by axiom grid for one election")
    g.add_argument("file")
    g.add_argument("--rules", help="comma-separated subset of rules")
    g.add_argument("--ties", choices=("det", "enum"), default="det")
    g.set_defaults(func=cmd_compare)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InstanceTooLarge, RuleCannotRun) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except PreconditionFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ElectionError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
