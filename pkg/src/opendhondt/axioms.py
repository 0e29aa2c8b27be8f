"""Axiom checkers for committees and for rules.

Committee-level checks (``check_jr``, ``check_ejr``, ``check_lower_quota``)
look at one winner set.  Rule-level checks rerun a rule on modified elections.
When a rule returns several tied committees, a rule is reported as violating
an axiom only if every tied outcome violates it; ``AxiomVerdict.outcomes``
keeps the per-outcome statuses.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from opendhondt.dhondt import divisor_outcomes, seats_per_list
from opendhondt.errors import (
    InstanceTooLarge,
    NotClosedListShaped,
    PreconditionFailed,
    RuleCannotRun,
    SeatsMismatch,
)
from opendhondt.model import Election, as_closed_list
from opendhondt.report import DET, ENUM, SUBSET_CAP
from opendhondt.rules import get_rule, rule_name

SATISFIED = "satisfied"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"

LOWER_QUOTA_TYPE_CAP = 15
EJR_SUBSET_CAP = 10**5

AXIOMS = ("jr", "ejr", "lower-quota", "house-mono", "pop-mono", "closed-list")


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of one axiom check.

    ``witness`` holds plain data that :func:`verify_witness` can replay
    against the definition.  ``outcomes`` pairs each tied committee with its
    own status when the check ran over a tie family.
    """

    axiom: str
    status: str
    witness: dict = field(default_factory=dict)
    outcomes: tuple = ()

    @property
    def violated(self) -> bool:
        return self.status == VIOLATED

    @property
    def satisfied(self) -> bool:
        return self.status == SATISFIED


def _committee(e: Election, W) -> frozenset:
    W = frozenset(W)
    if len(W) != e.seats:
        raise SeatsMismatch(f"committee has {len(W)} members, expected {e.seats}")
    return W


def _positive_types(e: Election):
    return [y for y, _ in e.profile]


# ------------------------------------------------------------ committee-level
def check_jr(e: Election, W) -> AxiomVerdict:
    """Justified representation, checked one candidate at a time.

    A violating group always shares some candidate; for that candidate the
    largest group is every voter approving it and no winner.
    """
    W = _committee(e, W)
    threshold = Fraction(e.total_voters, e.seats)
    for c in range(e.num_candidates):
        ballots = [y for y, _ in e.profile if c in y and not y & W]
        mass = sum(e.count(y) for y in ballots)
        if mass and mass >= threshold:
            return AxiomVerdict("jr", VIOLATED, {
                "committee": W, "candidate": c, "ballots": ballots,
                "mass": mass, "threshold": threshold,
            })
    return AxiomVerdict("jr", SATISFIED, {"committee": W})


def check_ejr(e: Election, W, max_ell: Optional[int] = None,
              cap: int = EJR_SUBSET_CAP) -> AxiomVerdict:
    """Extended justified representation up to ``max_ell``.

    Only sets of commonly approved candidates that fit inside some counted
    ballot can gather any mass, so those are the only ones enumerated.
    """
    W = _committee(e, W)
    top = e.seats if max_ell is None else min(e.seats, max_ell)
    checked = 0
    for ell in range(1, top + 1):
        threshold = Fraction(ell * e.total_voters, e.seats)
        seen = set()
        for y, _ in e.profile:
            if len(y & W) >= ell or len(y) < ell:
                continue
            checked += math.comb(len(y), ell)
            if checked > cap:
                return AxiomVerdict("ejr", INCONCLUSIVE, {
                    "committee": W, "reason": f"more than {cap} candidate sets",
                })
            for T in itertools.combinations(sorted(y), ell):
                if T in seen:
                    continue
                seen.add(T)
                T = frozenset(T)
                ballots = [z for z, _ in e.profile if T <= z and len(z & W) < ell]
                mass = sum(e.count(z) for z in ballots)
                if mass >= threshold:
                    return AxiomVerdict("ejr", VIOLATED, {
                        "committee": W, "ell": ell, "common": T,
                        "ballots": ballots, "mass": mass, "threshold": threshold,
                    })
    return AxiomVerdict("ejr", SATISFIED, {"committee": W})


def quota(e: Election, ballots) -> Fraction:
    return Fraction(sum(e.count(y) for y in ballots) * e.seats, e.total_voters)


def check_lower_quota(e: Election, W, max_types: int = LOWER_QUOTA_TYPE_CAP) -> AxiomVerdict:
    """Lower quota over every family of counted ballot types.

    A family owes ``floor(q)`` winners among the candidates its ballots
    approve whenever it commonly approves at least ``floor(q)`` candidates.
    Taking whole ballot types and the full common set is enough, since both
    only make the requirement harder to meet.
    """
    W = _committee(e, W)
    types = _positive_types(e)
    if len(types) > max_types:
        return AxiomVerdict("lower-quota", INCONCLUSIVE, {
            "committee": W, "reason": f"{len(types)} ballot types exceed cap {max_types}",
        })
    for size in range(1, len(types) + 1):
        for family in itertools.combinations(types, size):
            common = frozenset.intersection(*family)
            q = quota(e, family)
            owed = math.floor(q)
            if owed == 0 or len(common) < owed:
                continue
            elected = len(W & frozenset().union(*family))
            if elected < owed:
                return AxiomVerdict("lower-quota", VIOLATED, {
                    "committee": W, "ballots": list(family), "common": common,
                    "q": q, "floor_q": owed, "elected": elected,
                })
    return AxiomVerdict("lower-quota", SATISFIED, {"committee": W})


COMMITTEE_CHECKS = {
    "jr": check_jr,
    "ejr": check_ejr,
    "lower-quota": check_lower_quota,
}


# ---------------------------------------------------------------- rule-level
def rule_outcomes(rule, e: Election, ties: str = DET, cap: int = SUBSET_CAP):
    """All committees ``rule`` may output on ``e`` under the tie mode."""
    try:
        report = rule(e, ties=ties)
        return report.outcomes(e.num_candidates, e.seats, cap)
    except InstanceTooLarge as exc:
        raise RuleCannotRun(str(exc)) from exc


def check_rule_committees(rule, axiom: str, e: Election, ties: str = DET,
                          **options) -> AxiomVerdict:
    """Apply a committee-level axiom to every outcome of ``rule``.

    ``options`` go to the committee check, for instance ``max_types``.
    """
    check = COMMITTEE_CHECKS[axiom]
    per = []
    first_bad = None
    for W in rule_outcomes(rule, e, ties):
        v = check(e, W, **options)
        per.append((W, v.status))
        if v.violated and first_bad is None:
            first_bad = v
    statuses = {s for _, s in per}
    if statuses == {VIOLATED}:
        witness = dict(first_bad.witness, rule=rule_name(rule))
        return AxiomVerdict(axiom, VIOLATED, witness, tuple(per))
    if SATISFIED in statuses:
        return AxiomVerdict(axiom, SATISFIED, {"rule": rule_name(rule)}, tuple(per))
    return AxiomVerdict(axiom, INCONCLUSIVE, {"rule": rule_name(rule)}, tuple(per))


def check_house_monotonicity(rule, e: Election, ties: str = DET) -> AxiomVerdict:
    """Compare the rule at ``seats`` and ``seats + 1``.

    Violated when no outcome at the smaller size is contained in some outcome
    at the larger size.
    """
    if e.seats >= e.num_candidates:
        raise PreconditionFailed("house monotonicity needs a spare candidate")
    small = rule_outcomes(rule, e, ties)
    large = rule_outcomes(rule, e.with_seats(e.seats + 1), ties)
    per = tuple(
        (W, SATISFIED if any(W < V for V in large) else VIOLATED) for W in small
    )
    status = VIOLATED if all(s == VIOLATED for _, s in per) else SATISFIED
    witness = {"rule": rule_name(rule), "ties": ties, "seats": e.seats,
               "small": tuple(small), "large": tuple(large)}
    return AxiomVerdict("house-mono", status, witness, per)


def moved_voter_election(e: Election, G, A) -> Election:
    """One voter with ballot ``A`` additionally approves all of ``G``."""
    counts = dict(e.counts)
    counts[A] -= 1
    counts[A | G] = counts.get(A | G, 0) + 1
    return e.with_counts(counts)


def added_voter_election(e: Election, G) -> Election:
    """A new voter approving exactly ``G`` joins."""
    counts = dict(e.counts)
    counts[G] = counts.get(G, 0) + 1
    return e.with_counts(counts, e.total_voters + 1)


def _group_hit(rule, e, G, ties):
    outs = rule_outcomes(rule, e, ties)
    return any(G & W for W in outs), outs


def check_population_monotonicity(rule, e: Election, G, A=None,
                                  ties: str = DET) -> AxiomVerdict:
    """Gaining support must keep at least one member of ``G`` elected.

    The added-voter construction always runs; the moved-voter construction
    runs when a ballot type ``A`` disjoint from ``G`` is given.
    """
    G = frozenset(G)
    if not G:
        raise PreconditionFailed("G must be non-empty")
    if not any(G <= W for W in rule_outcomes(rule, e, ties)):
        raise PreconditionFailed("G must lie inside a winning committee")
    built = []
    if A is not None:
        A = frozenset(A)
        if G & A:
            raise PreconditionFailed("A must be disjoint from G")
        if e.count(A) < 1:
            raise PreconditionFailed("no voter holds ballot A")
        built.append((1, moved_voter_election(e, G, A)))
    built.append((2, added_voter_election(e, G)))
    per = []
    for construction, modified in built:
        hit, outs = _group_hit(rule, modified, G, ties)
        per.append((construction, SATISFIED if hit else VIOLATED))
        if not hit:
            return AxiomVerdict("pop-mono", VIOLATED, {
                "rule": rule_name(rule), "ties": ties, "group": G, "ballot": A,
                "construction": construction, "election": modified,
                "outcomes": tuple(outs),
            }, tuple(per))
    return AxiomVerdict("pop-mono", SATISFIED, {"rule": rule_name(rule), "group": G},
                        tuple(per))


def population_battery(rule, e: Election, groups=None) -> AxiomVerdict:
    """Both population-monotonicity constructions for every eligible case.

    ``groups`` defaults to every non-empty subset of the deterministic
    winners; the moved-voter construction is tried for every counted ballot
    type disjoint from the group.  A deterministic run that keeps ``G``
    settles a case; otherwise all tie outcomes are consulted.
    """
    winners = rule(e, ties=DET).outcomes(e.num_candidates, e.seats)[0]
    if groups is None:
        members = sorted(winners)
        groups = [frozenset(g) for k in range(1, len(members) + 1)
                  for g in itertools.combinations(members, k)]
    cases = 0
    for G in groups:
        variants = [(None, added_voter_election(e, G))]
        variants += [(A, moved_voter_election(e, G, A))
                     for A, _ in e.profile if not A & G]
        for A, modified in variants:
            cases += 1
            hit, _ = _group_hit(rule, modified, G, DET)
            if not hit:
                verdict = check_population_monotonicity(rule, e, G, A, ties=ENUM)
                if verdict.violated:
                    return verdict
    return AxiomVerdict("pop-mono", SATISFIED, {"rule": rule_name(rule), "cases": cases})


def check_closed_list_equivalence(rule, e: Election, ties: str = ENUM) -> AxiomVerdict:
    """Seat counts per list must match some D'Hondt tie outcome."""
    cle = as_closed_list(e)
    if cle is None:
        raise NotClosedListShaped("ballots are not disjoint lists of size >= seats")
    reference = divisor_outcomes(cle)
    per = []
    for W in rule_outcomes(rule, e, ties):
        seats = seats_per_list(cle, W)
        per.append((W, SATISFIED if seats in reference else VIOLATED))
    status = SATISFIED if any(s == SATISFIED for _, s in per) else VIOLATED
    witness = {"rule": rule_name(rule), "dhondt": reference,
               "rule_seats": sorted({seats_per_list(cle, W) for W, _ in per})}
    return AxiomVerdict("closed-list", status, witness, tuple(per))


def evaluate(rule, axiom: str, e: Election, ties: str = DET) -> AxiomVerdict:
    """Run one named axiom against ``rule`` on ``e``."""
    if axiom in COMMITTEE_CHECKS:
        return check_rule_committees(rule, axiom, e, ties)
    if axiom == "house-mono":
        return check_house_monotonicity(rule, e, ties)
    if axiom == "pop-mono":
        return population_battery(rule, e)
    if axiom == "closed-list":
        return check_closed_list_equivalence(rule, e)
    raise KeyError(f"unknown axiom {axiom!r}; choose from {', '.join(AXIOMS)}")


# ------------------------------------------------------------------- replay
def verify_witness(e: Election, verdict: AxiomVerdict) -> bool:
    """Re-check a violated verdict straight from the definitions.

    Nothing computed by the checker is trusted apart from the witness
    objects themselves; masses, quotas and rule outputs are recomputed.
    """
    if not verdict.violated:
        return False
    w = verdict.witness
    axiom = verdict.axiom
    if axiom == "jr":
        W, ballots, c = w["committee"], w["ballots"], w["candidate"]
        group = sum(e.count(y) for y in ballots)
        return (all(c in y and not y & W for y in ballots)
                and group * e.seats >= e.total_voters and group > 0)
    if axiom == "ejr":
        W, ballots, T, ell = w["committee"], w["ballots"], w["common"], w["ell"]
        group = sum(e.count(y) for y in ballots)
        return (len(T) >= ell
                and all(T <= y and len(y & W) < ell for y in ballots)
                and group * e.seats >= ell * e.total_voters)
    if axiom == "lower-quota":
        W, ballots = w["committee"], w["ballots"]
        group = sum(e.count(y) for y in ballots)
        owed = (group * e.seats) // e.total_voters
        common = frozenset.intersection(*ballots)
        return (owed >= 1 and all(e.count(y) > 0 for y in ballots)
                and len(common) >= owed
                and len(W & frozenset().union(*ballots)) < owed)
    rule = get_rule(w["rule"])
    if axiom == "house-mono":
        small = rule_outcomes(rule, e.with_seats(w["seats"]), w["ties"])
        large = rule_outcomes(rule, e.with_seats(w["seats"] + 1), w["ties"])
        return not any(W < V for W in small for V in large)
    if axiom == "pop-mono":
        G, A = w["group"], w["ballot"]
        if w["construction"] == 1:
            modified = moved_voter_election(e, G, A)
        else:
            modified = added_voter_election(e, G)
        return not any(G & V for V in rule_outcomes(rule, modified, w["ties"]))
    if axiom == "closed-list":
        cle = as_closed_list(e)
        reference = divisor_outcomes(cle)
        return all(seats_per_list(cle, W) not in reference
                   for W in rule_outcomes(rule, e, ENUM))
    return False


def describe_committee(e: Election, W) -> str:
    return "{" + ",".join(e.labels(W)) + "}"


__all__ = [
    "AXIOMS", "AxiomVerdict", "INCONCLUSIVE", "SATISFIED", "VIOLATED",
    "added_voter_election", "check_closed_list_equivalence", "check_ejr",
    "check_house_monotonicity", "check_jr", "check_lower_quota",
    "check_population_monotonicity", "check_rule_committees", "evaluate",
    "moved_voter_election", "population_battery", "quota", "rule_outcomes",
    "verify_witness",
]
