"""Comparison rules: approval, satisfaction, minimax, Thiele-style and
Chamberlin-Courant / Monroe rules."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from opendhondt.errors import SeatsMismatch
from opendhondt.model import Election
from opendhondt.report import (
    DET,
    SUBSET_CAP,
    WinnerReport,
    best_committees,
    committees,
    finish,
    sequential,
)


def harmonic(p: int) -> Fraction:
    return sum((Fraction(1, j) for j in range(1, p + 1)), Fraction(0))


@dataclass(frozen=True)
class ScoreBreakdown:
    """A committee's score and the per-ballot-type terms it sums."""

    committee: frozenset
    score: Fraction
    terms: tuple


def _top_s(rule, e, weights, ties, max_ties):
    """Top-``seats`` candidates by weight; boundary ties are expanded."""
    ranked = sorted(weights, key=lambda c: (-weights[c], c))
    cut = weights[ranked[e.seats - 1]]
    must = [c for c in ranked if weights[c] > cut]
    pool = [c for c in ranked if weights[c] == cut]
    need = e.seats - len(must)
    if ties == DET:
        family = [frozenset(must + sorted(pool)[:need])]
    else:
        family = []
        for extra in itertools.combinations(sorted(pool), need):
            family.append(frozenset(must) | frozenset(extra))
            if max_ties is not None and len(family) > max_ties:
                break
    return finish(rule, family, ties, None, max_ties)


def av(e: Election, ties: str = DET, max_ties=None) -> WinnerReport:
    weights = {c: Fraction(e.approval_score(c)) for c in range(e.num_candidates)}
    return _top_s("av", e, weights, ties, max_ties)


def sav_weights(e: Election) -> dict:
    weights = {c: Fraction(0) for c in range(e.num_candidates)}
    for ballot, n in e.profile:
        for c in ballot:
            weights[c] += Fraction(n, len(ballot))
    return weights


def sav(e: Election, ties: str = DET, max_ties=None) -> WinnerReport:
    return _top_s("sav", e, sav_weights(e), ties, max_ties)


def hamming(a: frozenset, b: frozenset) -> int:
    return len(a ^ b)


def mav(e: Election, ties: str = DET, max_ties=None, cap: int = SUBSET_CAP):
    def score(w):
        w = frozenset(w)
        return max((hamming(w, y) for y, _ in e.profile), default=0)

    _, winners = best_committees(e.num_candidates, e.seats, score, False, cap)
    return finish("mav", winners, ties, {w: score(w) for w in winners}, max_ties)


def rav(e: Election, ties: str = DET, max_ties=None) -> WinnerReport:
    """Sequential proportional approval: ballots lose weight as they win."""

    def values_for(elected):
        values = {c: Fraction(0) for c in range(e.num_candidates) if c not in elected}
        for ballot, n in e.profile:
            w = Fraction(n, 1 + len(ballot & elected))
            for c in ballot:
                if c in values:
                    values[c] += w
        return values

    return sequential(e.candidates, e.seats, values_for, ties, "rav", max_ties)


def pav_breakdown(e: Election, committee) -> ScoreBreakdown:
    w = frozenset(committee)
    terms = tuple((y, n * harmonic(len(y & w))) for y, n in e.profile)
    return ScoreBreakdown(w, sum((t for _, t in terms), Fraction(0)), terms)


def pav(e: Election, ties: str = DET, max_ties=None, cap: int = SUBSET_CAP):
    def score(w):
        return pav_breakdown(e, w).score

    _, winners = best_committees(e.num_candidates, e.seats, score, True, cap)
    return finish("pav", winners, ties, {w: score(w) for w in winners}, max_ties)


def uncovered(e: Election, committee) -> int:
    w = frozenset(committee)
    return sum(n for y, n in e.profile if not y & w)


def ccha(e: Election, ties: str = DET, max_ties=None, cap: int = SUBSET_CAP):
    """Committees leaving the fewest voters without an approved winner."""
    _, winners = best_committees(
        e.num_candidates, e.seats, lambda w: uncovered(e, w), False, cap
    )
    return finish("ccha", winners, ties, {w: uncovered(e, w) for w in winners}, max_ties)


def _all_tied(rule, e, ties):
    first = frozenset(range(e.seats))
    return WinnerReport(rule, (first,), ties, (), True, {})


def ccra(e: Election, ties: str = DET, max_ties=None, cap: int = SUBSET_CAP):
    """Committees covering every voter, or everything tied when none does."""
    covers = [frozenset(w) for w in committees(e.num_candidates, e.seats, cap)
              if uncovered(e, w) == 0]
    if not covers:
        return _all_tied("ccra", e, ties)
    return finish("ccra", covers, ties, {w: 0 for w in covers}, max_ties)


# ----------------------------------------------------------------- Monroe
@dataclass(frozen=True)
class MonroeAssignment:
    """Integer assignment of ballots to winners with balanced loads.

    ``shares[(ballot, c)]`` voters of ``ballot`` are represented by ``c``.
    """

    shares: dict
    misrepresentation: int

    def loads(self) -> dict:
        out = {}
        for (_, c), n in self.shares.items():
            out[c] = out.get(c, 0) + n
        return out


def load_bounds(e: Election):
    return e.total_voters // e.seats, -(-e.total_voters // e.seats)


def monroe_assignment(e: Election, committee):
    """Cheapest balanced assignment for ``committee``, or ``None`` if the
    load bounds cannot be met by the counted ballots."""
    w = sorted(frozenset(committee))
    if len(w) != e.seats or len(set(committee)) != len(list(committee)):
        raise SeatsMismatch(f"committee needs exactly {e.seats} distinct candidates")
    lo, hi = load_bounds(e)
    mass = e.num_ballots
    if not lo * e.seats <= mass <= hi * e.seats:
        return None
    g = nx.DiGraph()
    g.add_node("sink", demand=mass - lo * e.seats)
    for i, (y, n) in enumerate(e.profile):
        g.add_node(("y", i), demand=-n)
        for c in w:
            g.add_edge(("y", i), ("c", c), capacity=n, weight=0 if c in y else 1)
    for c in w:
        g.add_node(("c", c), demand=lo)
        g.add_edge(("c", c), "sink", capacity=hi - lo, weight=0)
    try:
        flow = nx.min_cost_flow(g)
    except nx.NetworkXUnfeasible:
        return None
    shares = {}
    cost = 0
    for i, (y, _) in enumerate(e.profile):
        for c in w:
            f = flow[("y", i)][("c", c)]
            if f:
                shares[(y, c)] = f
                if c not in y:
                    cost += f
    return MonroeAssignment(shares, cost)


def monroe_cost(e: Election, committee):
    m = monroe_assignment(e, committee)
    return None if m is None else m.misrepresentation


def mha(e: Election, ties: str = DET, max_ties=None, cap: int = SUBSET_CAP):
    """Committees with the least Monroe misrepresentation.

    When no committee admits a balanced assignment every committee ties.
    """
    costs = {}

    def score(w):
        costs[frozenset(w)] = monroe_cost(e, w)
        return costs[frozenset(w)]

    best, winners = best_committees(e.num_candidates, e.seats, score, False, cap)
    if best is None:
        return _all_tied("mha", e, ties)
    return finish("mha", winners, ties, costs, max_ties)


def mra(e: Election, ties: str = DET, max_ties=None, cap: int = SUBSET_CAP):
    zero = [frozenset(w) for w in committees(e.num_candidates, e.seats, cap)
            if monroe_cost(e, w) == 0]
    if not zero:
        return _all_tied("mra", e, ties)
    return finish("mra", zero, ties, {w: 0 for w in zero}, max_ties)

