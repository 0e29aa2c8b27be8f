"""Winner reports and the committee enumerator shared by all rules."""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from typing import Callable, Optional

from opendhondt.errors import InstanceTooLarge

DET = "det"
ENUM = "enum"


def _env_int(name, default):
    raw = os.environ.get(name)
    return int(raw) if raw else default


SUBSET_CAP = _env_int("OPENDHONDT_SUBSET_CAP", 10**6)
TIE_CAP = _env_int("OPENDHONDT_TIE_CAP", 64)


def set_key(committee):
    return tuple(sorted(committee))


def sort_sets(sets):
    return tuple(sorted((frozenset(s) for s in set(map(frozenset, sets))), key=set_key))


@dataclass(frozen=True)
class TraceStep:
    """One round of a sequential rule: every candidate's value and the pick."""

    iteration: int
    values: tuple
    chosen: int


@dataclass(frozen=True)
class WinnerReport:
    """Winning committees of one rule run.

    ``winner_sets`` is sorted.  With ``all_tied`` set every committee of the
    right size wins and ``winner_sets`` holds only the deterministic pick.
    ``scores`` maps committees to the objective the rule optimised, when it
    has one.
    """

    rule: str
    winner_sets: tuple
    tie_mode: str = DET
    trace: tuple = ()
    all_tied: bool = False
    scores: dict = field(default_factory=dict)
    truncated: bool = False

    @property
    def winners(self) -> frozenset:
        return self.winner_sets[0]

    def outcomes(self, num_candidates: int, seats: int, cap: int = SUBSET_CAP):
        """Every committee the rule may output under its tie mode.

        An all-tied result expands to every committee in enumerated mode and
        stays the single deterministic pick otherwise.
        """
        if not self.all_tied or self.tie_mode == DET:
            return self.winner_sets
        return tuple(frozenset(w) for w in committees(num_candidates, seats, cap))


def committees(num_candidates: int, seats: int, cap: int = SUBSET_CAP):
    """All ``seats``-subsets of the roster in lexicographic order."""
    total = math.comb(num_candidates, seats)
    if total > cap:
        raise InstanceTooLarge(
            f"{total} committees of size {seats} exceed the subset cap {cap}"
        )
    return itertools.combinations(range(num_candidates), seats)


def best_committees(
    num_candidates: int,
    seats: int,
    score: Callable,
    maximize: bool = True,
    cap: int = SUBSET_CAP,
    bound: Optional[Callable] = None,
):
    """Exhaustive argmax (or argmin) of ``score`` over all committees.

    ``bound(w)`` may return an optimistic estimate; committees whose bound is
    strictly worse than the best score so far are skipped, which never drops a
    tied optimum.  Returns ``(best_value, [committees])`` in lexicographic
    order.
    """
    sign = 1 if maximize else -1
    best = None
    winners = []
    for w in committees(num_candidates, seats, cap):
        if bound is not None and best is not None and sign * bound(w) < sign * best:
            continue
        value = score(w)
        if value is None:
            continue
        if best is None or sign * value > sign * best:
            best, winners = value, [frozenset(w)]
        elif value == best:
            winners.append(frozenset(w))
    return best, winners


def sequential(candidates, seats, values_for, ties, rule, max_ties=None):
    """Run a greedy rule that adds the best-valued candidate each round.

    ``values_for(elected)`` maps every unelected candidate to its value for
    the committee-so-far ``elected``.  Deterministic mode breaks ties by the
    smallest candidate id; enumerated mode follows every tied branch.
    """
    trace = []
    elected = []
    for i in range(seats):
        values = values_for(frozenset(elected))
        top = max(values.values())
        chosen = min(c for c, v in values.items() if v == top)
        trace.append(TraceStep(i + 1, tuple(sorted(values.items())), chosen))
        elected.append(chosen)
    if ties == DET:
        return WinnerReport(rule, (frozenset(elected),), DET, tuple(trace))

    finals = {}

    def explore(state):
        if state in finals:
            return finals[state]
        if len(state) == seats:
            out = {state}
        else:
            values = values_for(state)
            top = max(values.values())
            out = set()
            for c, v in values.items():
                if v == top:
                    out |= explore(state | {c})
        finals[state] = out
        return out

    family = sort_sets(explore(frozenset()))
    truncated = max_ties is not None and len(family) > max_ties
    if truncated:
        family = family[:max_ties]
    return WinnerReport(rule, family, ENUM, tuple(trace), truncated=truncated)


def finish(rule, sets, ties, scores=None, max_ties=None, all_tied=False):
    """Package an argbest family into a report honouring the tie mode."""
    family = sort_sets(sets)
    if ties == DET:
        family = family[:1]
    truncated = max_ties is not None and len(family) > max_ties
    if truncated:
        family = family[:max_ties]
    scores = {w: scores[w] for w in family} if scores else {}
    return WinnerReport(rule, family, ties, (), all_tied, scores, truncated)
