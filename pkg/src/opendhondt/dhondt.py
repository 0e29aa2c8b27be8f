"""D'Hondt apportionment for closed lists and its two approval extensions.

``odh`` grows the committee one candidate at a time, each round electing the
candidate whose addition keeps the best achievable minimum support highest.
``oodh`` maximises that same quantity over whole committees at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from opendhondt.model import ClosedListElection, Election
from opendhondt.report import (
    DET,
    SUBSET_CAP,
    best_committees,
    finish,
    sequential,
)
from opendhondt.support import maxmin_value


class DivisorSequence:
    """Strictly increasing positive divisors ``d(0) < d(1) < ...``.

    Seats already won by a list pick the divisor: a list holding ``a`` seats
    competes with ``votes / d(a)``.
    """

    def __init__(self, fn: Callable[[int], object] = None, name: str = "dhondt"):
        self._fn = fn if fn is not None else (lambda i: i + 1)
        self.name = name

    def __call__(self, i: int) -> Fraction:
        return Fraction(self._fn(i))

    def check(self, length: int):
        terms = [self(i) for i in range(length)]
        if terms and terms[0] <= 0:
            raise ValueError("divisors must be positive")
        if any(b <= a for a, b in zip(terms, terms[1:])):
            raise ValueError("divisors must be strictly increasing")


DHONDT = DivisorSequence()


@dataclass(frozen=True)
class Apportionment:
    """Outcome of a divisor method run.

    ``quotients[i][j]`` is ``votes[i] / d(j)``; ``order`` lists the list index
    awarded each successive seat.
    """

    seats: tuple
    elected: frozenset
    quotients: tuple
    order: tuple


def quotient_table(cle: ClosedListElection, divisor: DivisorSequence = DHONDT):
    return tuple(
        tuple(Fraction(v) / divisor(j) for j in range(cle.seats)) for v in cle.votes
    )


def divisor_apportionment(
    cle: ClosedListElection, divisor: DivisorSequence = DHONDT
) -> Apportionment:
    """Award seats one by one to the list with the highest current quotient.

    Equal quotients go to the list declared first.
    """
    divisor.check(cle.seats)
    seats = [0] * len(cle.lists)
    order = []
    for _ in range(cle.seats):
        scores = [Fraction(v) / divisor(a) for v, a in zip(cle.votes, seats)]
        top = max(scores)
        winner = scores.index(top)
        seats[winner] += 1
        order.append(winner)
    elected = frozenset(
        c for members, won in zip(cle.lists, seats) for c in members[:won]
    )
    return Apportionment(tuple(seats), elected, quotient_table(cle, divisor), tuple(order))


def divisor_outcomes(cle: ClosedListElection, divisor: DivisorSequence = DHONDT):
    """Every seat vector some tie-breaking order of the divisor method yields."""
    divisor.check(cle.seats)
    found = set()
    seen = set()

    def walk(seats):
        if seats in seen:
            return
        seen.add(seats)
        if sum(seats) == cle.seats:
            found.add(seats)
            return
        scores = [Fraction(v) / divisor(a) for v, a in zip(cle.votes, seats)]
        top = max(scores)
        for i, s in enumerate(scores):
            if s == top:
                walk(seats[:i] + (seats[i] + 1,) + seats[i + 1:])

    walk((0,) * len(cle.lists))
    return sorted(found)


def seats_per_list(cle: ClosedListElection, committee) -> tuple:
    return tuple(len(set(members) & set(committee)) for members in cle.lists)


def odh(e: Election, ties: str = DET, max_ties=None):
    """Sequential max-min support rule.

    Each round scores every unelected candidate ``c`` by the best achievable
    minimum support of ``elected + {c}`` and elects the top score.
    """

    def values_for(elected):
        return {
            c: maxmin_value(e, elected | {c})
            for c in range(e.num_candidates)
            if c not in elected
        }

    return sequential(e.candidates, e.seats, values_for, ties, "odh", max_ties)


def oodh(e: Election, ties: str = DET, max_ties=None, cap: int = SUBSET_CAP):
    """Committee with the highest best-achievable minimum support.

    Raises :class:`~opendhondt.errors.InstanceTooLarge` beyond ``cap``
    committees.
    """
    single = [e.approval_score(c) for c in range(e.num_candidates)]
    scores = {}

    def score(w):
        value = maxmin_value(e, frozenset(w))
        scores[frozenset(w)] = value
        return value

    def bound(w):
        return min(single[c] for c in w)

    _, winners = best_committees(
        e.num_candidates, e.seats, score, maximize=True, cap=cap, bound=bound
    )
    return finish("oodh", winners, ties, scores, max_ties)
