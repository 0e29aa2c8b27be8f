"""Seeded random elections for property tests and counterexample search."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from opendhondt.model import Election, election_from_ids


@dataclass
class ElectionGenerator:
    """Reproducible stream of small elections.

    The same seed and bounds always produce the same stream.  With
    ``closed_lists`` set, every election is a closed-list profile: disjoint
    ballots of at least ``seats`` candidates each.  ``max_voters`` caps the
    total ballot count, which keeps Monroe brute force feasible.
    """

    seed: int = 0
    min_candidates: int = 2
    max_candidates: int = 6
    max_seats: int = 4
    max_types: int = 8
    max_count: int = 50
    max_voters: Optional[int] = None
    closed_lists: bool = False
    max_lists: int = 4

    def __post_init__(self):
        self._rng = random.Random(self.seed)

    def __iter__(self):
        return self

    def __next__(self) -> Election:
        return self.closed_list() if self.closed_lists else self.approval()

    def _counts(self, k):
        rng = self._rng
        if self.max_voters is None:
            return [rng.randint(1, self.max_count) for _ in range(k)]
        total = rng.randint(k, max(k, self.max_voters))
        cuts = sorted(rng.sample(range(1, total), k - 1))
        return [b - a for a, b in zip([0] + cuts, cuts + [total])]

    def approval(self) -> Election:
        rng = self._rng
        n = rng.randint(self.min_candidates, self.max_candidates)
        seats = rng.randint(1, min(self.max_seats, n))
        k = rng.randint(1, self.max_types)
        if self.max_voters is not None:
            k = min(k, self.max_voters)
        types = set()
        for _ in range(k):
            ballot = frozenset(c for c in range(n) if rng.random() < 0.4)
            if not ballot:
                ballot = frozenset({rng.randrange(n)})
            types.add(ballot)
        types = sorted(types, key=lambda b: (len(b), sorted(b)))
        counts = self._counts(len(types))
        return election_from_ids(n, seats, list(zip(types, counts)))

    def closed_list(self) -> Election:
        rng = self._rng
        lists = rng.randint(1, self.max_lists)
        seats = rng.randint(1, self.max_seats)
        labels = []
        ballots = []
        for i in range(lists):
            size = seats + rng.randint(0, 1)
            start = len(labels)
            labels += [f"{chr(ord('a') + i)}{j + 1}" for j in range(size)]
            ballots.append((frozenset(range(start, start + size)),
                            rng.randint(1, self.max_count)))
        return election_from_ids(len(labels), seats, ballots, labels=labels)

    def take(self, count: int):
        return [next(self) for _ in range(count)]
