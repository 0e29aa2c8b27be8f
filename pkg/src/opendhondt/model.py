"""Approval elections: roster, seats, ballot profile and voter count.

Candidates are identified by their index in the roster (declaration order);
ballot types are frozensets of those indices.  Everything here is immutable.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from opendhondt.errors import (
    ElectionError,
    SeatsOutOfRange,
    UnknownCandidate,
    VoterCountTooSmall,
)

Ballot = frozenset


def _ballot_key(ballot):
    return (len(ballot), tuple(sorted(ballot)))


@dataclass(frozen=True)
class Election:
    """An approval-based multi-winner election.

    Attributes
    ----------
    candidates : tuple of str
        Candidate labels; candidate ``i`` is ``candidates[i]``.
    seats : int
        Committee size.
    profile : tuple of (frozenset of int, int)
        Ballot types with positive counts, merged and in canonical order.
    total_voters : int
        Number of voters, which may exceed the number of counted ballots.
    """

    candidates: tuple
    seats: int
    profile: tuple
    total_voters: int

    def __post_init__(self):
        labels = self.candidates
        if not labels:
            raise ElectionError("an election needs at least one candidate")
        if len(set(labels)) != len(labels) or any(not lab for lab in labels):
            raise ElectionError("candidate labels must be unique and non-empty")
        if not 1 <= self.seats <= len(labels):
            raise SeatsOutOfRange(
                f"seats must be within 1..{len(labels)}, got {self.seats}"
            )
        n = len(labels)
        for ballot, count in self.profile:
            if count <= 0:
                raise ElectionError("ballot counts must be positive")
            bad = [c for c in ballot if not 0 <= c < n]
            if bad:
                raise UnknownCandidate(f"unknown candidate ids {sorted(bad)}")
        if self.total_voters < self.num_ballots:
            raise VoterCountTooSmall(
                f"total_voters={self.total_voters} is below the"
                f" {self.num_ballots} counted ballots"
            )
        if self.total_voters <= 0:
            raise ElectionError("an election needs at least one voter")

    # -- derived views -------------------------------------------------
    @property
    def num_candidates(self) -> int:
        return len(self.candidates)

    @functools.cached_property
    def num_ballots(self) -> int:
        return sum(count for _, count in self.profile)

    @functools.cached_property
    def counts(self) -> dict:
        return dict(self.profile)

    @functools.cached_property
    def _index(self) -> dict:
        return {label: i for i, label in enumerate(self.candidates)}

    def count(self, ballot) -> int:
        return self.counts.get(frozenset(ballot), 0)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownCandidate(f"unknown candidate {label!r}") from None

    def ids(self, labels: Iterable[str]) -> frozenset:
        return frozenset(self.index(lab) for lab in labels)

    def labels(self, ids: Iterable[int]) -> list:
        return [self.candidates[i] for i in sorted(ids)]

    def approval_score(self, c: int) -> int:
        return sum(count for ballot, count in self.profile if c in ballot)

    def with_seats(self, seats: int) -> "Election":
        return Election(self.candidates, seats, self.profile, self.total_voters)

    def with_counts(self, counts: Mapping, total_voters: Optional[int] = None) -> "Election":
        """Copy with a new ballot profile; zero counts are dropped."""
        return Election(
            self.candidates,
            self.seats,
            _canonical_profile(counts.items()),
            self.total_voters if total_voters is None else total_voters,
        )

    def __repr__(self):
        body = ", ".join(
            f"{{{','.join(self.labels(b))}}}:{n}" for b, n in self.profile
        )
        return (
            f"Election(candidates={list(self.candidates)}, seats={self.seats},"
            f" voters={self.total_voters}, profile=[{body}])"
        )


@dataclass(frozen=True)
class ClosedListElection:
    """Party lists with their vote totals.

    ``lists`` holds disjoint tuples of candidate ids in ranking order and
    ``votes[i]`` is the number of votes for ``lists[i]``.
    """

    lists: tuple
    votes: tuple
    seats: int
    total_voters: int

    def __post_init__(self):
        seen = set()
        for members in self.lists:
            if seen.intersection(members):
                raise ElectionError("lists must be pairwise disjoint")
            seen.update(members)
            if len(members) < self.seats:
                raise ElectionError("every list needs at least `seats` candidates")
        if len(self.votes) != len(self.lists):
            raise ElectionError("one vote total per list is required")


def _canonical_profile(items) -> tuple:
    merged = {}
    for ballot, count in items:
        ballot = frozenset(ballot)
        merged[ballot] = merged.get(ballot, 0) + count
    return tuple(
        (b, n) for b, n in sorted(merged.items(), key=lambda kv: _ballot_key(kv[0])) if n > 0
    )


def build_election(
    labels: Sequence[str],
    seats: int,
    ballot_lines: Iterable,
    total_voters: Optional[int] = None,
) -> Election:
    """Build an :class:`Election` from labels.

    ``ballot_lines`` yields ``(count, approved_labels)`` pairs.  Repeated
    ballot types are merged by summing their counts, and ``total_voters``
    defaults to the number of counted ballots.
    """
    labels = tuple(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    items = []
    for count, approved in ballot_lines:
        try:
            ballot = frozenset(index[lab] for lab in approved)
        except KeyError as exc:
            raise UnknownCandidate(f"unknown candidate {exc.args[0]!r}") from None
        if count <= 0:
            raise ElectionError("ballot counts must be positive")
        items.append((ballot, count))
    profile = _canonical_profile(items)
    counted = sum(n for _, n in profile)
    if total_voters is None:
        total_voters = counted
    if total_voters < counted:
        raise VoterCountTooSmall(
            f"total_voters={total_voters} is below the {counted} counted ballots"
        )
    return Election(labels, seats, profile, total_voters)


def election_from_ids(num_candidates, seats, ballots, total_voters=None, labels=None):
    """Build an election directly from ``{frozenset(ids): count}`` data."""
    if labels is None:
        labels = [f"c{i + 1}" for i in range(num_candidates)]
    items = ballots.items() if isinstance(ballots, Mapping) else ballots
    profile = _canonical_profile(items)
    counted = sum(n for _, n in profile)
    return Election(
        tuple(labels), seats, profile, counted if total_voters is None else total_voters
    )


def supporters(e: Election, group: Iterable[int]) -> int:
    """Number of voters approving at least one candidate of ``group``."""
    group = frozenset(group)
    unknown = [c for c in group if not 0 <= c < e.num_candidates]
    if unknown:
        raise UnknownCandidate(f"unknown candidate ids {sorted(unknown)}")
    if not group:
        return 0
    return sum(count for ballot, count in e.profile if ballot & group)


def as_closed_list(e: Election) -> Optional[ClosedListElection]:
    """Return the equivalent closed-list election, or ``None``.

    The profile qualifies when its ballot types are pairwise disjoint and each
    holds at least ``seats`` candidates.  Lists are ordered by their smallest
    member and ranked in roster order.
    """
    if e.total_voters <= 0 or not e.profile:
        return None
    seen = set()
    for ballot, _ in e.profile:
        if len(ballot) < e.seats or seen.intersection(ballot):
            return None
        seen.update(ballot)
    ordered = sorted(e.profile, key=lambda item: min(item[0]))
    return ClosedListElection(
        lists=tuple(tuple(sorted(b)) for b, _ in ordered),
        votes=tuple(n for _, n in ordered),
        seats=e.seats,
        total_voters=e.total_voters,
    )
