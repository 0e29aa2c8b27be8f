"""Random counterexample search with greedy shrinking."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from opendhondt.axioms import AxiomVerdict, evaluate
from opendhondt.errors import ElectionError
from opendhondt.generate import ElectionGenerator
from opendhondt.model import Election, _canonical_profile
from opendhondt.report import DET


@dataclass(frozen=True)
class Counterexample:
    election: Election
    verdict: AxiomVerdict
    trial: int
    original: Election


def _violates(rule, axiom, e, ties) -> Optional[AxiomVerdict]:
    try:
        verdict = evaluate(rule, axiom, e, ties)
    except ElectionError:
        # precondition not met (for instance a non closed-list profile)
        return None
    return verdict if verdict.violated else None


def _drop_candidate(e: Election, c: int) -> Election:
    remap = {old: new for new, old in enumerate(x for x in range(e.num_candidates) if x != c)}
    counts = {}
    for y, n in e.profile:
        z = frozenset(remap[x] for x in y if x != c)
        counts[z] = counts.get(z, 0) + n
    labels = tuple(lab for i, lab in enumerate(e.candidates) if i != c)
    profile = _canonical_profile(counts.items())
    return Election(labels, min(e.seats, len(labels)), profile,
                    sum(n for _, n in profile))


def _smaller(e: Election):
    """Candidate shrinks of ``e`` in a fixed order, smallest changes last."""
    if e.num_candidates > 1:
        for c in range(e.num_candidates - 1, -1, -1):
            yield _drop_candidate(e, c)
    for y, _ in e.profile:
        if len(e.profile) > 1:
            counts = dict(e.counts)
            del counts[y]
            yield e.with_counts(counts, e.num_ballots - e.count(y))
    if e.seats > 1:
        yield e.with_seats(e.seats - 1)
    for y, n in e.profile:
        for new in sorted({n // 2, n - 1}):
            if 1 <= new < n:
                counts = dict(e.counts)
                counts[y] = new
                yield e.with_counts(counts, e.total_voters - (n - new))


def shrink(rule, axiom, e: Election, verdict: AxiomVerdict, ties: str = DET):
    """Greedily apply shrinks that keep the violation until none does."""
    improved = True
    while improved:
        improved = False
        for candidate in _smaller(e):
            try:
                found = _violates(rule, axiom, candidate, ties)
            except ElectionError:
                found = None
            if found is not None:
                e, verdict, improved = candidate, found, True
                break
    return e, verdict


def search_counterexample(rule, axiom: str, gen: ElectionGenerator, trials: int,
                          ties: str = DET, minimize: bool = True):
    """First violating election in the generator's stream, shrunk.

    Returns ``None`` when no trial violates the axiom.  Deterministic for a
    fixed generator seed.
    """
    for trial in range(trials):
        e = next(gen)
        verdict = _violates(rule, axiom, e, ties)
        if verdict is None:
            continue
        small, verdict_small = (shrink(rule, axiom, e, verdict, ties)
                                if minimize else (e, verdict))
        return Counterexample(small, verdict_small, trial, e)
    return None
