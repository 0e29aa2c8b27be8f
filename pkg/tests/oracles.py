"""Definition-level brute force used to cross-check the library.

Nothing here imports the rule or support modules; only the election model
is shared.
"""

import itertools
from fractions import Fraction


def subsets(items, min_size=1):
    items = sorted(items)
    for k in range(min_size, len(items) + 1):
        yield from (frozenset(s) for s in itertools.combinations(items, k))


def all_committees(e):
    return [frozenset(w) for w in itertools.combinations(range(e.num_candidates), e.seats)]


def argbest(e, score, maximize=True):
    """All committees attaining the best score; ``None`` scores are skipped."""
    scored = [(w, score(w)) for w in all_committees(e)]
    scored = [(w, s) for w, s in scored if s is not None]
    if not scored:
        return None
    best = (max if maximize else min)(s for _, s in scored)
    return {w for w, s in scored if s == best}


def hall_ratio(e, A):
    """min over non-empty K of A of supporters(K) / |K|, by plain loops."""
    best = None
    for K in subsets(A):
        n = sum(c for y, c in e.profile if y & K)
        r = Fraction(n, len(K))
        best = r if best is None else min(best, r)
    return best


def sequential_family(e, value):
    """Outcomes of a greedy rule under every tie-breaking."""
    out = set()

    def go(chosen):
        if len(chosen) == e.seats:
            out.add(chosen)
            return
        vals = {c: value(chosen, c) for c in range(e.num_candidates) if c not in chosen}
        top = max(vals.values())
        for c, v in vals.items():
            if v == top:
                go(chosen | {c})

    go(frozenset())
    return out


def odh_family(e):
    return sequential_family(e, lambda W, c: hall_ratio(e, W | {c}))


def rav_family(e):
    def weight(W, c):
        return sum((Fraction(n, 1 + len(y & W)) for y, n in e.profile if c in y), Fraction(0))
    return sequential_family(e, weight)


def oodh_family(e):
    return argbest(e, lambda W: hall_ratio(e, W))


def av_family(e):
    return argbest(e, lambda W: sum(n * len(y & W) for y, n in e.profile))


def sav_family(e):
    return argbest(e, lambda W: sum(
        (Fraction(n * len(y & W), len(y)) for y, n in e.profile if y), Fraction(0)))


def mav_family(e):
    return argbest(e, lambda W: max((len(W - y) + len(y - W) for y, _ in e.profile),
                                    default=0), maximize=False)


def pav_family(e):
    def h(p):
        return sum((Fraction(1, j) for j in range(1, p + 1)), Fraction(0))
    return argbest(e, lambda W: sum(n * h(len(y & W)) for y, n in e.profile))


def ccha_family(e):
    return argbest(e, lambda W: sum(n for y, n in e.profile if not y & W), maximize=False)


def ccra_family(e):
    """Committees with nobody unrepresented, or ``"all"`` when none exists."""
    zero = {W for W in all_committees(e) if all(y & W for y, _ in e.profile)}
    return zero or "all"


def voters(e):
    """One ballot per voter, expanded from the profile."""
    return [y for y, n in e.profile for _ in range(n)]


def monroe_brute(e, W):
    """Least misrepresentation over every voter-to-winner map, or ``None``."""
    W = sorted(W)
    lo, hi = e.total_voters // e.seats, -(-e.total_voters // e.seats)
    ballots = voters(e)
    best = None
    for assign in itertools.product(W, repeat=len(ballots)):
        loads = {c: 0 for c in W}
        for c in assign:
            loads[c] += 1
        if not all(lo <= loads[c] <= hi for c in W):
            continue
        cost = sum(1 for y, c in zip(ballots, assign) if c not in y)
        best = cost if best is None else min(best, cost)
    return best


def mha_family(e):
    fam = argbest(e, lambda W: monroe_brute(e, W), maximize=False)
    return fam if fam is not None else "all"


def mra_family(e):
    zero = {W for W in all_committees(e) if monroe_brute(e, W) == 0}
    return zero or "all"


def dhondt_vectors(votes, seats):
    """Seat vectors over every order of awarding tied seats."""
    out = set()

    def go(alloc):
        if sum(alloc) == seats:
            out.add(alloc)
            return
        q = [Fraction(v, a + 1) for v, a in zip(votes, alloc)]
        top = max(q)
        for i, x in enumerate(q):
            if x == top:
                go(alloc[:i] + (alloc[i] + 1,) + alloc[i + 1:])

    go((0,) * len(votes))
    return out


def jr_violated(e, W):
    """Some family of ballot types sharing a candidate, all missing W, is big enough."""
    types = [y for y, _ in e.profile]
    for k in range(1, len(types) + 1):
        for fam in itertools.combinations(types, k):
            if not frozenset.intersection(*fam):
                continue
            if any(y & W for y in fam):
                continue
            if sum(e.count(y) for y in fam) * e.seats >= e.total_voters:
                return True
    return False


def ejr_violated(e, W):
    types = [y for y, _ in e.profile]
    for ell in range(1, e.seats + 1):
        for k in range(1, len(types) + 1):
            for fam in itertools.combinations(types, k):
                if len(frozenset.intersection(*fam)) < ell:
                    continue
                if any(len(y & W) >= ell for y in fam):
                    continue
                if sum(e.count(y) for y in fam) * e.seats >= ell * e.total_voters:
                    return True
    return False


def lower_quota_violated(e, W):
    types = [y for y, _ in e.profile]
    for k in range(1, len(types) + 1):
        for fam in itertools.combinations(types, k):
            owed = sum(e.count(y) for y in fam) * e.seats // e.total_voters
            if owed and len(frozenset.intersection(*fam)) >= owed:
                if len(W & frozenset().union(*fam)) < owed:
                    return True
    return False
