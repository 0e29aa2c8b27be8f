"""Support distribution and the max-min support of a candidate set.

A support distribution splits every ballot that touches a target set ``A``
among the approved members of ``A``.  ``maxmin_support`` finds the split that
maximises the smallest total any member of ``A`` receives.  Two exact solvers
are provided:

``"simplex"``
    the linear program over the shares, solved by :mod:`opendhondt.simplex`;
``"flow"``
    Newton iteration on the ratio ``supporters(K) / |K|`` with a min-cut
    per step, which also yields a tight kernel.

``hall_ratio_maxmin`` enumerates every subset of ``A`` and is meant as an
independent oracle for both.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from opendhondt import simplex
from opendhondt.errors import (
    EmptyTargetSet,
    NoTightKernel,
    NotLeastSupported,
    TargetSetTooLarge,
    UnknownCandidate,
)
from opendhondt.flow import FlowNetwork
from opendhondt.model import Election

HALL_ENUMERATION_CAP = 20
ZERO = Fraction(0)


@dataclass(frozen=True)
class SupportDistribution:
    """Shares ``F(y, c)`` of ballot type ``y`` given to candidate ``c``.

    Pairs missing from ``shares`` are zero.
    """

    target: frozenset
    shares: dict = field(default_factory=dict)

    def share(self, ballot, c) -> Fraction:
        return self.shares.get((frozenset(ballot), c), ZERO)

    def positive(self):
        """Iterate ``(ballot, candidate, share)`` over strictly positive shares."""
        for (y, c), v in self.shares.items():
            if v > 0:
                yield y, c, v

    def replace(self, updates) -> "SupportDistribution":
        shares = dict(self.shares)
        shares.update(updates)
        return SupportDistribution(self.target, shares)


@dataclass(frozen=True)
class MaxMinResult:
    value: Fraction
    witness: SupportDistribution
    kernel: Optional[frozenset] = None


@dataclass(frozen=True)
class DistributionCheck:
    """Outcome of :func:`validate_distribution`.

    ``constraint`` is one of ``"domain"``, ``"non-negative"``,
    ``"approved-only"`` or ``"full-distribution"`` when ``valid`` is false.
    """

    valid: bool
    constraint: Optional[str] = None
    ballot: Optional[frozenset] = None
    candidate: Optional[int] = None
    detail: str = ""

    def __bool__(self):
        return self.valid


def _target(e: Election, A) -> frozenset:
    A = frozenset(A)
    if not A:
        raise EmptyTargetSet("the target set must be non-empty")
    bad = [c for c in A if not 0 <= c < e.num_candidates]
    if bad:
        raise UnknownCandidate(f"unknown candidate ids {sorted(bad)}")
    return A


def _touching(e: Election, A: frozenset):
    return [(y, y & A, n) for y, n in e.profile if y & A]


def support_vector(F: SupportDistribution) -> dict:
    """Total share per member of the target set."""
    totals = {c: ZERO for c in F.target}
    for (_, c), v in F.shares.items():
        totals[c] = totals.get(c, ZERO) + v
    return totals


def validate_distribution(e: Election, F: SupportDistribution) -> DistributionCheck:
    for (y, c), v in sorted(F.shares.items(), key=lambda kv: (sorted(kv[0][0]), kv[0][1])):
        if c not in F.target:
            return DistributionCheck(False, "domain", y, c, f"{c} is not in the target set")
        if v < 0:
            return DistributionCheck(False, "non-negative", y, c, f"share {v} is negative")
        if v != 0 and c not in y:
            return DistributionCheck(False, "approved-only", y, c, f"share {v} for an unapproved candidate")
    row_sums = {}
    for (y, _), v in F.shares.items():
        row_sums[y] = row_sums.get(y, ZERO) + v
    ballots = set(e.counts) | set(row_sums)
    for y in sorted(ballots, key=lambda b: (len(b), sorted(b))):
        if not y & F.target:
            continue
        got = row_sums.get(y, ZERO)
        if got != e.count(y):
            return DistributionCheck(
                False, "full-distribution", y, None,
                f"shares sum to {got}, ballot count is {e.count(y)}",
            )
    return DistributionCheck(True)


# ---------------------------------------------------------------- oracle
def hall_ratio_maxmin(e: Election, A, cap: int = HALL_ENUMERATION_CAP) -> Fraction:
    """Minimum of ``supporters(K) / |K|`` over all non-empty ``K`` within ``A``.

    Enumerates all ``2**|A| - 1`` subsets, so ``|A|`` is limited by ``cap``.
    """
    A = _target(e, A)
    if len(A) > cap:
        raise TargetSetTooLarge(f"|A|={len(A)} exceeds the enumeration cap {cap}")
    members = sorted(A)
    bit = {c: 1 << i for i, c in enumerate(members)}
    full = (1 << len(members)) - 1
    # inside[m]: voters whose approvals within A all lie in m (and are non-empty)
    inside = [0] * (full + 1)
    for y, ya, n in _touching(e, A):
        inside[sum(bit[c] for c in ya)] += n
    for i in range(len(members)):
        b = 1 << i
        for m in range(full + 1):
            if m & b:
                inside[m] += inside[m ^ b]
    touching = inside[full]
    best = None
    for K in range(1, full + 1):
        ratio = Fraction(touching - inside[full ^ K], bin(K).count("1"))
        if best is None or ratio < best:
            best = ratio
    return best


# --------------------------------------------------------------- simplex path
def _solve_simplex(e: Election, A: frozenset) -> MaxMinResult:
    touching = _touching(e, A)
    members = sorted(A)
    variables = [(y, c) for y, ya, _ in touching for c in sorted(ya)]
    col = {v: j for j, v in enumerate(variables)}
    s_col = len(variables)
    slack = {c: s_col + 1 + i for i, c in enumerate(members)}
    width = s_col + 1 + len(members)
    rows, rhs = [], []
    for y, ya, n in touching:
        row = [0] * width
        for c in ya:
            row[col[(y, c)]] = 1
        rows.append(row)
        rhs.append(n)
    for c in members:
        row = [0] * width
        for y, ya, _ in touching:
            if c in ya:
                row[col[(y, c)]] = 1
        row[s_col] = -1
        row[slack[c]] = -1
        rows.append(row)
        rhs.append(0)
    objective = [0] * width
    objective[s_col] = 1
    value, x = simplex.solve(objective, rows, rhs)
    shares = {v: x[j] for v, j in col.items() if x[j] != 0}
    return MaxMinResult(value, SupportDistribution(A, shares))


# ------------------------------------------------------------------ flow path
def _min_ratio_cut(touching, members, lam: Fraction):
    """Minimise ``supporters(K) - lam * |K|``; returns (K, network, edges)."""
    p, q = lam.numerator, lam.denominator
    nc = len(members)
    node = {c: 1 + i for i, c in enumerate(members)}
    source, sink = 0, 1 + nc + len(touching)
    net = FlowNetwork(sink + 1)
    infinite = p * nc + 1
    for c in members:
        net.add_edge(source, node[c], p)
    edges = {}
    for k, (y, ya, n) in enumerate(touching):
        yn = 1 + nc + k
        for c in ya:
            edges[(y, c)] = net.add_edge(node[c], yn, infinite)
        net.add_edge(yn, sink, q * n)
    cut = net.max_flow(source, sink)
    side = net.source_side(source)
    K = frozenset(c for c in members if side[node[c]])
    return K, cut, net, edges


def _solve_flow(e: Election, A: frozenset, want_witness: bool = True) -> MaxMinResult:
    touching = _touching(e, A)
    members = sorted(A)
    K = A
    lam = Fraction(sum(n for _, _, n in touching), len(A))
    while True:
        found, cut, net, edges = _min_ratio_cut(touching, members, lam)
        # cut = p*|A| + q*(supporters(found) - lam*|found|)
        if cut >= lam.numerator * len(members) or not found:
            break
        K = found
        lam = Fraction(sum(n for _, ya, n in touching if ya & K), len(K))
    if not want_witness:
        return MaxMinResult(lam, None, K)
    # the final network carries lam to each candidate (scaled by q)
    q = lam.denominator
    shares = {}
    for y, ya, n in touching:
        given = ZERO
        for c in sorted(ya):
            f = Fraction(net.flow_on(edges[(y, c)]), q)
            if f:
                shares[(y, c)] = f
                given += f
        rest = n - given
        if rest:
            first = min(ya)
            shares[(y, first)] = shares.get((y, first), ZERO) + rest
    return MaxMinResult(lam, SupportDistribution(A, shares), K)


def maxmin_support(e: Election, A, method: str = "flow") -> MaxMinResult:
    """Best achievable minimum support over ``A``, with an optimal split.

    Parameters
    ----------
    e : Election
    A : iterable of int
        Non-empty target set of candidate ids.
    method : {"flow", "simplex"}
        Solver path; both are exact and return the same value.

    Returns
    -------
    MaxMinResult
        ``kernel`` is filled by the flow path only; use :func:`tight_kernel`
        to extract one from any optimal witness.
    """
    A = _target(e, A)
    if not _touching(e, A):
        return MaxMinResult(ZERO, SupportDistribution(A, {}), A)
    if method == "flow":
        return _solve_flow(e, A)
    if method == "simplex":
        return _solve_simplex(e, A)
    raise ValueError(f"unknown method {method!r}")


@functools.lru_cache(maxsize=1 << 16)
def _cached_value(profile, A) -> Fraction:
    e = _ProfileView(profile)
    if not _touching(e, A):
        return ZERO
    return _solve_flow(e, A, want_witness=False).value


class _ProfileView:
    __slots__ = ("profile",)

    def __init__(self, profile):
        self.profile = profile


def maxmin_value(e: Election, A) -> Fraction:
    """Just the value of :func:`maxmin_support` (flow path, memoised)."""
    return _cached_value(e.profile, _target(e, A))


# -------------------------------------------------------------------- kernels
def least_supported(F: SupportDistribution):
    supp = support_vector(F)
    low = min(supp.values())
    return low, frozenset(c for c, v in supp.items() if v == low)


def _kernel_tree(F: SupportDistribution, least: frozenset, start: int):
    """Closure of ``start`` within ``least``; also records how each member joined.

    ``parent[x] = (p, y)`` means ``x`` joined because ``{x, p}`` lies in
    ballot ``y``, ``p`` was already in the kernel and ``F(y, x) > 0``.
    """
    K = {start}
    parent = {}
    depth = {start: 0}
    positive = sorted(
        ((y, c) for y, c, _ in F.positive()), key=lambda yc: (len(yc[0]), sorted(yc[0]), yc[1])
    )
    while True:
        snapshot = sorted(K)
        added = []
        for x in sorted(least - K):
            for y, c in positive:
                if c != x:
                    continue
                p = next((m for m in snapshot if m in y), None)
                if p is not None:
                    added.append(x)
                    parent[x] = (p, y)
                    depth[x] = depth[p] + 1
                    break
        if not added:
            return frozenset(K), parent, depth
        K.update(added)


def kernel_of(e: Election, F: SupportDistribution, ell: int) -> frozenset:
    """Least-supported candidates that can pass support to ``ell``, possibly in hops."""
    _, least = least_supported(F)
    if ell not in least:
        raise NotLeastSupported(f"candidate {ell} is not among the least supported")
    return _kernel_tree(F, least, ell)[0]


def _leaks(F: SupportDistribution, K: frozenset):
    """Positive shares from ballots touching ``K`` to candidates outside ``K``."""
    return [(y, c, v) for y, c, v in F.positive() if c not in K and y & K]


def tight_kernel(e: Election, r: MaxMinResult) -> frozenset:
    """A kernel certifying that ``r.witness`` is optimal.

    All members receive exactly ``r.value`` and no ballot touching the kernel
    gives anything to a target member outside it.
    """
    F = r.witness
    low, least = least_supported(F)
    if low != r.value:
        raise NoTightKernel(f"witness minimum {low} differs from value {r.value}")
    for ell in sorted(least):
        K = _kernel_tree(F, least, ell)[0]
        if not _leaks(F, K):
            return K
    raise NoTightKernel("every kernel leaks support; the witness is not optimal")


def improve_distribution(e: Election, F: SupportDistribution) -> Optional[SupportDistribution]:
    """Raise the minimum support of ``F`` by routing support to the weakest.

    Each least-supported candidate ``l`` draws ``k2(l)`` from a better
    supported candidate sharing a ballot with its kernel, passing it along the
    kernel path when ``l`` is not on that ballot itself.  Returns ``None`` when
    some kernel is closed, i.e. ``F`` is already optimal.
    """
    supp = support_vector(F)
    low, least = least_supported(F)
    others = F.target - least
    if not others:
        return None
    gap = min(supp[c] for c in others) - low
    plans = []
    for ell in sorted(least):
        K, parent, depth = _kernel_tree(F, least, ell)
        options = []
        for y, c, v in _leaks(F, K):
            if ell in y:
                end = ell
            else:
                end = min((m for m in K if m in y), key=lambda m: (depth[m], m))
            options.append(((depth[end], len(y), sorted(y), c), y, c, v, end))
        if not options:
            return None
        _, y_l, c_l, v_l, end = min(options, key=lambda o: o[0])
        hops = []
        node = end
        while node != ell:
            prev, y = parent[node]
            hops.append((y, node, prev))
            node = prev
        plans.append((y_l, c_l, v_l, end, hops))

    size = len(least)
    shares = dict(F.shares)

    def shift(y, c, amount):
        shares[(y, c)] = shares.get((y, c), ZERO) + amount

    for y_l, c_l, v_l, end, hops in plans:
        bounds = [v_l / size, gap / (3 * size)]
        if hops:
            bounds.append(min(F.share(y, giver) for y, giver, _ in hops) / size)
        amount = min(bounds)
        shift(y_l, c_l, -amount)
        shift(y_l, end, amount)
        for y, giver, taker in hops:
            shift(y, giver, -amount)
            shift(y, taker, amount)
    return SupportDistribution(F.target, {k: v for k, v in shares.items() if v != 0})
