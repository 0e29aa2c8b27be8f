from fractions import Fraction

import pytest
from hypothesis import given

import cases
import oracles
from opendhondt.baselines import (
    av,
    ccha,
    ccra,
    mav,
    mha,
    monroe_assignment,
    monroe_cost,
    mra,
    pav,
    pav_breakdown,
    rav,
    sav,
    sav_weights,
)
from opendhondt.errors import SeatsMismatch
from opendhondt.generate import ElectionGenerator
from opendhondt.model import election_from_ids
from opendhondt.report import ENUM
from strategies import elections


def family(e, report):
    return {"".join(e.labels(w)) for w in report.winner_sets}


def named(e, report):
    return {tuple(e.labels(w)) for w in report.winner_sets}


# ---------------------------------------------------------------- AV / SAV
def test_av_overlap(overlap):
    assert family(overlap, av(overlap)) == {"abc"}
    assert [overlap.approval_score(c) for c in range(3)] == [16000, 14000, 11500]


def test_av_single_candidate():
    e = election_from_ids(1, 1, {frozenset({0}): 2})
    assert av(e).winners == {0}


def test_av_no_approvals_ties_everything():
    e = election_from_ids(4, 2, {frozenset(): 3})
    assert len(av(e, ENUM).winner_sets) == 6


def test_av_boundary_tie_truncates():
    e = election_from_ids(6, 2, {frozenset(): 3})
    r = av(e, ENUM, max_ties=4)
    assert r.truncated and len(r.winner_sets) == 4


def test_sav_weights_and_winners():
    e = cases.two_seats_three_candidates()
    weights = {e.candidates[c]: w for c, w in sav_weights(e).items()}
    assert weights == {"a": 8, "b": 4, "c": 5}
    assert family(e, sav(e)) == {"ac"}


def test_sav_on_singletons_is_av():
    e = election_from_ids(4, 2, {frozenset({0}): 3, frozenset({1}): 5, frozenset({2}): 1})
    assert sav(e, ENUM).winner_sets == av(e, ENUM).winner_sets


def test_sav_symmetric_pair():
    e = election_from_ids(2, 1, {frozenset({0, 1}): 4})
    assert len(sav(e, ENUM).winner_sets) == 2


def test_sav_ignores_blank_ballots():
    e = election_from_ids(2, 1, {frozenset(): 9, frozenset({1}): 1})
    assert sav(e).winners == {1}


# ---------------------------------------------------------------------- MAV
def test_mav_single_type():
    e = election_from_ids(4, 2, {frozenset({1, 3}): 5})
    r = mav(e, ENUM)
    assert r.winner_sets == (frozenset({1, 3}),)
    assert r.scores[frozenset({1, 3})] == 0


def test_mav_symmetric_singletons():
    e = election_from_ids(3, 1, {frozenset({0}): 1, frozenset({1}): 1, frozenset({2}): 1})
    r = mav(e, ENUM)
    assert len(r.winner_sets) == 3
    assert set(r.scores.values()) == {2}


def test_mav_cover_single_seat():
    e = cases.cover(1)
    assert set(mav(e, ENUM).winner_sets) == oracles.mav_family(e)


# ---------------------------------------------------------------- RAV / PAV
@pytest.mark.parametrize("make, expected", [
    (lambda: cases.chain(1), {"b"}),
    (lambda: cases.chain(2), {"ab", "bc"}),
    (lambda: cases.chain_heavy_middle(1), {"b"}),
    (lambda: cases.chain_heavy_middle(2), {"ab", "bc"}),
    (cases.two_seats_three_candidates, {"ac"}),
])
def test_rav_tie_families(make, expected):
    e = make()
    assert family(e, rav(e, ENUM)) == expected


def test_rav_chain_second_round():
    e = cases.chain(2)
    second = dict(rav(e).trace[1].values)
    assert second[e.index("a")] == second[e.index("c")] == Fraction(9, 2)
    assert dict(rav(e).trace[0].values)[e.index("b")] == 7


def test_rav_two_seats_second_round():
    e = cases.two_seats_three_candidates()
    second = dict(rav(e).trace[1].values)
    assert second[e.index("b")] == 4 and second[e.index("c")] == 5


def test_rav_overlap(overlap):
    r = rav(overlap)
    assert [overlap.candidates[s.chosen] for s in r.trace] == ["a", "d", "b"]
    second = {overlap.candidates[c]: v for c, v in r.trace[1].values}
    assert (second["b"], second["c"], second["d"]) == (9000, 8500, 9500)


@pytest.mark.parametrize("make, expected", [
    (lambda: cases.chain(1), {"b"}),
    (lambda: cases.chain(2), {"ac"}),
    (lambda: cases.chain_heavy_middle(1), {"b"}),
    (lambda: cases.chain_heavy_middle(2), {"ab", "bc"}),
    (cases.two_seats_three_candidates, {"ac"}),
])
def test_pav_tie_families(make, expected):
    e = make()
    assert family(e, pav(e, ENUM)) == expected


def test_pav_chain_scores():
    e = cases.chain(2)
    scores = {s: pav_breakdown(e, e.ids(s)).score for s in ("ac", "ab", "bc")}
    assert scores == {"ac": 12, "ab": Fraction(23, 2), "bc": Fraction(23, 2)}
    br = pav_breakdown(e, e.ids("ab"))
    assert sum(t for _, t in br.terms) == br.score


@given(elections())
def test_pav_single_seat_is_av(e):
    e = e.with_seats(1)
    assert pav(e, ENUM).winner_sets == av(e, ENUM).winner_sets


@given(elections())
def test_rav_first_pick_is_most_approved(e):
    first = rav(e).trace[0].chosen
    assert e.approval_score(first) == max(e.approval_score(c) for c in range(e.num_candidates))


def test_pav_breaks_house_monotonicity():
    assert family(cases.chain(1), pav(cases.chain(1))) == {"b"}
    assert family(cases.chain(2), pav(cases.chain(2))) == {"ac"}


# ------------------------------------------------------------ CC rules
def test_ccha_cover():
    assert family(cases.cover(1), ccha(cases.cover(1), ENUM)) == {"a"}
    assert family(cases.cover(2), ccha(cases.cover(2), ENUM)) == {"bc"}
    assert ccha(cases.cover(1)).scores[frozenset({0})] == 4


def test_ccha_full_house_counts_blanks():
    e = election_from_ids(2, 2, {frozenset(): 3, frozenset({0}): 2})
    assert ccha(e).scores[frozenset({0, 1})] == 3


def test_ccra_cover():
    r1 = ccra(cases.cover(1), ENUM)
    assert r1.all_tied
    assert len(r1.outcomes(3, 1)) == 3
    r2 = ccra(cases.cover(2), ENUM)
    assert not r2.all_tied and family(cases.cover(2), r2) == {"bc"}


def test_ccra_single_type():
    e = election_from_ids(3, 1, {frozenset({0, 2}): 4})
    assert set(ccra(e, ENUM).winner_sets) == {frozenset({0}), frozenset({2})}


# ----------------------------------------------------------------- Monroe
def test_monroe_cohesive_block():
    e = cases.cohesive_block()
    good = e.ids(["c1", "c2", "c3", "c5", "c6", "c7", "c8"])
    m = monroe_assignment(e, good)
    assert m.misrepresentation == 0
    assert sorted(m.loads().values()) == [1, 1, 1, 1, 2, 2, 2]
    assert monroe_cost(e, e.ids([f"c{i}" for i in range(1, 8)])) > 0


def test_monroe_single_type_even_loads():
    e = election_from_ids(3, 3, {frozenset({0, 1, 2}): 6})
    m = monroe_assignment(e, {0, 1, 2})
    assert m.misrepresentation == 0
    assert set(m.loads().values()) == {2}


def test_monroe_rejects_wrong_size():
    with pytest.raises(SeatsMismatch):
        monroe_assignment(cases.cover(2), {0})


def test_monroe_rules_on_cohesive_block():
    e = cases.cohesive_block()
    block = e.ids(["c1", "c2", "c3", "c4"])
    singles = e.ids(["c5", "c6", "c7", "c8"])
    for rule in (mha, mra):
        r = rule(e, ENUM)
        assert len(r.winner_sets) == 4
        for w in r.winner_sets:
            assert singles <= w and len(w & block) == 3


def test_mra_cover_contains_pair():
    e = cases.cover(2)
    r = mra(e, ENUM)
    assert e.ids("bc") in r.winner_sets
    m = monroe_assignment(e, e.ids("bc"))
    assert sorted(m.loads().values()) == [5, 5]


def test_monroe_one_voter_per_seat():
    e = election_from_ids(3, 3, {frozenset({0}): 1, frozenset({1}): 1, frozenset({2}): 1})
    assert monroe_cost(e, {0, 1, 2}) == 0


@given(elections(max_candidates=4, max_types=4, max_count=2, max_seats=3))
def test_monroe_matches_brute_force(e):
    if e.total_voters > 8:
        return
    for w in oracles.all_committees(e):
        assert monroe_cost(e, w) == oracles.monroe_brute(e, w)
        assert monroe_cost(e, sorted(w, reverse=True)) == monroe_cost(e, w)


# ------------------------------------------------------- oracle battery
RULE_ORACLES = {
    "av": (av, oracles.av_family),
    "sav": (sav, oracles.sav_family),
    "mav": (mav, oracles.mav_family),
    "rav": (rav, oracles.rav_family),
    "pav": (pav, oracles.pav_family),
    "ccha": (ccha, oracles.ccha_family),
    "ccra": (ccra, oracles.ccra_family),
    "mha": (mha, oracles.mha_family),
    "mra": (mra, oracles.mra_family),
}


def as_family(report):
    return "all" if report.all_tied else set(report.winner_sets)


@pytest.mark.parametrize("name", sorted(RULE_ORACLES))
def test_rules_match_definitions(name):
    rule, oracle = RULE_ORACLES[name]
    monroe = name in ("mha", "mra")
    gen = ElectionGenerator(seed=17, max_candidates=5, max_seats=3, max_types=5,
                            max_count=12, max_voters=6 if monroe else None)
    for e in gen.take(40):
        assert as_family(rule(e, ENUM)) == oracle(e), e
