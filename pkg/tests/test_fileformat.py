from pathlib import Path

import pytest
from hypothesis import given

import cases
from opendhondt.errors import (
    DuplicateHeader,
    ElectionSyntaxError,
    UnknownCandidate,
    VoterCountTooSmall,
)
from opendhondt.fileformat import emit_election, parse_election, read_election
from strategies import elections

ELECTIONS = Path(__file__).resolve().parent.parent / "elections"


def test_overlap_file_matches_builder(overlap):
    e = read_election(ELECTIONS / "three_seat_overlap.elect")
    assert e == overlap
    assert e.total_voters == 45000 and e.num_ballots == 43000


@pytest.mark.parametrize("name, make", [
    ("kernel_example", cases.kernel_election),
    ("chain_s1", lambda: cases.chain(1)),
    ("chain_s2", lambda: cases.chain(2)),
    ("chain_heavy_middle_s1", lambda: cases.chain_heavy_middle(1)),
    ("chain_heavy_middle_s2", lambda: cases.chain_heavy_middle(2)),
    ("cover_s1", lambda: cases.cover(1)),
    ("cover_s2", lambda: cases.cover(2)),
    ("two_seats_three_candidates", cases.two_seats_three_candidates),
    ("cohesive_block", cases.cohesive_block),
    ("pair_block", cases.pair_block),
    ("closed_lists", cases.party_lists),
])
def test_bundled_files(name, make):
    assert read_election(ELECTIONS / f"{name}.elect") == make()


@given(elections(allow_blank=True))
def test_round_trip(e):
    assert parse_election(emit_election(e, "generated\nsecond line")) == e


def test_whitespace_comments_and_merging():
    e = parse_election("""
        # leading comment
        seats:   1
        candidates:  x   y     # trailing
        ballot 2:   x
        ballot 3: y x
        ballot 1: x
        ballot 4:
    """)
    assert e.candidates == ("x", "y")
    assert e.count(e.ids("x")) == 3
    assert e.count(frozenset()) == 4
    assert e.total_voters == 10


def test_zero_count_rejected():
    with pytest.raises(ElectionSyntaxError) as info:
        parse_election("candidates: a\nseats: 1\nballot 0: a\n")
    assert (info.value.line, info.value.col) == (3, 8)


def test_voter_count_below_ballots():
    text = "candidates: a b\nseats: 1\nvoters: 100\nballot 70: a\nballot 50: b\n"
    with pytest.raises(VoterCountTooSmall, match="line 3"):
        parse_election(text)


def test_duplicate_header():
    with pytest.raises(DuplicateHeader) as info:
        parse_election("candidates: a\nseats: 1\nseats: 1\nballot 1: a\n")
    assert info.value.line == 3


def test_unknown_candidate_position():
    with pytest.raises(UnknownCandidate, match="line 3, col 13"):
        parse_election("candidates: a b\nseats: 1\nballot 4: a z\n")


@pytest.mark.parametrize("text", [
    "seats: 1\nballot 1: a\n",
    "candidates: a\nballot 1: a\n",
    "candidates: a a\nseats: 1\nballot 1: a\n",
    "candidates: a\nseats: one\nballot 1: a\n",
    "candidates: a\nseats: 1\nvote 1: a\n",
    "candidates: a\nseats: 1\n",
])
def test_malformed_files(text):
    with pytest.raises(ElectionSyntaxError):
        parse_election(text)


def test_seats_above_candidates_reports_line():
    with pytest.raises(Exception, match="line 2"):
        parse_election("candidates: a\nseats: 2\nballot 1: a\n")
