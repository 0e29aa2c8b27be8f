"""Plain-text election files.

::

    # comment
    candidates: a b c
    seats: 2
    voters: 12          # optional, defaults to the ballot total
    ballot 3: a b
    ballot 2:           # a blank ballot

Headers may appear in any order but only once.  Repeated ballot types are
merged.
"""

from __future__ import annotations

import re

from opendhondt.errors import (
    DuplicateHeader,
    ElectionError,
    ElectionSyntaxError,
    UnknownCandidate,
    VoterCountTooSmall,
)
from opendhondt.model import Election, _canonical_profile

HEADERS = ("candidates", "seats", "voters")
_LABEL = re.compile(r"[^\s:#]+\Z")
_BALLOT = re.compile(r"ballot\s+(\S+?)\s*:")


def _tokens(text, start):
    """Whitespace-separated tokens with their 1-based columns."""
    for m in re.finditer(r"\S+", text):
        yield m.group(), start + m.start() + 1


def _positive_int(token, line, col, what):
    if not token.isdigit() or int(token) <= 0:
        raise ElectionSyntaxError(f"{what} must be a positive integer, got {token!r}", line, col)
    return int(token)


def parse_election(text: str) -> Election:
    """Parse an election file's contents; diagnostics carry line and column."""
    headers = {}
    ballots = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        indent = len(body) - len(body.lstrip())
        m = _BALLOT.match(stripped)
        if m:
            count = _positive_int(m.group(1), lineno, indent + m.start(1) + 1, "ballot count")
            rest_at = indent + m.end()
            labels = list(_tokens(body[rest_at:], rest_at))
            ballots.append((lineno, count, labels))
            continue
        key, sep, value = stripped.partition(":")
        key = key.strip().lower()
        if not sep or key not in HEADERS:
            raise ElectionSyntaxError(f"unrecognised line {stripped!r}", lineno, indent + 1)
        if key in headers:
            raise DuplicateHeader(f"header {key!r} repeats line {headers[key][0]}",
                                  lineno, indent + 1)
        value_at = indent + len(stripped.split(":", 1)[0]) + 1
        headers[key] = (lineno, list(_tokens(body[value_at:], value_at)))

    last = len(text.splitlines()) or 1
    for key in ("candidates", "seats"):
        if key not in headers:
            raise ElectionSyntaxError(f"missing {key!r} header", last, 1)

    line, toks = headers["candidates"]
    if not toks:
        raise ElectionSyntaxError("no candidates declared", line, 1)
    labels = []
    for label, col in toks:
        if not _LABEL.match(label):
            raise ElectionSyntaxError(f"bad candidate label {label!r}", line, col)
        if label in labels:
            raise ElectionSyntaxError(f"candidate {label!r} declared twice", line, col)
        labels.append(label)
    index = {lab: i for i, lab in enumerate(labels)}

    def single(key, what):
        line, toks = headers[key]
        if len(toks) != 1:
            raise ElectionSyntaxError(f"{key} takes one value", line, 1)
        return _positive_int(toks[0][0], line, toks[0][1], what), line

    seats, seats_line = single("seats", "seats")

    items = []
    for line, count, toks in ballots:
        ids = set()
        for label, col in toks:
            if label not in index:
                raise UnknownCandidate(f"line {line}, col {col}: unknown candidate {label!r}")
            ids.add(index[label])
        items.append((frozenset(ids), count))
    profile = _canonical_profile(items)
    counted = sum(n for _, n in profile)

    if "voters" in headers:
        voters, voters_line = single("voters", "voters")
        if voters < counted:
            raise VoterCountTooSmall(
                f"line {voters_line}, col 1: voters={voters} is below the"
                f" {counted} counted ballots"
            )
    else:
        voters = counted
        if voters == 0:
            raise ElectionSyntaxError("no ballots and no voters header", last, 1)
    try:
        return Election(tuple(labels), seats, profile, voters)
    except ElectionError as exc:
        raise type(exc)(f"line {seats_line}, col 1: {exc}") from None


def read_election(path) -> Election:
    with open(path, encoding="utf-8") as fh:
        return parse_election(fh.read())


def emit_election(e: Election, comment: str = "") -> str:
    """Canonical text for ``e``; ``parse_election`` inverts it exactly."""
    lines = [f"# {part}" for part in comment.splitlines()] if comment else []
    lines.append("candidates: " + " ".join(e.candidates))
    lines.append(f"seats: {e.seats}")
    lines.append(f"voters: {e.total_voters}")
    for ballot, n in e.profile:
        names = " ".join(e.labels(ballot))
        lines.append(f"ballot {n}: {names}".rstrip())
    return "\n".join(lines) + "\n"
