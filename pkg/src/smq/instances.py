"""Data model for two-sided matching markets with integer preference scores.

A market instance pairs n men with n women. Every person assigns a
distinct non-negative integer score to each member of the other side;
higher means more wanted. Indices are 0-based everywhere in code, while
human-facing output uses the 1-based names m1..mn and w1..wn.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

Matrix = tuple[tuple[int, ...], ...]


class InvalidInstanceError(ValueError):
    """Candidate instance data violates the score-matrix contract."""


class ZeroSizeError(InvalidInstanceError):
    pass


class NonSquareError(InvalidInstanceError):
    pass


class NegativeScoreError(InvalidInstanceError):
    pass


class DuplicateScoreError(InvalidInstanceError):
    """One person scored two candidates identically, so their ranking is ambiguous."""

    def __init__(self, side: str, person: int, first: int, second: int, value: int):
        self.side = side
        self.person = person
        self.first = first
        self.second = second
        self.value = value
        who = man_name(person) if side == "men" else woman_name(person)
        a, b = (
            (woman_name(first), woman_name(second))
            if side == "men"
            else (man_name(first), man_name(second))
        )
        super().__init__(f"{who} scores {a} and {b} both at {value}")


def man_name(i: int) -> str:
    return f"m{i + 1}"


def woman_name(j: int) -> str:
    return f"w{j + 1}"


@dataclass(frozen=True)
class QuantInstance:
    """A scored market: men_scores[i][j] is man i's score for woman j,
    women_scores[i][j] is woman i's score for man j.

    Construct through :func:`validate` (or :func:`parse_instance`) unless the
    data is known to satisfy the invariants already. Immutable and hashable.
    """

    n: int
    men_scores: Matrix
    women_scores: Matrix


@dataclass(frozen=True)
class StrictProfile:
    """Strict preference lists, most preferred first; the form every
    deferred-acceptance run consumes."""

    men_prefs: Matrix
    women_prefs: Matrix

    @property
    def n(self) -> int:
        return len(self.men_prefs)


@dataclass(frozen=True)
class Marriage:
    """A perfect matching; partner_of_man[i] is the woman married to man i."""

    partner_of_man: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.partner_of_man)

    def inverse(self) -> tuple[int, ...]:
        """partner_of_woman: entry j is the man married to woman j."""
        out = [0] * len(self.partner_of_man)
        for m, w in enumerate(self.partner_of_man):
            out[w] = m
        return tuple(out)

    def pairs(self) -> list[tuple[int, int]]:
        return list(enumerate(self.partner_of_man))


PairList = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class WeakProfile:
    """Preference lists with ties: each entry is a (candidate, value) list
    sorted by descending value, ascending candidate index within equal values.
    Equal values denote indifference."""

    men_values: tuple[PairList, ...]
    women_values: tuple[PairList, ...]

    @property
    def n(self) -> int:
        return len(self.men_values)

    def men_matrix(self) -> list[list[int]]:
        """men_matrix()[i][j] = man i's derived value for woman j."""
        return _matrix_from_pairs(self.men_values)

    def women_matrix(self) -> list[list[int]]:
        return _matrix_from_pairs(self.women_values)


def _matrix_from_pairs(rows: tuple[PairList, ...]) -> list[list[int]]:
    n = len(rows)
    out = [[0] * n for _ in rows]
    for i, row in enumerate(rows):
        for cand, value in row:
            out[i][cand] = value
    return out


def validate(n, men_scores, women_scores) -> QuantInstance:
    """Check candidate data against every invariant and build an instance.

    Raises:
        ZeroSizeError: n is not a positive integer.
        NonSquareError: a matrix is not n rows of n entries.
        NegativeScoreError: a score is below zero.
        DuplicateScoreError: one person's row repeats a value.
        InvalidInstanceError: a score is not an integer.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ZeroSizeError(f"instance size must be a positive integer, got {n!r}")
    men = _checked_matrix("men", n, men_scores)
    women = _checked_matrix("women", n, women_scores)
    return QuantInstance(n, men, women)


def _checked_matrix(side: str, n: int, rows) -> Matrix:
    if not isinstance(rows, (list, tuple)) or len(rows) != n:
        raise NonSquareError(f"{side} matrix must have {n} rows")
    out = []
    for person, row in enumerate(rows):
        if not isinstance(row, (list, tuple)) or len(row) != n:
            raise NonSquareError(f"{side} row {person + 1} must have {n} entries")
        seen: dict[int, int] = {}
        for cand, value in enumerate(row):
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidInstanceError(
                    f"{side} row {person + 1}: score {value!r} is not an integer"
                )
            if value < 0:
                raise NegativeScoreError(
                    f"{side} row {person + 1}: score {value} is negative"
                )
            if value in seen:
                raise DuplicateScoreError(side, person, seen[value], cand, value)
            seen[value] = cand
        out.append(tuple(row))
    return tuple(out)


def derive_classical(instance: QuantInstance) -> StrictProfile:
    """Keep only the orderings the scores induce: each list is sorted by
    strictly decreasing own score."""
    return StrictProfile(
        men_prefs=tuple(_rank_row(row) for row in instance.men_scores),
        women_prefs=tuple(_rank_row(row) for row in instance.women_scores),
    )


def _rank_row(row: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(range(len(row)), key=row.__getitem__, reverse=True))


def make_marriage(values) -> Marriage:
    """Build a marriage from a sequence of woman indices, one per man.

    Raises ValueError if the sequence is not a permutation of 0..n-1.
    """
    match = tuple(values)
    if sorted(match) != list(range(len(match))) or not match:
        raise ValueError(f"{list(match)} is not a permutation of 0..{max(len(match) - 1, 0)}")
    return Marriage(match)


def parse_instance(text: str) -> QuantInstance:
    """Parse the instance JSON format: {"n":..., "men":[[...]], "women":[[...]]}.

    Raises json.JSONDecodeError on malformed JSON, then the validate errors.
    """
    data = json.loads(text)
    if not isinstance(data, dict):
        raise InvalidInstanceError("instance JSON must be an object")
    for key in ("n", "men", "women"):
        if key not in data:
            raise InvalidInstanceError(f"instance JSON is missing key {key!r}")
    return validate(data["n"], data["men"], data["women"])


def serialize_instance(instance: QuantInstance) -> str:
    """Canonical JSON: fixed key order, compact separators, no whitespace."""
    doc = {
        "n": instance.n,
        "men": [list(row) for row in instance.men_scores],
        "women": [list(row) for row in instance.women_scores],
    }
    return json.dumps(doc, separators=(",", ":"))


def serialize_marriage(marriage: Marriage) -> str:
    return json.dumps({"match": list(marriage.partner_of_man)}, separators=(",", ":"))


def random_instance(n: int, seed: int, max_score: int = 100) -> QuantInstance:
    """Seeded random instance; every row draws n distinct scores from 1..max_score.

    Deterministic: the same (n, seed, max_score) always yields the same
    instance. Requires max_score >= n so a row of distinct scores exists.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if max_score < n:
        raise ValueError(f"max_score {max_score} cannot cover {n} distinct scores")
    rng = random.Random(seed)
    pool = range(1, max_score + 1)
    men = tuple(tuple(rng.sample(pool, n)) for _ in range(n))
    women = tuple(tuple(rng.sample(pool, n)) for _ in range(n))
    return QuantInstance(n, men, women)
