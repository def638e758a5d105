"""Pair-strength ("link") transforms and solvers.

Instead of judging each side separately, a pair can be judged by how much
the two people want each other: the sum of their two scores, or the
maximum. Replacing every score with the pair's strength yields a profile
with ties (both members of a pair see the same value), and stability with
respect to those values is solved by linearizing and running deferred
acceptance.
"""

from __future__ import annotations

from .gale_shapley import gs
from .instances import Marriage, QuantInstance, StrictProfile, WeakProfile

MODES = ("add", "max")


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be 'add' or 'max', got {mode!r}")


def link_value(instance: QuantInstance, man: int, woman: int, mode: str) -> int:
    """Strength of one pair: sum of the two scores for 'add', max for 'max'."""
    _check_mode(mode)
    a = instance.men_scores[man][woman]
    b = instance.women_scores[woman][man]
    return a + b if mode == "add" else max(a, b)


def marriage_link(instance: QuantInstance, marriage: Marriage, mode: str) -> int:
    """Aggregate strength of a marriage: sum of pair strengths for 'add',
    maximum pair strength for 'max'."""
    values = (link_value(instance, m, w, mode) for m, w in marriage.pairs())
    return sum(values) if mode == "add" else max(values)


def link_transform(instance: QuantInstance, mode: str) -> WeakProfile:
    """Replace every score with the pair's strength and re-derive rankings.

    Both members of a pair carry the identical value, so ties are common;
    rows are sorted by descending value, ascending candidate index.
    """
    _check_mode(mode)
    n = instance.n
    men_values = tuple(
        tuple(sorted(((w, link_value(instance, m, w, mode)) for w in range(n)),
                     key=lambda p: (-p[1], p[0])))
        for m in range(n)
    )
    women_values = tuple(
        tuple(sorted(((m, link_value(instance, m, w, mode)) for m in range(n)),
                     key=lambda p: (-p[1], p[0])))
        for w in range(n)
    )
    return WeakProfile(men_values, women_values)


def has_ties(profile: WeakProfile) -> bool:
    """True if any list holds two candidates at the same value. Uniqueness
    claims about highest-strength marriages are conditioned on this."""
    for side in (profile.men_values, profile.women_values):
        for row in side:
            for (_, a), (_, b) in zip(row, row[1:]):
                if a == b:
                    return True
    return False


def linearize_weak(profile: WeakProfile) -> StrictProfile:
    """Break ties by ascending candidate index; rows are stored in exactly
    that order already, so this just drops the values."""
    strip = lambda rows: tuple(tuple(c for c, _ in row) for row in rows)
    return StrictProfile(strip(profile.men_values), strip(profile.women_values))


def link_stable_gs(instance: QuantInstance, mode: str) -> Marriage:
    """Solve for a link-stable marriage: transform scores to pair strengths,
    linearize, and run deferred acceptance with men proposing.

    The output is always link-stable for the chosen mode. When the
    transformed profile has no ties it is additionally the unique link-stable
    marriage with the highest aggregate strength.
    """
    return gs(linearize_weak(link_transform(instance, mode)), "men")
