"""Score-gap stability machinery.

Raising the blocking threshold relaxes stability: a pair only blocks a
marriage when both sides gain at least ``alpha`` score points by defecting.
Pairs of candidates whose scores differ by less than alpha become
incomparable, which turns each preference list into a semiorder. Solvers
work on a strict linearization of that semiorder, guided by popularity
orders produced by a voting rule.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gale_shapley import gs
from .instances import Marriage, QuantInstance, StrictProfile

TotalOrder = tuple[int, ...]
# A voting rule turns a ballot matrix (ballots[v][c] = voter v's score for
# candidate c) into a strict total order over the candidates, best first.


def _check_alpha(alpha) -> int:
    if not isinstance(alpha, int) or isinstance(alpha, bool) or alpha < 1:
        raise ValueError(f"alpha must be an integer >= 1, got {alpha!r}")
    return alpha


@dataclass(frozen=True)
class SemiorderProfile:
    """Per-person preference relations at a given gap threshold: x strictly
    prefers a over b iff score(x,a) - score(x,b) >= alpha; smaller gaps make
    the pair incomparable.

    The strict part is irreflexive, asymmetric, and transitive (two stacked
    gaps of alpha span at least alpha), so every list is a semiorder.
    """

    instance: QuantInstance
    alpha: int

    @property
    def n(self) -> int:
        return self.instance.n

    def _row(self, side: str, person: int) -> tuple[int, ...]:
        scores = self.instance.men_scores if side == "men" else self.instance.women_scores
        return scores[person]

    def strictly_prefers(self, side: str, person: int, a: int, b: int) -> bool:
        row = self._row(side, person)
        return row[a] - row[b] >= self.alpha

    def incomparable(self, side: str, person: int, a: int, b: int) -> bool:
        row = self._row(side, person)
        return a != b and abs(row[a] - row[b]) < self.alpha

    def incomparable_pairs(self, side: str, person: int) -> list[tuple[int, int]]:
        """All unordered incomparable candidate pairs (a < b) on one list."""
        row = self._row(side, person)
        n = len(row)
        return [
            (a, b)
            for a in range(n)
            for b in range(a + 1, n)
            if abs(row[a] - row[b]) < self.alpha
        ]


def alpha_transform(instance: QuantInstance, alpha: int) -> SemiorderProfile:
    """View an instance at gap threshold alpha. At alpha=1 every distinct
    pair stays comparable, so the relation matches the classical profile."""
    return SemiorderProfile(instance, _check_alpha(alpha))


def score_totals(ballots) -> list[int]:
    """Total score each candidate receives, summed over all voters
    (column sums of the ballot matrix)."""
    n = len(ballots)
    totals = [0] * n
    for row in ballots:
        for c, value in enumerate(row):
            totals[c] += value
    return totals


def score_sum_rule(ballots) -> TotalOrder:
    """Rank candidates by descending total received score; equal totals are
    broken by ascending candidate index."""
    totals = score_totals(ballots)
    return tuple(sorted(range(len(totals)), key=lambda c: (-totals[c], c)))


def popularity_orders(instance: QuantInstance, rule=score_sum_rule):
    """(men_order, women_order): each side ranked by applying the voting
    rule to the scores the *other* side hands out."""
    return rule(instance.women_scores), rule(instance.men_scores)


def linearize(
    semiorder: SemiorderProfile, men_order: TotalOrder, women_order: TotalOrder
) -> StrictProfile:
    """Extend every semiorder list to a strict total order, resolving
    incomparability by popularity.

    Greedy rule, per list: among the remaining candidates that no other
    remaining candidate strictly beats, emit the one the guide order ranks
    best (women_order guides men's lists, men_order guides women's). The
    result is always a linear extension, and it is the guide-lexicographically
    best one; lists that are already total come out unchanged.
    """
    men_rank = {m: r for r, m in enumerate(men_order)}
    women_rank = {w: r for r, w in enumerate(women_order)}
    men_prefs = tuple(
        _greedy_extension(semiorder, "men", i, women_rank) for i in range(semiorder.n)
    )
    women_prefs = tuple(
        _greedy_extension(semiorder, "women", i, men_rank) for i in range(semiorder.n)
    )
    return StrictProfile(men_prefs, women_prefs)


def _greedy_extension(
    semiorder: SemiorderProfile, side: str, person: int, guide_rank: dict[int, int]
) -> tuple[int, ...]:
    remaining = list(range(semiorder.n))
    out = []
    while remaining:
        undominated = [
            c
            for c in remaining
            if not any(
                d != c and semiorder.strictly_prefers(side, person, d, c)
                for d in remaining
            )
        ]
        best = min(undominated, key=guide_rank.__getitem__)
        out.append(best)
        remaining.remove(best)
    return tuple(out)


def lex_male_alpha_gs(
    instance: QuantInstance, alpha: int, rule=score_sum_rule
) -> Marriage:
    """Popularity-guided solver for gap-threshold stability.

    Computes both popularity orders with the voting rule, linearizes the
    alpha semiorder along them, and runs deferred acceptance with men
    proposing. The output is always alpha-stable, because any marriage with
    no blocking pair in a linearization has none in the semiorder either.
    """
    _check_alpha(alpha)
    men_order, women_order = popularity_orders(instance, rule)
    profile = linearize(alpha_transform(instance, alpha), men_order, women_order)
    return gs(profile, "men")
