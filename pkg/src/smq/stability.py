"""Blocking-pair detection for every stability notion, plus dominance and
the lexicographic marriage order used by the popularity-guided solver.

A single scan with a swappable pair predicate covers all four notions, so
set-level relationships between notions can be tested by swapping
predicates rather than by separate checkers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .instances import Marriage, QuantInstance

NOTIONS = ("classical", "alpha", "link-add", "link-max")


@dataclass(frozen=True)
class BlockingPair:
    man: int
    woman: int
    witness: dict[str, int]


@dataclass(frozen=True)
class BlockingReport:
    """Pairs that violate one stability notion for one marriage; empty pairs
    means the marriage is stable under that notion."""

    notion: str
    alpha: int | None
    pairs: tuple[BlockingPair, ...]

    @property
    def stable(self) -> bool:
        return not self.pairs

    def to_json(self) -> dict:
        return {
            "notion": self.notion,
            "alpha": self.alpha,
            "pairs": [
                {"m": p.man, "w": p.woman, "witness": dict(p.witness)} for p in self.pairs
            ],
        }


def _check_notion(notion: str, alpha: int | None) -> None:
    if notion not in NOTIONS:
        raise ValueError(f"unknown stability notion {notion!r}")
    if notion == "alpha":
        if not isinstance(alpha, int) or isinstance(alpha, bool) or alpha < 1:
            raise ValueError("notion 'alpha' needs an integer alpha >= 1")
    elif alpha is not None:
        raise ValueError(f"alpha does not apply to notion {notion!r}")


def blocking_pairs(
    instance: QuantInstance,
    marriage: Marriage,
    notion: str,
    alpha: int | None = None,
) -> BlockingReport:
    """Scan all man/woman pairs for violations of the chosen notion.

    classical: both strictly prefer each other to their current partners.
    alpha: both prefer each other by a score margin of at least alpha.
    link-add / link-max: the pair's combined strength (sum, resp. max, of
    the two scores) exceeds the strength of both current pairings.

    Witness values record the numbers certifying each violation. Pairs are
    reported in ascending (man, woman) order.
    """
    _check_notion(notion, alpha)
    men = instance.men_scores
    women = instance.women_scores
    match = marriage.partner_of_man
    inverse = marriage.inverse()
    found: list[BlockingPair] = []

    for m in range(instance.n):
        w_cur = match[m]
        for w in range(instance.n):
            if w == w_cur:
                continue
            m_cur = inverse[w]
            if notion == "classical":
                if men[m][w] > men[m][w_cur] and women[w][m] > women[w][m_cur]:
                    found.append(BlockingPair(m, w, {
                        "man_score_new": men[m][w],
                        "man_score_current": men[m][w_cur],
                        "woman_score_new": women[w][m],
                        "woman_score_current": women[w][m_cur],
                    }))
            elif notion == "alpha":
                man_gain = men[m][w] - men[m][w_cur]
                woman_gain = women[w][m] - women[w][m_cur]
                if man_gain >= alpha and woman_gain >= alpha:
                    found.append(BlockingPair(m, w, {
                        "man_score_new": men[m][w],
                        "man_score_current": men[m][w_cur],
                        "woman_score_new": women[w][m],
                        "woman_score_current": women[w][m_cur],
                        "man_gain": man_gain,
                        "woman_gain": woman_gain,
                    }))
            else:
                if notion == "link-add":
                    new = men[m][w] + women[w][m]
                    man_cur = men[m][w_cur] + women[w_cur][m]
                    woman_cur = men[m_cur][w] + women[w][m_cur]
                else:
                    new = max(men[m][w], women[w][m])
                    man_cur = max(men[m][w_cur], women[w_cur][m])
                    woman_cur = max(men[m_cur][w], women[w][m_cur])
                if new > man_cur and new > woman_cur:
                    found.append(BlockingPair(m, w, {
                        "link_new": new,
                        "link_man_current": man_cur,
                        "link_woman_current": woman_cur,
                    }))
    return BlockingReport(notion, alpha, tuple(found))


def is_stable(
    instance: QuantInstance,
    marriage: Marriage,
    notion: str,
    alpha: int | None = None,
) -> bool:
    """Early-exit stability check; same predicates as :func:`blocking_pairs`."""
    _check_notion(notion, alpha)
    men = instance.men_scores
    women = instance.women_scores
    match = marriage.partner_of_man
    inverse = marriage.inverse()
    n = instance.n

    if notion == "classical":
        for m in range(n):
            row = men[m]
            cur = row[match[m]]
            for w in range(n):
                if row[w] > cur and women[w][m] > women[w][inverse[w]]:
                    return False
        return True
    if notion == "alpha":
        for m in range(n):
            row = men[m]
            cur = row[match[m]] + alpha
            for w in range(n):
                if row[w] >= cur and women[w][m] - women[w][inverse[w]] >= alpha:
                    return False
        return True
    if notion == "link-add":
        for m in range(n):
            row = men[m]
            w_cur = match[m]
            man_cur = row[w_cur] + women[w_cur][m]
            for w in range(n):
                new = row[w] + women[w][m]
                if new > man_cur:
                    m_cur = inverse[w]
                    if new > men[m_cur][w] + women[w][m_cur]:
                        return False
        return True
    for m in range(n):
        row = men[m]
        w_cur = match[m]
        man_cur = max(row[w_cur], women[w_cur][m])
        for w in range(n):
            new = max(row[w], women[w][m])
            if new > man_cur:
                m_cur = inverse[w]
                if new > max(men[m_cur][w], women[w][m_cur]):
                    return False
    return True


def dominates(instance: QuantInstance, first: Marriage, second: Marriage) -> bool:
    """True iff every man weakly prefers his partner in `first` over his
    partner in `second` (by his own scores) and at least one strictly does.
    Irreflexive: a marriage never dominates itself.
    """
    strict = False
    for m, row in enumerate(instance.men_scores):
        a = row[first.partner_of_man[m]]
        b = row[second.partner_of_man[m]]
        if a < b:
            return False
        if a > b:
            strict = True
    return strict


def lex_key(marriage: Marriage, men_order, women_order) -> tuple[int, ...]:
    """Sort key for the popularity-lexicographic marriage order: the
    women_order rank of each man's partner, men scanned in men_order.
    Smaller keys are better (rank 0 is the most popular woman)."""
    rank = {w: r for r, w in enumerate(women_order)}
    return tuple(rank[marriage.partner_of_man[m]] for m in men_order)


def lex_compare(first: Marriage, second: Marriage, men_order, women_order) -> str:
    """Compare two marriages lexicographically: scan men in men_order, and at
    the first man whose partners differ prefer the marriage giving him the
    women_order-preferred partner.

    Returns "first", "second", or "equal" (equal only for identical
    marriages, so this is a strict total order on distinct marriages).
    """
    a = lex_key(first, men_order, women_order)
    b = lex_key(second, men_order, women_order)
    if a < b:
        return "first"
    if a > b:
        return "second"
    return "equal"
