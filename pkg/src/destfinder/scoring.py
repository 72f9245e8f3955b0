"""Recommendation mathematics: attribute matching, budgets, bands, ranking.

Every operation here is a pure function over immutable inputs; the engine
is safe for unlimited concurrent use against a shared atlas.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .regions import ATTRIBUTES, BudgetTable, LinkedAtlas, RegionRecord


class ScoreBand(str, Enum):
    EXCELLENT = "Excellent"
    GOOD = "Good"
    FAIR = "Fair"
    UNCERTAIN = "Uncertain"
    POOR = "Poor"


# Band cut-points, highest first; anything below the last cut is Poor.
BAND_THRESHOLDS: tuple[tuple[float, ScoreBand], ...] = (
    (85.0, ScoreBand.EXCELLENT),
    (70.0, ScoreBand.GOOD),
    (55.0, ScoreBand.FAIR),
    (40.0, ScoreBand.UNCERTAIN),
)

# Legend fill colors, one per band (diverging red-to-green scheme).
BAND_COLORS: dict[ScoreBand, str] = {
    ScoreBand.EXCELLENT: "#1a9850",
    ScoreBand.GOOD: "#91cf60",
    ScoreBand.FAIR: "#fee08b",
    ScoreBand.UNCERTAIN: "#fc8d59",
    ScoreBand.POOR: "#d73027",
}

DEFAULT_TOP_K = 10


class EmptyAtlas(Exception):
    """Atlas with zero regions: unreachable via link_atlas, corrupted state."""


@dataclass(frozen=True)
class Preferences:
    """User preference profile: budget level, trip days, nine 0-100 weights."""

    budget_level: str
    days: int
    filter_over_budget: bool
    weights: dict[str, int]


@dataclass(frozen=True)
class ScoredRegion:
    region_id: str
    score: float
    band: ScoreBand
    budget_fulfilled: bool
    estimated_cost: float
    attribute_matches: dict[str, float]
    filtered_out: bool


@dataclass(frozen=True)
class Explanation:
    """Per-attribute contribution shares; nonnegative, summing to 1."""

    shares: dict[str, float]


@dataclass(frozen=True)
class RankedRegion:
    rank: int
    region_id: str
    explanation: Explanation


@dataclass(frozen=True)
class RecommendationResult:
    all: tuple[ScoredRegion, ...]
    top: tuple[RankedRegion, ...]


def attribute_match(weight: float, region_score: float) -> float:
    """How well one attribute matches: 100 minus the absolute difference."""
    return 100 - abs(weight - region_score)


def estimate_trip_cost(region: RegionRecord, days: int) -> float:
    return region.cost_per_day * days


def budget_fulfilled(region: RegionRecord, prefs: Preferences, budgets: BudgetTable) -> bool:
    """Whether the estimated trip cost stays within the selected budget.

    A cost exactly equal to the budget counts as fulfilled.
    """
    return estimate_trip_cost(region, prefs.days) <= budgets[prefs.budget_level]


def band_of(score: float) -> ScoreBand:
    for cut, band in BAND_THRESHOLDS:
        if score >= cut:
            return band
    return ScoreBand.POOR


def score_region(region: RegionRecord, prefs: Preferences, budgets: BudgetTable) -> ScoredRegion:
    """Score one region against the preferences.

    The score is 100 minus the average weight/score difference. A fulfilled
    budget joins the average as a tenth term with difference zero; an
    unfulfilled budget is excluded from the average unless the over-budget
    filter is on, which forces the score to 0.
    """
    weights = prefs.weights
    diffs = [abs(weights[attr] - region.scores[attr]) for attr in ATTRIBUTES]
    total_diff = sum(diffs)
    fulfilled = budget_fulfilled(region, prefs, budgets)

    filtered_out = False
    if fulfilled:
        score = 100 - total_diff / 10
    elif not prefs.filter_over_budget:
        score = 100 - total_diff / 9
    else:
        score = 0.0
        filtered_out = True

    return ScoredRegion(
        region_id=region.id,
        score=score,
        band=band_of(score),
        budget_fulfilled=fulfilled,
        estimated_cost=estimate_trip_cost(region, prefs.days),
        attribute_matches={attr: 100 - d for attr, d in zip(ATTRIBUTES, diffs)},
        filtered_out=filtered_out,
    )


def explain(region: RegionRecord, prefs: Preferences) -> Explanation:
    """Per-attribute contribution shares for the explanation pie.

    A contribution is the user's weight times the attribute match, normalized
    over the nine attributes; all-zero contributions fall back to uniform
    shares. Budget never appears here, only the nine activity attributes.
    """
    raw = {
        attr: prefs.weights[attr] * attribute_match(prefs.weights[attr], region.scores[attr])
        for attr in ATTRIBUTES
    }
    total = sum(raw.values())
    if total == 0:
        return Explanation(shares={attr: 1 / 9 for attr in ATTRIBUTES})
    return Explanation(shares={attr: value / total for attr, value in raw.items()})


def recommend(atlas: LinkedAtlas, prefs: Preferences, k: int = DEFAULT_TOP_K) -> RecommendationResult:
    """Score every region and rank the top k.

    The all-regions list follows dataset order; the top list is sorted by
    score descending with ties broken by region id ascending, so equal
    inputs always produce identical output.
    """
    regions = atlas.dataset.regions
    if not regions:
        raise EmptyAtlas("atlas contains no regions")

    scored = tuple(score_region(region, prefs, atlas.dataset.budgets) for region in regions)
    ordered = sorted(scored, key=lambda s: (-s.score, s.region_id))

    top = tuple(
        RankedRegion(
            rank=rank,
            region_id=entry.region_id,
            explanation=explain(atlas.dataset.region(entry.region_id), prefs),
        )
        for rank, entry in enumerate(ordered[: max(0, k)], start=1)
    )
    return RecommendationResult(all=scored, top=top)
