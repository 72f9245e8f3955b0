"""Boundary models: request/response schemas shared by the service and CLI.

Engine results are held as plain floats internally; scores are rounded
half-up to 2 decimals (explanation shares to 4) only here, at the edge.
"""

from __future__ import annotations

import json
from decimal import ROUND_HALF_UP, Decimal
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .regions import ATTRIBUTES, BUDGET_LEVELS, LinkedAtlas, MalformedDocument, RegionDataset
from .scoring import Preferences, recommend


def round_half_up(value: float, places: int) -> float:
    quantum = Decimal(1).scaleb(-places)
    return float(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))


class WeightsBody(BaseModel):
    """The nine attribute weights; all required, each an integer in [0, 100]."""

    model_config = ConfigDict(extra="forbid", strict=True)

    nature: int = Field(ge=0, le=100)
    architecture: int = Field(ge=0, le=100)
    hiking: int = Field(ge=0, le=100)
    winter_sports: int = Field(ge=0, le=100)
    beach: int = Field(ge=0, le=100)
    culture: int = Field(ge=0, le=100)
    culinary: int = Field(ge=0, le=100)
    entertainment: int = Field(ge=0, le=100)
    shopping: int = Field(ge=0, le=100)


class PreferencesBody(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)

    budgetLevel: Literal["low", "medium", "high"]
    days: int = Field(ge=1)
    filterOverBudget: bool
    weights: WeightsBody

    def to_domain(self) -> Preferences:
        return Preferences(
            budget_level=self.budgetLevel,
            days=self.days,
            filter_over_budget=self.filterOverBudget,
            weights={attr: getattr(self.weights, attr) for attr in ATTRIBUTES},
        )


class ScoreRow(BaseModel):
    regionId: str
    score: float
    band: str
    budgetFulfilled: bool
    filteredOut: bool
    estimatedCost: float


class TopEntry(BaseModel):
    rank: int
    regionId: str
    name: str
    score: float
    band: str
    explanation: dict[str, float]
    attributeMatches: dict[str, float]
    regionScores: dict[str, int]
    benchmarks: dict[str, int]


class RecommendResponse(BaseModel):
    scores: list[ScoreRow]
    topK: list[TopEntry]


class InvalidPreferences(Exception):
    """Preferences document rejected; carries the full violation list."""

    def __init__(self, violations: list[dict]):
        self.violations = violations
        super().__init__("; ".join(f"{v['field']}: {v['message']}" for v in violations))


def format_violations(errors: list[dict]) -> list[dict]:
    """Flatten pydantic error locs into dotted field paths ('weights.shopping')."""
    out = []
    for error in errors:
        loc = list(error["loc"])
        if loc and loc[0] == "body":
            loc = loc[1:]
        field = ".".join(str(part) for part in loc) or "body"
        out.append({"field": field, "message": error["msg"]})
    return out


def parse_preferences(data: bytes) -> Preferences:
    """Parse and validate a preferences document.

    Raises MalformedDocument for non-JSON input and InvalidPreferences with
    every violation otherwise.
    """
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from exc
    try:
        body = PreferencesBody.model_validate(doc)
    except ValidationError as exc:
        raise InvalidPreferences(format_violations(exc.errors())) from exc
    return body.to_domain()


def build_recommend_response(atlas: LinkedAtlas, prefs: Preferences, k: int) -> RecommendResponse:
    """Run the engine and serialize the result for the wire."""
    result = recommend(atlas, prefs, k)
    by_id = {s.region_id: s for s in result.all}

    scores = [
        ScoreRow(
            regionId=s.region_id,
            score=round_half_up(s.score, 2),
            band=s.band.value,
            budgetFulfilled=s.budget_fulfilled,
            filteredOut=s.filtered_out,
            estimatedCost=round_half_up(s.estimated_cost, 2),
        )
        for s in result.all
    ]

    top = []
    for entry in result.top:
        region = atlas.dataset.region(entry.region_id)
        scored = by_id[entry.region_id]
        top.append(
            TopEntry(
                rank=entry.rank,
                regionId=entry.region_id,
                name=region.name,
                score=round_half_up(scored.score, 2),
                band=scored.band.value,
                explanation={
                    attr: round_half_up(entry.explanation.shares[attr], 4)
                    for attr in ATTRIBUTES
                },
                attributeMatches={attr: scored.attribute_matches[attr] for attr in ATTRIBUTES},
                regionScores={attr: region.scores[attr] for attr in ATTRIBUTES},
                benchmarks={attr: prefs.weights[attr] for attr in ATTRIBUTES},
            )
        )
    return RecommendResponse(scores=scores, topK=top)


def build_regions_payload(dataset: RegionDataset) -> dict:
    """Region metadata for GET /api/v1/regions: everything but the geometry."""
    return {
        "currency": dataset.currency,
        "budgets": {level: dataset.budgets[level] for level in BUDGET_LEVELS},
        "attributes": list(ATTRIBUTES),
        "regions": [
            {
                "id": r.id,
                "name": r.name,
                "countries": list(r.countries),
                "costPerDay": r.cost_per_day,
                "scores": {attr: r.scores[attr] for attr in ATTRIBUTES},
            }
            for r in dataset.regions
        ],
    }
