"""Travel-region recommender: scoring engine, HTTP service and CLI."""

from .regions import (
    ATTRIBUTES,
    BUDGET_LEVELS,
    BudgetTable,
    DuplicateRegionTag,
    GeometryFeature,
    GeometrySet,
    IdMismatch,
    LinkedAtlas,
    MalformedDocument,
    MissingRegionTag,
    RegionDataset,
    RegionRecord,
    SchemaViolation,
    link_atlas,
    load_atlas,
    parse_geometry,
    parse_region_dataset,
    serialize_region_dataset,
)
from .scoring import (
    BAND_COLORS,
    BAND_THRESHOLDS,
    DEFAULT_TOP_K,
    EmptyAtlas,
    Explanation,
    Preferences,
    RecommendationResult,
    ScoreBand,
    ScoredRegion,
    attribute_match,
    band_of,
    budget_fulfilled,
    estimate_trip_cost,
    explain,
    recommend,
    score_region,
)

__version__ = "0.1.0"
