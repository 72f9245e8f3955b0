"""Travel-region data model: dataset parsing, geometry parsing, atlas linking.

Validation is strict and total: a bad document is rejected with every
violation found, never silently repaired.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

# Canonical attribute order; serialization and display follow it everywhere.
ATTRIBUTES: tuple[str, ...] = (
    "nature",
    "architecture",
    "hiking",
    "winter_sports",
    "beach",
    "culture",
    "culinary",
    "entertainment",
    "shopping",
)

BUDGET_LEVELS: tuple[str, ...] = ("low", "medium", "high")

_ID_RE = re.compile(r"^[a-z0-9_-]+$")
_COUNTRY_RE = re.compile(r"^[A-Z]{2}$")

_REGION_KEYS = {"id", "name", "countries", "costPerDay", "scores"}
_DATASET_KEYS = {"schemaVersion", "currency", "budgets", "regions"}


class MalformedDocument(Exception):
    """Input bytes are not a parseable document of the expected shape."""


class SchemaViolation(Exception):
    """Document parsed but breaks the schema; carries every violation found."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class MissingRegionTag(SchemaViolation):
    """A geometry feature carries no region id tag."""


class DuplicateRegionTag(SchemaViolation):
    """Two geometry features claim the same region id."""


class IdMismatch(Exception):
    """Dataset and geometry disagree on the set of region ids."""

    def __init__(self, missing_from_geometry: list[str], missing_from_dataset: list[str]):
        self.missing_from_geometry = sorted(missing_from_geometry)
        self.missing_from_dataset = sorted(missing_from_dataset)
        parts = []
        if self.missing_from_geometry:
            parts.append("missing from geometry: " + ", ".join(self.missing_from_geometry))
        if self.missing_from_dataset:
            parts.append("missing from dataset: " + ", ".join(self.missing_from_dataset))
        super().__init__("; ".join(parts))


@dataclass(frozen=True)
class RegionRecord:
    """One travel region: identity, members, attribute scores, daily cost."""

    id: str
    name: str
    countries: tuple[str, ...]
    cost_per_day: float
    scores: dict[str, int]


@dataclass(frozen=True)
class BudgetTable:
    """Total trip budget per level, strictly ascending low < medium < high."""

    low: float
    medium: float
    high: float

    def __getitem__(self, level: str) -> float:
        if level not in BUDGET_LEVELS:
            raise KeyError(level)
        return getattr(self, level)


@dataclass(frozen=True)
class RegionDataset:
    schema_version: int
    currency: str
    budgets: BudgetTable
    regions: tuple[RegionRecord, ...]

    def ids(self) -> frozenset[str]:
        return frozenset(r.id for r in self.regions)

    def region(self, region_id: str) -> RegionRecord:
        for r in self.regions:
            if r.id == region_id:
                return r
        raise KeyError(region_id)


@dataclass(frozen=True)
class GeometryFeature:
    region_id: str
    geometry: dict
    anchor: tuple[float, float] | None
    properties: dict

    def label_anchor(self) -> tuple[float, float]:
        """Anchor point for rank labels; bounding-box center when unset."""
        if self.anchor is not None:
            return self.anchor
        lons, lats = [], []
        for ring in _iter_rings(self.geometry):
            for lon, lat in ring:
                lons.append(lon)
                lats.append(lat)
        return ((min(lons) + max(lons)) / 2, (min(lats) + max(lats)) / 2)


@dataclass(frozen=True)
class GeometrySet:
    features: tuple[GeometryFeature, ...]

    def ids(self) -> frozenset[str]:
        return frozenset(f.region_id for f in self.features)


@dataclass(frozen=True)
class LinkedAtlas:
    """Validated pairing of a region dataset with its geometry.

    Immutable; safe to share across concurrent readers.
    """

    dataset: RegionDataset
    geometry: GeometrySet


def _iter_rings(geometry: dict):
    if geometry["type"] == "Polygon":
        yield from geometry["coordinates"]
    else:  # MultiPolygon
        for polygon in geometry["coordinates"]:
            yield from polygon


def _load_json(data: bytes) -> dict:
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedDocument("top-level value must be an object")
    return doc


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def parse_region_dataset(data: bytes) -> RegionDataset:
    """Parse and validate a region-dataset document.

    Raises MalformedDocument if the bytes are not a JSON object, and
    SchemaViolation carrying the full violation list otherwise; messages
    name the offending region id and field.
    """
    doc = _load_json(data)
    violations: list[str] = []

    for key in doc:
        if key not in _DATASET_KEYS:
            violations.append(f"unknown field: {key}")
    if doc.get("schemaVersion") != 1:
        violations.append("schemaVersion: must be 1")
    if not isinstance(doc.get("currency"), str) or not doc.get("currency"):
        violations.append("currency: must be a non-empty string")

    budgets = _validate_budgets(doc.get("budgets"), violations)

    regions: list[RegionRecord] = []
    raw_regions = doc.get("regions")
    if not isinstance(raw_regions, list) or not raw_regions:
        violations.append("regions: must be a non-empty list")
    else:
        for raw in raw_regions:
            record = _validate_region(raw, violations)
            if record is not None:
                regions.append(record)
        counts: dict[str, int] = {}
        for record in regions:
            counts[record.id] = counts.get(record.id, 0) + 1
        for region_id in sorted(rid for rid, n in counts.items() if n > 1):
            violations.append(f"{region_id}: duplicate region id")

    if violations:
        raise SchemaViolation(violations)
    assert budgets is not None
    return RegionDataset(
        schema_version=1,
        currency=doc["currency"],
        budgets=budgets,
        regions=tuple(regions),
    )


def _validate_budgets(raw, violations: list[str]) -> BudgetTable | None:
    if not isinstance(raw, dict):
        violations.append("budgets: must be an object with low/medium/high")
        return None
    ok = True
    for level in BUDGET_LEVELS:
        if not _is_number(raw.get(level)) or raw.get(level) <= 0:
            violations.append(f"budgets.{level}: must be a positive number")
            ok = False
    for key in raw:
        if key not in BUDGET_LEVELS:
            violations.append(f"budgets.{key}: unknown budget level")
            ok = False
    if not ok:
        return None
    if not (raw["low"] < raw["medium"] < raw["high"]):
        violations.append("budgets: must be strictly ascending (low < medium < high)")
        return None
    return BudgetTable(low=raw["low"], medium=raw["medium"], high=raw["high"])


def _region_label(raw: dict) -> str:
    region_id = raw.get("id")
    if isinstance(region_id, str) and region_id:
        return region_id
    name = raw.get("name")
    if isinstance(name, str) and name:
        return f"region named {name!r}"
    return "<unidentified region>"


def _validate_region(raw, violations: list[str]) -> RegionRecord | None:
    if not isinstance(raw, dict):
        violations.append("regions: entries must be objects")
        return None
    label = _region_label(raw)
    before = len(violations)

    for key in raw:
        if key not in _REGION_KEYS:
            violations.append(f"{label}: unknown field: {key}")

    region_id = raw.get("id")
    if not isinstance(region_id, str) or not _ID_RE.fullmatch(region_id or ""):
        violations.append(f"{label}: id: must match [a-z0-9_-]+")

    name = raw.get("name")
    if not isinstance(name, str) or not name:
        violations.append(f"{label}: name: must be a non-empty string")

    countries = raw.get("countries")
    if (
        not isinstance(countries, list)
        or not countries
        or not all(isinstance(c, str) and _COUNTRY_RE.fullmatch(c) for c in countries)
    ):
        violations.append(f"{label}: countries: must be one or more ISO-3166 alpha-2 codes")

    cost = raw.get("costPerDay")
    if not _is_number(cost) or cost <= 0:
        violations.append(f"{label}: costPerDay: must be a positive number")

    scores = raw.get("scores")
    if not isinstance(scores, dict):
        violations.append(f"{label}: scores: must map all nine attributes to 0-100 integers")
    else:
        for attr in ATTRIBUTES:
            value = scores.get(attr)
            if attr not in scores:
                violations.append(f"{label}: scores.{attr}: required")
            elif not isinstance(value, int) or isinstance(value, bool) or not 0 <= value <= 100:
                violations.append(f"{label}: scores.{attr}: must be an integer in [0, 100]")
        for attr in scores:
            if attr not in ATTRIBUTES:
                violations.append(f"{label}: scores.{attr}: unknown attribute")

    if len(violations) > before:
        return None
    return RegionRecord(
        id=region_id,
        name=name,
        countries=tuple(countries),
        cost_per_day=cost,
        scores={attr: scores[attr] for attr in ATTRIBUTES},
    )


def serialize_region_dataset(dataset: RegionDataset) -> bytes:
    """Serialize a dataset to the canonical document form (round-trip safe)."""
    doc = {
        "schemaVersion": dataset.schema_version,
        "currency": dataset.currency,
        "budgets": {level: dataset.budgets[level] for level in BUDGET_LEVELS},
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
    return json.dumps(doc, ensure_ascii=False, indent=2).encode("utf-8")


def parse_geometry(data: bytes) -> GeometrySet:
    """Parse a geographic feature collection tagged with region ids.

    Every feature needs properties.region_id; violations of all kinds are
    collected, and the raised class reflects the most specific problem
    (MissingRegionTag, then DuplicateRegionTag, then SchemaViolation).
    """
    doc = _load_json(data)
    if doc.get("type") != "FeatureCollection" or not isinstance(doc.get("features"), list):
        raise MalformedDocument("expected a FeatureCollection with a features list")

    violations: list[str] = []
    missing_tag = False
    duplicate_tag = False
    features: list[GeometryFeature] = []
    seen: dict[str, int] = {}

    for index, raw in enumerate(doc["features"]):
        where = f"feature {index}"
        if not isinstance(raw, dict) or raw.get("type") != "Feature":
            violations.append(f"{where}: must be a Feature object")
            continue
        properties = raw.get("properties")
        if not isinstance(properties, dict):
            violations.append(f"{where}: properties: must be an object")
            continue
        region_id = properties.get("region_id")
        if not isinstance(region_id, str) or not region_id:
            violations.append(f"{where}: missing properties.region_id")
            missing_tag = True
            continue
        seen[region_id] = seen.get(region_id, 0) + 1

        geometry = raw.get("geometry")
        geometry_errors = _validate_geometry(geometry, f"{where} ({region_id})")
        violations.extend(geometry_errors)

        anchor = properties.get("anchor")
        parsed_anchor: tuple[float, float] | None = None
        if anchor is not None:
            if (
                isinstance(anchor, list)
                and len(anchor) == 2
                and all(_is_number(v) for v in anchor)
            ):
                parsed_anchor = (float(anchor[0]), float(anchor[1]))
            else:
                violations.append(f"{where} ({region_id}): anchor: must be [lon, lat]")

        if not geometry_errors:
            features.append(
                GeometryFeature(
                    region_id=region_id,
                    geometry=geometry,
                    anchor=parsed_anchor,
                    properties=dict(properties),
                )
            )

    for region_id in sorted(rid for rid, n in seen.items() if n > 1):
        violations.append(f"duplicate region tag: {region_id}")
        duplicate_tag = True

    if violations:
        if missing_tag:
            raise MissingRegionTag(violations)
        if duplicate_tag:
            raise DuplicateRegionTag(violations)
        raise SchemaViolation(violations)
    return GeometrySet(features=tuple(features))


def _validate_geometry(geometry, where: str) -> list[str]:
    if not isinstance(geometry, dict):
        return [f"{where}: geometry: must be a Polygon or MultiPolygon"]
    kind = geometry.get("type")
    coords = geometry.get("coordinates")
    if kind == "Polygon":
        polygons = [coords]
    elif kind == "MultiPolygon":
        polygons = coords if isinstance(coords, list) else []
    else:
        return [f"{where}: geometry: must be a Polygon or MultiPolygon"]

    errors: list[str] = []
    rings = 0
    if not isinstance(polygons, list) or not polygons:
        return [f"{where}: geometry: empty coordinates"]
    for polygon in polygons:
        if not isinstance(polygon, list) or not polygon:
            errors.append(f"{where}: geometry: empty polygon")
            continue
        for ring in polygon:
            rings += 1
            if not isinstance(ring, list) or len(ring) < 4:
                errors.append(f"{where}: geometry: ring needs at least 4 coordinate pairs")
                continue
            if not all(
                isinstance(pt, list) and len(pt) == 2 and all(_is_number(v) for v in pt)
                for pt in ring
            ):
                errors.append(f"{where}: geometry: coordinates must be [lon, lat] pairs")
                continue
            if ring[0] != ring[-1]:
                errors.append(f"{where}: geometry: ring must be closed (first == last)")
    if rings == 0 and not errors:
        errors.append(f"{where}: geometry: empty coordinates")
    return errors


def link_atlas(dataset: RegionDataset, geometry: GeometrySet) -> LinkedAtlas:
    """Pair a dataset with its geometry; region-id sets must match exactly."""
    dataset_ids = dataset.ids()
    geometry_ids = geometry.ids()
    if dataset_ids != geometry_ids:
        raise IdMismatch(
            missing_from_geometry=sorted(dataset_ids - geometry_ids),
            missing_from_dataset=sorted(geometry_ids - dataset_ids),
        )
    return LinkedAtlas(dataset=dataset, geometry=geometry)


def load_atlas(regions_path, geometry_path) -> LinkedAtlas:
    """Read, parse and link the two input files (convenience for CLI/service)."""
    with open(regions_path, "rb") as f:
        dataset = parse_region_dataset(f.read())
    with open(geometry_path, "rb") as f:
        geometry = parse_geometry(f.read())
    return link_atlas(dataset, geometry)
