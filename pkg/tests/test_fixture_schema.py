"""Independent check of the bundled fixtures.

Validates the shipped dataset and geometry against declarative JSON
Schemas via the jsonschema package, on purpose not reusing any of the
package's own parsing code.
"""

import json

import jsonschema

ATTRS = [
    "nature",
    "architecture",
    "hiking",
    "winter_sports",
    "beach",
    "culture",
    "culinary",
    "entertainment",
    "shopping",
]

SCORE = {"type": "integer", "minimum": 0, "maximum": 100}

DATASET_SCHEMA = {
    "type": "object",
    "required": ["schemaVersion", "currency", "budgets", "regions"],
    "additionalProperties": False,
    "properties": {
        "schemaVersion": {"const": 1},
        "currency": {"type": "string", "minLength": 1},
        "budgets": {
            "type": "object",
            "required": ["low", "medium", "high"],
            "additionalProperties": False,
            "properties": {
                "low": {"type": "number", "exclusiveMinimum": 0},
                "medium": {"type": "number", "exclusiveMinimum": 0},
                "high": {"type": "number", "exclusiveMinimum": 0},
            },
        },
        "regions": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["id", "name", "countries", "costPerDay", "scores"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string", "pattern": "^[a-z0-9_-]+$"},
                    "name": {"type": "string", "minLength": 1},
                    "countries": {
                        "type": "array",
                        "minItems": 1,
                        "items": {"type": "string", "pattern": "^[A-Z]{2}$"},
                    },
                    "costPerDay": {"type": "number", "exclusiveMinimum": 0},
                    "scores": {
                        "type": "object",
                        "required": ATTRS,
                        "additionalProperties": False,
                        "properties": {attr: SCORE for attr in ATTRS},
                    },
                },
            },
        },
    },
}

GEOMETRY_SCHEMA = {
    "type": "object",
    "required": ["type", "features"],
    "properties": {
        "type": {"const": "FeatureCollection"},
        "features": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["type", "properties", "geometry"],
                "properties": {
                    "type": {"const": "Feature"},
                    "properties": {
                        "type": "object",
                        "required": ["region_id"],
                        "properties": {
                            "region_id": {"type": "string", "minLength": 1},
                            "anchor": {
                                "type": "array",
                                "minItems": 2,
                                "maxItems": 2,
                                "items": {"type": "number"},
                            },
                        },
                    },
                    "geometry": {
                        "type": "object",
                        "required": ["type", "coordinates"],
                        "properties": {
                            "type": {"enum": ["Polygon", "MultiPolygon"]},
                        },
                    },
                },
            },
        },
    },
}


def closed_rings(geometry):
    polygons = (
        [geometry["coordinates"]]
        if geometry["type"] == "Polygon"
        else geometry["coordinates"]
    )
    for polygon in polygons:
        for ring in polygon:
            yield ring


def test_dataset_fixture_matches_schema(regions_path):
    doc = json.loads(regions_path.read_text())
    jsonschema.validate(doc, DATASET_SCHEMA)
    ids = [r["id"] for r in doc["regions"]]
    assert len(ids) == 30
    assert len(set(ids)) == 30
    assert doc["budgets"]["low"] < doc["budgets"]["medium"] < doc["budgets"]["high"]


def test_geometry_fixture_matches_schema(regions_path, geometry_path):
    doc = json.loads(geometry_path.read_text())
    jsonschema.validate(doc, GEOMETRY_SCHEMA)
    tags = [f["properties"]["region_id"] for f in doc["features"]]
    assert len(tags) == len(set(tags))
    dataset_ids = {r["id"] for r in json.loads(regions_path.read_text())["regions"]}
    assert set(tags) == dataset_ids
    for feature in doc["features"]:
        for ring in closed_rings(feature["geometry"]):
            assert len(ring) >= 4
            assert ring[0] == ring[-1]
            for lon, lat in ring:
                assert -180 <= lon <= 180 and -90 <= lat <= 90


def test_flip_preference_fixtures_differ_only_in_winter_sports(data_dir):
    low = json.loads((data_dir / "prefs-winter-low.json").read_text())
    high = json.loads((data_dir / "prefs-winter-high.json").read_text())
    assert low["weights"]["winter_sports"] == 0
    assert high["weights"]["winter_sports"] == 100
    low["weights"].pop("winter_sports")
    high["weights"].pop("winter_sports")
    assert low == high
