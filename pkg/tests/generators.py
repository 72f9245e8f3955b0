"""Seeded random builders for datasets, geometry and preferences.

Used by the oracle-equivalence and parity suites; everything is driven by
an explicit random.Random so runs are reproducible.
"""

import json

from oracle import ATTRS

BUDGET_LEVELS = ["low", "medium", "high"]


def random_dataset_doc(rng, max_regions=30):
    n = rng.randint(1, max_regions)
    low = rng.randint(100, 1000)
    medium = low + rng.randint(1, 1500)
    high = medium + rng.randint(1, 3000)
    regions = []
    for i in range(n):
        regions.append(
            {
                "id": f"r{i:02d}",
                "name": f"Region {i:02d}",
                "countries": ["AA"],
                "costPerDay": rng.randint(10, 300),
                "scores": {attr: rng.randint(0, 100) for attr in ATTRS},
            }
        )
    return {
        "schemaVersion": 1,
        "currency": "EUR",
        "budgets": {"low": low, "medium": medium, "high": high},
        "regions": regions,
    }


def geometry_doc_for(region_ids):
    """Unit squares spread along the equator, one per region id."""
    features = []
    for i, region_id in enumerate(region_ids):
        x = float(i * 2)
        ring = [[x, 0.0], [x + 1.0, 0.0], [x + 1.0, 1.0], [x, 1.0], [x, 0.0]]
        features.append(
            {
                "type": "Feature",
                "properties": {"region_id": region_id},
                "geometry": {"type": "Polygon", "coordinates": [ring]},
            }
        )
    return {"type": "FeatureCollection", "features": features}


def random_prefs_doc(rng):
    return {
        "budgetLevel": rng.choice(BUDGET_LEVELS),
        "days": rng.randint(1, 21),
        "filterOverBudget": rng.random() < 0.5,
        "weights": {attr: rng.randint(0, 100) for attr in ATTRS},
    }


def dataset_bytes(doc):
    return json.dumps(doc).encode("utf-8")
