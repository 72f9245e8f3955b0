"""Choropleth export: geometry augmented with scores, bands, ranks and colors.

Produces the same feature collection that was fed in, with scoring results
merged into each feature's properties, so the map panel's semantics can be
rendered (or checked) without a browser.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .regions import LinkedAtlas
from .schemas import round_half_up
from .scoring import BAND_COLORS, Preferences, recommend


def build_choropleth(
    atlas: LinkedAtlas, geometry_doc: dict, prefs: Preferences, k: int
) -> dict:
    """Return a copy of geometry_doc with score/band/color (and rank for the
    top k) added to each feature's properties; original properties are kept."""
    result = recommend(atlas, prefs, k)
    scored = {s.region_id: s for s in result.all}
    ranks = {entry.region_id: entry.rank for entry in result.top}

    features = []
    for feature in geometry_doc["features"]:
        region_id = feature["properties"]["region_id"]
        entry = scored[region_id]
        properties = dict(feature["properties"])
        properties["score"] = round_half_up(entry.score, 2)
        properties["band"] = entry.band.value
        properties["color"] = BAND_COLORS[entry.band]
        if region_id in ranks:
            properties["rank"] = ranks[region_id]
        features.append({**feature, "properties": properties})
    return {**geometry_doc, "features": features}


def write_choropleth(doc: dict, out_path: Path) -> None:
    """Serialize deterministically and write atomically (temp file + rename)."""
    payload = json.dumps(doc, ensure_ascii=False, indent=2) + "\n"
    out_path = Path(out_path)
    fd, tmp_name = tempfile.mkstemp(
        dir=out_path.parent, prefix=out_path.name + ".", suffix=".tmp"
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as tmp:
            tmp.write(payload)
        os.replace(tmp_name, out_path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise
