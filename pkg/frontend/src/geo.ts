import type { RegionFeature } from "./types";

// Plain equirectangular projection onto a fixed SVG canvas; no tile service.
export const MAP_WIDTH = 720;
export const MAP_HEIGHT = 360;

export function project(lon: number, lat: number): [number, number] {
  return [(lon + 180) * 2, (90 - lat) * 2];
}

export function outerRings(feature: RegionFeature): number[][][] {
  const geometry = feature.geometry;
  if (geometry.type === "Polygon") return geometry.coordinates;
  return geometry.coordinates.flat();
}

export function svgPath(feature: RegionFeature): string {
  return outerRings(feature)
    .map((ring) => {
      const points = ring.map(([lon, lat]) => {
        const [x, y] = project(lon, lat);
        return `${x},${y}`;
      });
      return `M${points.join(" L")} Z`;
    })
    .join(" ");
}

/** Label point for rank badges: the tagged anchor, else the bbox center. */
export function labelAnchor(feature: RegionFeature): [number, number] {
  const anchor = feature.properties.anchor;
  if (anchor) return [anchor[0], anchor[1]];
  let minLon = Infinity;
  let maxLon = -Infinity;
  let minLat = Infinity;
  let maxLat = -Infinity;
  for (const ring of outerRings(feature)) {
    for (const [lon, lat] of ring) {
      minLon = Math.min(minLon, lon);
      maxLon = Math.max(maxLon, lon);
      minLat = Math.min(minLat, lat);
      maxLat = Math.max(maxLat, lat);
    }
  }
  return [(minLon + maxLon) / 2, (minLat + maxLat) / 2];
}
