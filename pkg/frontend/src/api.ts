import type { PreferencesDoc, RecommendResponse, RegionCollection, RegionsPayload } from "./types";

// Same-origin by default; override at build time with VITE_API_BASE.
const base: string = import.meta.env?.VITE_API_BASE ?? "";

async function getJson<T>(path: string): Promise<T> {
  const response = await fetch(`${base}${path}`);
  if (!response.ok) throw new Error(`${path}: HTTP ${response.status}`);
  return (await response.json()) as T;
}

export function fetchRegions(): Promise<RegionsPayload> {
  return getJson<RegionsPayload>("/api/v1/regions");
}

export function fetchGeometry(): Promise<RegionCollection> {
  return getJson<RegionCollection>("/api/v1/geometry");
}

export async function postRecommend(prefs: PreferencesDoc): Promise<RecommendResponse> {
  const response = await fetch(`${base}/api/v1/recommend`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(prefs),
  });
  if (!response.ok) throw new Error(`recommend: HTTP ${response.status}`);
  return (await response.json()) as RecommendResponse;
}
