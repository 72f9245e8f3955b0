import { vi } from "vitest";

import { App } from "../src/app";
import type { RecommendResponse, RegionCollection, RegionsPayload } from "../src/types";

import geometryFixture from "./fixtures/geometry.json";
import neutralFixture from "./fixtures/recommend-neutral.json";
import ws0Fixture from "./fixtures/recommend-ws0.json";
import ws100Fixture from "./fixtures/recommend-ws100.json";
import regionsFixture from "./fixtures/regions-payload.json";

export const regionsPayload = regionsFixture as unknown as RegionsPayload;
export const geometry = geometryFixture as unknown as RegionCollection;
export const neutralResponse = neutralFixture as unknown as RecommendResponse;
export const ws0Response = ws0Fixture as unknown as RecommendResponse;
export const ws100Response = ws100Fixture as unknown as RecommendResponse;

export interface FetchCounts {
  regions: number;
  geometry: number;
  recommend: number;
}

function jsonResponse(payload: unknown) {
  return {
    ok: true,
    status: 200,
    json: async () => payload,
  } as Response;
}

/**
 * Fetch stub serving payloads produced by the real engine. Recommendation
 * bodies are routed on the winter-sports weight: 0 and 100 return the two
 * flip captures, anything else the neutral capture.
 */
export function installFetchMock(): FetchCounts {
  const counts: FetchCounts = { regions: 0, geometry: 0, recommend: 0 };
  vi.stubGlobal("fetch", async (input: unknown, init?: { body?: unknown }) => {
    const url = String(input);
    if (url.endsWith("/api/v1/regions")) {
      counts.regions += 1;
      return jsonResponse(regionsPayload);
    }
    if (url.endsWith("/api/v1/geometry")) {
      counts.geometry += 1;
      return jsonResponse(geometry);
    }
    if (url.endsWith("/api/v1/recommend")) {
      counts.recommend += 1;
      const body = JSON.parse(String(init?.body ?? "{}"));
      const ws = body?.weights?.winter_sports;
      const payload = ws === 0 ? ws0Response : ws === 100 ? ws100Response : neutralResponse;
      return jsonResponse(payload);
    }
    throw new Error(`unexpected fetch: ${url}`);
  });
  return counts;
}

export async function bootApp(): Promise<{ app: App; counts: FetchCounts }> {
  const counts = installFetchMock();
  document.body.innerHTML = '<div id="app"></div>';
  const app = await App.boot(document.getElementById("app")!);
  await vi.waitFor(() => {
    if (!app.latestResponse()) throw new Error("initial response not applied yet");
  });
  return { app, counts };
}
