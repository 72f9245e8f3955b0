// Wire types for the recommendation API.

export const ATTRIBUTES = [
  "nature",
  "architecture",
  "hiking",
  "winter_sports",
  "beach",
  "culture",
  "culinary",
  "entertainment",
  "shopping",
] as const;

export type AttributeId = (typeof ATTRIBUTES)[number];
export type BudgetLevel = "low" | "medium" | "high";
export type ScoreBand = "Excellent" | "Good" | "Fair" | "Uncertain" | "Poor";
export type AttributeMap = Record<AttributeId, number>;

export interface PreferencesDoc {
  budgetLevel: BudgetLevel;
  days: number;
  filterOverBudget: boolean;
  weights: AttributeMap;
}

export interface ScoreRow {
  regionId: string;
  score: number;
  band: ScoreBand;
  budgetFulfilled: boolean;
  filteredOut: boolean;
  estimatedCost: number;
}

export interface TopEntry {
  rank: number;
  regionId: string;
  name: string;
  score: number;
  band: ScoreBand;
  explanation: AttributeMap;
  attributeMatches: AttributeMap;
  regionScores: AttributeMap;
  benchmarks: AttributeMap;
}

export interface RecommendResponse {
  scores: ScoreRow[];
  topK: TopEntry[];
}

export interface RegionInfo {
  id: string;
  name: string;
  countries: string[];
  costPerDay: number;
  scores: AttributeMap;
}

export interface RegionsPayload {
  currency: string;
  budgets: Record<BudgetLevel, number>;
  attributes: AttributeId[];
  regions: RegionInfo[];
}

export interface RegionFeature {
  type: "Feature";
  properties: { region_id: string; anchor?: [number, number]; [key: string]: unknown };
  geometry:
    | { type: "Polygon"; coordinates: number[][][] }
    | { type: "MultiPolygon"; coordinates: number[][][][] };
}

export interface RegionCollection {
  type: "FeatureCollection";
  features: RegionFeature[];
}
