import type { AttributeId, ScoreBand } from "./types";

export const BAND_ORDER: ScoreBand[] = ["Excellent", "Good", "Fair", "Uncertain", "Poor"];

export const BAND_COLORS: Record<ScoreBand, string> = {
  Excellent: "#1a9850",
  Good: "#91cf60",
  Fair: "#fee08b",
  Uncertain: "#fc8d59",
  Poor: "#d73027",
};

export function bandColor(band: ScoreBand): string {
  return BAND_COLORS[band];
}

// One fixed color per attribute; the sliders, pie slices and bar charts all
// key off this single palette.
export const ATTRIBUTE_COLORS: Record<AttributeId, string> = {
  nature: "#4daf4a",
  architecture: "#377eb8",
  hiking: "#a65628",
  winter_sports: "#74c7e8",
  beach: "#f2c94c",
  culture: "#984ea3",
  culinary: "#ff7f00",
  entertainment: "#e5488f",
  shopping: "#17a2a6",
};

export function attributeLabel(attr: AttributeId): string {
  return attr.replace("_", " ");
}
