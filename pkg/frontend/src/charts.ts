import { ATTRIBUTE_COLORS, attributeLabel } from "./palette";
import { ATTRIBUTES } from "./types";
import type { AttributeMap, TopEntry } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";

/**
 * Explanation pie: one slice per attribute share, colored with the same
 * palette as the sliders. Every displayed number comes straight from the
 * response payload.
 */
export function pieChart(shares: AttributeMap, size = 140): SVGSVGElement {
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("class", "explanation-pie");
  svg.setAttribute("viewBox", `0 0 ${size} ${size}`);
  const c = size / 2;
  const r = c - 2;
  const total = ATTRIBUTES.reduce((sum, attr) => sum + shares[attr], 0) || 1;

  let angle = -Math.PI / 2;
  for (const attr of ATTRIBUTES) {
    const fraction = shares[attr] / total;
    if (fraction <= 0) continue;

    const slice = document.createElementNS(SVG_NS, "path");
    slice.setAttribute("class", "pie-slice");
    slice.dataset.attr = attr;
    slice.dataset.share = String(shares[attr]);
    slice.setAttribute("fill", ATTRIBUTE_COLORS[attr]);

    if (fraction >= 0.999999) {
      slice.setAttribute(
        "d",
        `M${c - r},${c} A${r},${r} 0 1 1 ${c + r},${c} A${r},${r} 0 1 1 ${c - r},${c} Z`,
      );
    } else {
      const end = angle + fraction * 2 * Math.PI;
      const x1 = c + r * Math.cos(angle);
      const y1 = c + r * Math.sin(angle);
      const x2 = c + r * Math.cos(end);
      const y2 = c + r * Math.sin(end);
      const large = fraction > 0.5 ? 1 : 0;
      slice.setAttribute("d", `M${c},${c} L${x1},${y1} A${r},${r} 0 ${large} 1 ${x2},${y2} Z`);
      angle = end;
    }

    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `${attributeLabel(attr)}: ${(shares[attr] * 100).toFixed(1)}% of this recommendation`;
    slice.append(title);
    svg.append(slice);
  }
  return svg;
}

/**
 * Nine bar charts, one per attribute: the bar is the region's attribute
 * value, the black benchmark line sits at the user's slider weight.
 */
export function barCharts(entry: TopEntry): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "bar-charts";
  for (const attr of ATTRIBUTES) {
    const value = entry.regionScores[attr];
    const benchmark = entry.benchmarks[attr];
    const match = entry.attributeMatches[attr];

    const row = document.createElement("div");
    row.className = "bar-row";
    row.title =
      `${attributeLabel(attr)}: region ${value}/100, your preference ${benchmark}/100, ` +
      `match ${match}/100`;

    const name = document.createElement("span");
    name.className = "bar-name";
    name.textContent = attributeLabel(attr);

    const track = document.createElement("span");
    track.className = "bar-track";

    const fill = document.createElement("span");
    fill.className = "bar-fill";
    fill.dataset.attr = attr;
    fill.dataset.value = String(value);
    fill.style.width = `${value}%`;
    fill.style.background = ATTRIBUTE_COLORS[attr];

    const mark = document.createElement("span");
    mark.className = "benchmark-line";
    mark.dataset.benchmark = String(benchmark);
    mark.style.left = `${benchmark}%`;

    track.append(fill, mark);

    const number = document.createElement("span");
    number.className = "bar-value";
    number.textContent = String(value);

    row.append(name, track, number);
    wrap.append(row);
  }
  return wrap;
}
