import { labelAnchor, MAP_HEIGHT, MAP_WIDTH, project, svgPath } from "./geo";
import { BAND_COLORS, BAND_ORDER, bandColor } from "./palette";
import type { RecommendResponse, RegionCollection, RegionFeature } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";
const UNSCORED_FILL = "#d8d8d8";

/**
 * The choropleth map panel: region fills encode the score band, the top
 * ranked regions carry numbered labels, a legend explains the bands.
 * The geometry is drawn directly onto an SVG over a plain background.
 */
export class MapView {
  readonly element: HTMLElement;
  private readonly svg: SVGSVGElement;
  private readonly regionLayer: SVGGElement;
  private readonly labelLayer: SVGGElement;
  private readonly paths = new Map<string, SVGPathElement>();
  private readonly anchors = new Map<string, [number, number]>();
  private view = { x: 0, y: 0, w: MAP_WIDTH, h: MAP_HEIGHT };

  constructor(
    collection: RegionCollection,
    private readonly onRegionClick: (regionId: string | null) => void = () => undefined,
  ) {
    this.element = document.createElement("section");
    this.element.className = "panel map-panel";

    this.svg = document.createElementNS(SVG_NS, "svg");
    this.svg.setAttribute("class", "world-map");
    this.svg.setAttribute("viewBox", `0 0 ${MAP_WIDTH} ${MAP_HEIGHT}`);

    const ocean = document.createElementNS(SVG_NS, "rect");
    ocean.setAttribute("class", "ocean");
    ocean.setAttribute("x", "-720");
    ocean.setAttribute("y", "-360");
    ocean.setAttribute("width", String(MAP_WIDTH * 3));
    ocean.setAttribute("height", String(MAP_HEIGHT * 3));
    ocean.addEventListener("click", () => this.onRegionClick(null));
    this.svg.append(ocean);

    this.regionLayer = document.createElementNS(SVG_NS, "g");
    this.labelLayer = document.createElementNS(SVG_NS, "g");
    this.svg.append(this.regionLayer, this.labelLayer);

    for (const feature of collection.features) {
      this.addRegion(feature);
    }

    this.element.append(this.svg, this.buildZoomControls(), this.buildLegend());
    this.enablePanAndZoom();
  }

  private addRegion(feature: RegionFeature): void {
    const regionId = feature.properties.region_id;
    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("d", svgPath(feature));
    path.setAttribute("class", "region");
    path.setAttribute("fill", UNSCORED_FILL);
    path.dataset.region = regionId;
    path.addEventListener("click", (event) => {
      event.stopPropagation();
      this.onRegionClick(regionId);
    });
    this.paths.set(regionId, path);
    this.anchors.set(regionId, labelAnchor(feature));
    this.regionLayer.append(path);
  }

  /** Repaint fills and rank labels from a fresh recommendation response. */
  update(response: RecommendResponse): void {
    for (const row of response.scores) {
      const path = this.paths.get(row.regionId);
      if (path) path.setAttribute("fill", bandColor(row.band));
    }
    this.labelLayer.replaceChildren();
    for (const entry of response.topK) {
      const anchor = this.anchors.get(entry.regionId);
      if (!anchor) continue;
      const [x, y] = project(anchor[0], anchor[1]);
      const group = document.createElementNS(SVG_NS, "g");
      group.setAttribute("class", "rank-label");
      group.dataset.region = entry.regionId;
      group.dataset.rank = String(entry.rank);

      const badge = document.createElementNS(SVG_NS, "circle");
      badge.setAttribute("cx", String(x));
      badge.setAttribute("cy", String(y));
      badge.setAttribute("r", "7");

      const text = document.createElementNS(SVG_NS, "text");
      text.setAttribute("x", String(x));
      text.setAttribute("y", String(y + 3));
      text.setAttribute("text-anchor", "middle");
      text.textContent = String(entry.rank);

      group.append(badge, text);
      this.labelLayer.append(group);
    }
  }

  regionFill(regionId: string): string | null {
    return this.paths.get(regionId)?.getAttribute("fill") ?? null;
  }

  rankLabelFor(regionId: string): string | null {
    for (const node of this.labelLayer.querySelectorAll<SVGGElement>(".rank-label")) {
      if (node.dataset.region === regionId) return node.dataset.rank ?? null;
    }
    return null;
  }

  private buildLegend(): HTMLElement {
    const legend = document.createElement("div");
    legend.className = "legend";
    for (const band of BAND_ORDER) {
      const entry = document.createElement("span");
      entry.className = "legend-entry";
      entry.dataset.band = band;
      const swatch = document.createElement("span");
      swatch.className = "legend-swatch";
      swatch.style.background = BAND_COLORS[band];
      entry.append(swatch, ` ${band}`);
      legend.append(entry);
    }
    return legend;
  }

  private buildZoomControls(): HTMLElement {
    const controls = document.createElement("div");
    controls.className = "zoom-controls";
    const zoomIn = document.createElement("button");
    zoomIn.textContent = "+";
    zoomIn.addEventListener("click", () => this.zoom(1 / 1.4));
    const zoomOut = document.createElement("button");
    zoomOut.textContent = "−";
    zoomOut.addEventListener("click", () => this.zoom(1.4));
    controls.append(zoomIn, zoomOut);
    return controls;
  }

  private zoom(factor: number, cx?: number, cy?: number): void {
    const { x, y, w, h } = this.view;
    const px = cx ?? x + w / 2;
    const py = cy ?? y + h / 2;
    const nw = Math.min(MAP_WIDTH * 2, Math.max(20, w * factor));
    const nh = nw * (MAP_HEIGHT / MAP_WIDTH);
    this.view = {
      x: px - ((px - x) / w) * nw,
      y: py - ((py - y) / h) * nh,
      w: nw,
      h: nh,
    };
    this.applyView();
  }

  private applyView(): void {
    const { x, y, w, h } = this.view;
    this.svg.setAttribute("viewBox", `${x} ${y} ${w} ${h}`);
  }

  private enablePanAndZoom(): void {
    let dragging = false;
    let last: [number, number] | null = null;
    this.svg.addEventListener("pointerdown", (event) => {
      dragging = true;
      last = [event.clientX, event.clientY];
    });
    this.svg.addEventListener("pointermove", (event) => {
      if (!dragging || !last) return;
      const scale = this.view.w / (this.svg.clientWidth || MAP_WIDTH);
      this.view.x -= (event.clientX - last[0]) * scale;
      this.view.y -= (event.clientY - last[1]) * scale;
      last = [event.clientX, event.clientY];
      this.applyView();
    });
    const stop = () => {
      dragging = false;
      last = null;
    };
    this.svg.addEventListener("pointerup", stop);
    this.svg.addEventListener("pointerleave", stop);
    this.svg.addEventListener("wheel", (event) => {
      event.preventDefault();
      this.zoom(event.deltaY > 0 ? 1.15 : 1 / 1.15);
    });
  }
}
