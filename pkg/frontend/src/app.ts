import { fetchGeometry, fetchRegions, postRecommend } from "./api";
import { RecommendScheduler } from "./coalesce";
import { MapView } from "./map";
import { INITIAL_PREFERENCES, PreferencePanel } from "./panel";
import { ResultsList } from "./results";
import type {
  PreferencesDoc,
  RecommendResponse,
  RegionCollection,
  RegionsPayload,
} from "./types";

/** The three-panel application: preferences, map, results. */
export class App {
  readonly panel: PreferencePanel;
  readonly map: MapView;
  readonly results: ResultsList;
  private readonly banner: HTMLElement;
  private readonly popup: HTMLElement;
  private readonly scheduler: RecommendScheduler<PreferencesDoc, RecommendResponse>;
  private latest: { response: RecommendResponse; prefs: PreferencesDoc } | null = null;
  private popupRegion: string | null = null;

  static async boot(
    root: HTMLElement,
    send: (prefs: PreferencesDoc) => Promise<RecommendResponse> = postRecommend,
  ): Promise<App> {
    const [regions, geometry] = await Promise.all([fetchRegions(), fetchGeometry()]);
    return new App(root, regions, geometry, send);
  }

  constructor(
    root: HTMLElement,
    private readonly regionsPayload: RegionsPayload,
    geometry: RegionCollection,
    send: (prefs: PreferencesDoc) => Promise<RecommendResponse> = postRecommend,
  ) {
    this.panel = new PreferencePanel();
    this.map = new MapView(geometry, (regionId) => this.onRegionClick(regionId));
    this.results = new ResultsList(regionsPayload);

    this.banner = document.createElement("div");
    this.banner.className = "error-banner hidden";

    this.popup = document.createElement("div");
    this.popup.className = "region-popup hidden";
    this.map.element.append(this.popup);

    const layout = document.createElement("div");
    layout.className = "layout";
    layout.append(this.panel.element, this.map.element, this.results.element);
    root.replaceChildren(this.banner, layout);

    this.scheduler = new RecommendScheduler(
      send,
      (response, prefs) => this.applyResponse(response, prefs),
      () => this.showError("Could not refresh recommendations; showing the last good results."),
    );
    this.panel.onChange((prefs) => this.scheduler.request(prefs));
    this.scheduler.request(INITIAL_PREFERENCES);
  }

  latestResponse(): RecommendResponse | null {
    return this.latest?.response ?? null;
  }

  private applyResponse(response: RecommendResponse, prefs: PreferencesDoc): void {
    this.latest = { response, prefs };
    this.banner.classList.add("hidden");
    this.map.update(response);
    this.results.update(response, prefs);
    if (this.popupRegion) this.renderPopup(this.popupRegion);
  }

  private showError(message: string): void {
    this.banner.textContent = message;
    this.banner.classList.remove("hidden");
  }

  private onRegionClick(regionId: string | null): void {
    this.popupRegion = regionId;
    if (regionId === null) {
      this.popup.classList.add("hidden");
      return;
    }
    this.renderPopup(regionId);
  }

  private renderPopup(regionId: string): void {
    const info = this.regionsPayload.regions.find((r) => r.id === regionId);
    if (!info || !this.latest) return;
    const row = this.latest.response.scores.find((s) => s.regionId === regionId);
    if (!row) return;
    const limit = this.regionsPayload.budgets[this.latest.prefs.budgetLevel];
    const status = row.budgetFulfilled ? "within" : "over";
    this.popup.innerHTML =
      `<h3>${info.name}</h3>` +
      `<p class="popup-countries">${info.countries.join(", ")}</p>` +
      `<p class="popup-score" data-score="${row.score}">Score ${row.score.toFixed(2)} (${row.band})</p>` +
      `<p class="popup-budget">Estimated ${row.estimatedCost} ${this.regionsPayload.currency}, ` +
      `${status} the ${this.latest.prefs.budgetLevel} budget of ${limit} ${this.regionsPayload.currency}</p>`;
    this.popup.classList.remove("hidden");
  }
}
