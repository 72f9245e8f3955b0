import { barCharts, pieChart } from "./charts";
import type { PreferencesDoc, RecommendResponse, RegionsPayload, ScoreRow, TopEntry } from "./types";

/**
 * The ranked results panel. Entries expand in place to show the explanation
 * pie, the benchmark bar charts and the budget line; everything is a pure
 * view of the last response, no extra requests.
 */
export class ResultsList {
  readonly element: HTMLElement;
  private readonly expanded = new Set<string>();
  private latest: { response: RecommendResponse; prefs: PreferencesDoc } | null = null;

  constructor(private readonly regionsPayload: RegionsPayload) {
    this.element = document.createElement("section");
    this.element.className = "panel results-panel";
    this.element.innerHTML = "<h2>Best matches</h2><ol class='result-items'></ol>";
  }

  update(response: RecommendResponse, prefs: PreferencesDoc): void {
    this.latest = { response, prefs };
    const list = this.element.querySelector(".result-items")!;
    list.replaceChildren();
    const rows = new Map(response.scores.map((row) => [row.regionId, row]));
    for (const entry of response.topK) {
      list.append(this.buildEntry(entry, rows.get(entry.regionId)!, prefs));
    }
  }

  toggle(regionId: string): void {
    if (this.expanded.has(regionId)) this.expanded.delete(regionId);
    else this.expanded.add(regionId);
    if (this.latest) this.update(this.latest.response, this.latest.prefs);
  }

  private buildEntry(entry: TopEntry, row: ScoreRow, prefs: PreferencesDoc): HTMLElement {
    const item = document.createElement("li");
    item.className = "result-entry";
    item.dataset.region = entry.regionId;

    const header = document.createElement("button");
    header.className = "result-header";
    header.innerHTML =
      `<span class="result-rank">${entry.rank}</span>` +
      `<span class="result-name">${entry.name}</span>` +
      `<span class="result-score" data-score="${entry.score}">${entry.score.toFixed(2)}</span>`;
    header.addEventListener("click", () => this.toggle(entry.regionId));
    item.append(header);

    if (this.expanded.has(entry.regionId)) {
      const detail = document.createElement("div");
      detail.className = "result-detail";
      detail.append(pieChart(entry.explanation), barCharts(entry));

      const budget = document.createElement("p");
      budget.className = "budget-line";
      const limit = this.regionsPayload.budgets[prefs.budgetLevel];
      const status = row.budgetFulfilled ? "within" : "over";
      budget.textContent =
        `Estimated cost ${row.estimatedCost} ${this.regionsPayload.currency} for ` +
        `${prefs.days} days, ${status} the ${prefs.budgetLevel} budget of ` +
        `${limit} ${this.regionsPayload.currency}. Overall score ${entry.score.toFixed(2)} (${entry.band}).`;
      detail.append(budget);
      item.append(detail);
    }
    return item;
  }
}
