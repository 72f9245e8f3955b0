import { ATTRIBUTE_COLORS, attributeLabel } from "./palette";
import { ATTRIBUTES } from "./types";
import type { AttributeId, AttributeMap, BudgetLevel, PreferencesDoc } from "./types";

export const INITIAL_PREFERENCES: PreferencesDoc = {
  budgetLevel: "medium",
  days: 7,
  filterOverBudget: false,
  weights: Object.fromEntries(ATTRIBUTES.map((attr) => [attr, 50])) as AttributeMap,
};

const BUDGET_LEVELS: BudgetLevel[] = ["low", "medium", "high"];

/** The preference customization panel: budget radios, days, filter, sliders. */
export class PreferencePanel {
  readonly element: HTMLElement;
  private readonly sliders = new Map<AttributeId, HTMLInputElement>();
  private readonly sliderValues = new Map<AttributeId, HTMLElement>();
  private readonly radios = new Map<BudgetLevel, HTMLInputElement>();
  private readonly daysInput: HTMLInputElement;
  private readonly filterInput: HTMLInputElement;
  private readonly listeners: Array<(prefs: PreferencesDoc) => void> = [];

  constructor(initial: PreferencesDoc = INITIAL_PREFERENCES) {
    this.element = document.createElement("section");
    this.element.className = "panel preferences-panel";
    this.element.innerHTML = "<h2>Your preferences</h2>";

    const budgetGroup = document.createElement("fieldset");
    budgetGroup.className = "budget-group";
    budgetGroup.innerHTML = "<legend>Budget</legend>";
    for (const level of BUDGET_LEVELS) {
      const label = document.createElement("label");
      const radio = document.createElement("input");
      radio.type = "radio";
      radio.name = "budget-level";
      radio.value = level;
      radio.checked = level === initial.budgetLevel;
      radio.addEventListener("change", () => this.emit());
      this.radios.set(level, radio);
      label.append(radio, ` ${level}`);
      budgetGroup.append(label);
    }
    this.element.append(budgetGroup);

    const daysRow = document.createElement("label");
    daysRow.className = "days-row";
    daysRow.textContent = "Days ";
    this.daysInput = document.createElement("input");
    this.daysInput.type = "number";
    this.daysInput.min = "1";
    this.daysInput.value = String(initial.days);
    this.daysInput.addEventListener("input", () => this.emit());
    daysRow.append(this.daysInput);
    this.element.append(daysRow);

    const filterRow = document.createElement("label");
    filterRow.className = "filter-row";
    this.filterInput = document.createElement("input");
    this.filterInput.type = "checkbox";
    this.filterInput.checked = initial.filterOverBudget;
    this.filterInput.addEventListener("change", () => this.emit());
    filterRow.append(this.filterInput, " filter out regions over budget");
    this.element.append(filterRow);

    for (const attr of ATTRIBUTES) {
      const row = document.createElement("div");
      row.className = "slider-row";

      const name = document.createElement("span");
      name.className = "slider-name";
      name.textContent = attributeLabel(attr);

      const slider = document.createElement("input");
      slider.type = "range";
      slider.min = "0";
      slider.max = "100";
      slider.value = String(initial.weights[attr]);
      slider.className = "attribute-slider";
      slider.dataset.attr = attr;
      slider.style.background = ATTRIBUTE_COLORS[attr];
      slider.addEventListener("input", () => {
        value.textContent = slider.value;
        this.emit();
      });
      this.sliders.set(attr, slider);

      const value = document.createElement("span");
      value.className = "slider-value";
      value.textContent = slider.value;
      this.sliderValues.set(attr, value);

      row.append(name, slider, value);
      this.element.append(row);
    }
  }

  current(): PreferencesDoc {
    let budgetLevel: BudgetLevel = "medium";
    for (const [level, radio] of this.radios) if (radio.checked) budgetLevel = level;
    const weights = Object.fromEntries(
      ATTRIBUTES.map((attr) => [attr, Number(this.sliders.get(attr)!.value)]),
    ) as AttributeMap;
    return {
      budgetLevel,
      days: Math.max(1, Number(this.daysInput.value) || 1),
      filterOverBudget: this.filterInput.checked,
      weights,
    };
  }

  slider(attr: AttributeId): HTMLInputElement {
    return this.sliders.get(attr)!;
  }

  setWeight(attr: AttributeId, value: number): void {
    const slider = this.sliders.get(attr)!;
    slider.value = String(value);
    slider.dispatchEvent(new Event("input", { bubbles: true }));
  }

  onChange(listener: (prefs: PreferencesDoc) => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    const prefs = this.current();
    for (const listener of this.listeners) listener(prefs);
  }
}
