/**
 * Side-by-side scenario comparison.
 *
 * Cell values come verbatim from the stored server responses; sorting
 * only reorders rows.
 */

import { el, fmt } from "./format.js";
import { Scenario, ScenarioColumn, sortScenarios } from "./state.js";

const COLUMNS: { key: ScenarioColumn; label: string }[] = [
  { key: "name", label: "scenario" },
  { key: "alpha", label: "alpha" },
  { key: "delta", label: "delta" },
  { key: "n", label: "n" },
  { key: "aggregate", label: "aggregate" },
  { key: "orness", label: "orness" },
  { key: "dispersion", label: "dispersion" },
  { key: "tradeoff", label: "tradeoff" },
];

export class ScenarioTable {
  readonly root: HTMLDivElement;
  private scenarios: Scenario[] = [];
  private sortColumn: ScenarioColumn | null = null;
  private ascending = true;
  private onDelete?: (index: number) => void;

  constructor(onDelete?: (index: number) => void) {
    this.root = el("div", "scenario-table");
    this.onDelete = onDelete;
    this.render();
  }

  update(scenarios: Scenario[]): void {
    this.scenarios = scenarios;
    this.render();
  }

  private render(): void {
    if (this.scenarios.length === 0) {
      this.root.replaceChildren(
        el("p", "table-empty", "no saved scenarios yet — explore and press save"),
      );
      return;
    }
    const rows = this.sortColumn
      ? sortScenarios(this.scenarios, this.sortColumn, this.ascending)
      : this.scenarios;

    const table = el("table");
    const head = el("thead");
    const headRow = el("tr");
    for (const column of COLUMNS) {
      const cell = el("th", "sortable", column.label);
      if (column.key === this.sortColumn) {
        cell.textContent += this.ascending ? " ▲" : " ▼";
      }
      cell.addEventListener("click", () => {
        this.ascending = column.key === this.sortColumn ? !this.ascending : true;
        this.sortColumn = column.key;
        this.render();
      });
      headRow.appendChild(cell);
    }
    headRow.appendChild(el("th", undefined, ""));
    head.appendChild(headRow);
    table.appendChild(head);

    const body = el("tbody");
    rows.forEach((scenario) => {
      const row = el("tr");
      row.append(
        el("td", "scenario-name", scenario.name),
        el("td", undefined, fmt(scenario.alpha, 3)),
        el("td", undefined, fmt(scenario.delta, 3)),
        el("td", undefined, String(scenario.n)),
        el("td", undefined, fmt(scenario.aggregate, 4)),
        el("td", undefined, fmt(scenario.orness, 4)),
        el("td", undefined, fmt(scenario.dispersion, 4)),
        el("td", undefined, fmt(scenario.tradeoff, 4)),
      );
      const actions = el("td");
      const remove = el("button", "delete-scenario", "✕");
      remove.addEventListener("click", () => {
        const index = this.scenarios.indexOf(scenario);
        if (index >= 0) {
          this.onDelete?.(index);
        }
      });
      actions.appendChild(remove);
      row.appendChild(actions);
      body.appendChild(row);
    });
    table.appendChild(body);
    this.root.replaceChildren(table);
  }
}
