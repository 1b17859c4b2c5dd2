/**
 * Explorer wiring: decision-space picking, weight generation, live
 * aggregation, and the scenario history.
 *
 * What-if loop: every change to the point, n, or the criteria posts to
 * the server and repaints from the response. Infeasible picks are never
 * clamped — the point is flagged with the server's actual bound so the
 * shape of the space stays visible.
 */

import { ApiClient, WeightsResponse } from "./api.js";
import { DecisionSpace } from "./decision-space.js";
import { el, fmt } from "./format.js";
import { AggregateGauge } from "./gauge.js";
import { ScenarioTable } from "./scenarios.js";
import {
  ExplorerState,
  MAX_CRITERIA,
  initialState,
  saveScenarios,
  snapshot,
} from "./state.js";
import { WeightChart } from "./weight-chart.js";

export class ExplorerApp {
  readonly state: ExplorerState;
  readonly space: DecisionSpace;
  readonly chart: WeightChart;
  readonly gauge: AggregateGauge;
  readonly table: ScenarioTable;

  private api: ApiClient;
  private alphaSlider!: HTMLInputElement;
  private deltaSlider!: HTMLInputElement;
  private nInput!: HTMLInputElement;
  private pointReadout!: HTMLElement;
  private badge!: HTMLElement;
  private metricsPane!: HTMLElement;
  private criteriaPane!: HTMLElement;
  private criteriaWarning!: HTMLElement;
  private retryPane!: HTMLElement;
  private nameInput!: HTMLInputElement;
  private lastAction: (() => void) | null = null;

  constructor(root: HTMLElement, api: ApiClient) {
    this.api = api;
    this.state = initialState();
    this.space = new DecisionSpace({
      onSelect: (alpha, delta) => this.selectPoint(alpha, delta),
    });
    this.chart = new WeightChart();
    this.gauge = new AggregateGauge();
    this.table = new ScenarioTable((index) => this.deleteScenario(index));
    this.build(root);
    this.table.update(this.state.scenarios);
    this.renderCriteriaInputs();
  }

  /** Load the feasibility overlay, then render the initial point. */
  async start(): Promise<void> {
    const frontier = await this.api.fetchFrontier(201);
    if (frontier.kind === "ok") {
      this.space.setFrontier(frontier.body.alphas, frontier.body.delta_max);
      this.hideRetry();
    } else if (frontier.kind === "network_error") {
      this.showRetry(() => void this.start());
    }
    this.selectPoint(this.state.alpha, this.state.delta);
  }

  // -- decision point ------------------------------------------------------

  selectPoint(alpha: number, delta: number): void {
    this.state.alpha = round3(alpha);
    this.state.delta = round3(delta);
    this.alphaSlider.value = String(this.state.alpha);
    this.deltaSlider.value = String(this.state.delta);
    this.pointReadout.textContent =
      `alpha ${fmt(this.state.alpha, 3)}   delta ${fmt(this.state.delta, 3)}`;
    this.space.setPoint(this.state.alpha, this.state.delta, null);
    void this.refreshWeights();
  }

  private async refreshWeights(): Promise<void> {
    const { alpha, delta, n } = this.state;
    const action = () => void this.refreshWeights();
    const result = await this.api.fetchWeights(alpha, delta, n);
    switch (result.kind) {
      case "stale":
        return;
      case "ok":
        this.hideRetry();
        this.state.lastWeights = result.body;
        this.space.setPoint(result.body.alpha, result.body.delta, true);
        this.clearBadge();
        this.chart.render(result.body.weights);
        this.renderMetrics(result.body);
        void this.refreshAggregate();
        return;
      case "infeasible":
        this.hideRetry();
        this.state.lastWeights = null;
        this.space.setPoint(alpha, delta, false);
        this.showBadge(
          `infeasible: max trade-off ${fmt(result.body.delta_max, 2)} at this risk level`,
        );
        this.chart.renderEmpty("no weight vector exists for this point");
        this.metricsPane.replaceChildren();
        this.gauge.renderEmpty();
        return;
      case "bad_request":
        this.showBadge(`request rejected: ${result.message}`);
        return;
      case "network_error":
        this.showRetry(action);
        return;
    }
  }

  // -- criteria / aggregation ----------------------------------------------

  private async refreshAggregate(): Promise<void> {
    const { alpha, delta, n, criteria } = this.state;
    if (criteria.length !== n || this.state.lastWeights === null) {
      return;
    }
    const result = await this.api.fetchAggregate(alpha, delta, n, criteria);
    if (result.kind === "ok") {
      this.hideRetry();
      this.state.lastAggregate = result.body;
      this.gauge.render(result.body.value, result.body.sorted_criteria);
    } else if (result.kind === "network_error") {
      this.showRetry(() => void this.refreshAggregate());
    }
  }

  setCriteria(values: number[]): void {
    this.state.criteria = values;
    if (values.length !== this.state.n) {
      this.criteriaWarning.textContent =
        `${values.length} values entered, ${this.state.n} criteria expected`;
      return;
    }
    this.criteriaWarning.textContent = "";
    void this.refreshAggregate();
  }

  setN(n: number): void {
    this.state.n = n;
    // keep entered values, resize the input row to match n
    const values = this.state.criteria.slice(0, n);
    while (values.length < n) {
      values.push(0);
    }
    this.state.criteria = values;
    this.renderCriteriaInputs();
    void this.refreshWeights();
  }

  // -- scenarios -------------------------------------------------------------

  saveScenario(): void {
    const name = this.nameInput.value.trim() || `scenario ${this.state.scenarios.length + 1}`;
    const scenario = snapshot(this.state, name);
    if (!scenario) {
      return;
    }
    this.state.scenarios.push(scenario);
    saveScenarios(this.state.scenarios);
    this.table.update(this.state.scenarios);
    this.nameInput.value = "";
  }

  deleteScenario(index: number): void {
    this.state.scenarios.splice(index, 1);
    saveScenarios(this.state.scenarios);
    this.table.update(this.state.scenarios);
  }

  // -- rendering -------------------------------------------------------------

  private renderMetrics(body: WeightsResponse): void {
    const rows: [string, string, string][] = [
      ["risk", fmt(body.alpha, 3), fmt(body.orness, 4)],
      ["trade-off", fmt(body.delta, 3), fmt(body.tradeoff, 4)],
      ["dispersion", "—", fmt(body.dispersion, 4)],
    ];
    const table = el("table", "metrics");
    const head = el("tr");
    head.append(el("th"), el("th", undefined, "requested"), el("th", undefined, "achieved"));
    table.appendChild(head);
    for (const [label, requested, achieved] of rows) {
      const row = el("tr");
      row.append(
        el("td", undefined, label),
        el("td", "requested-value", requested),
        el("td", "achieved-value", achieved),
      );
      table.appendChild(row);
    }
    this.metricsPane.replaceChildren(table);
  }

  private showBadge(text: string): void {
    this.badge.textContent = text;
    this.badge.classList.add("visible");
  }

  private clearBadge(): void {
    this.badge.textContent = "";
    this.badge.classList.remove("visible");
  }

  private showRetry(action: () => void): void {
    this.lastAction = action;
    this.retryPane.classList.add("visible");
  }

  private hideRetry(): void {
    this.retryPane.classList.remove("visible");
  }

  private renderCriteriaInputs(): void {
    this.criteriaPane.replaceChildren();
    this.state.criteria.forEach((value, i) => {
      const input = el("input", "criterion-input") as HTMLInputElement;
      input.type = "number";
      input.step = "any";
      input.value = String(value);
      input.addEventListener("input", () => {
        const values = Array.from(
          this.criteriaPane.querySelectorAll<HTMLInputElement>(".criterion-input"),
        ).map((node) => Number(node.value || 0));
        this.setCriteria(values);
      });
      input.setAttribute("aria-label", `criterion ${i + 1}`);
      this.criteriaPane.appendChild(input);
    });
  }

  private build(root: HTMLElement): void {
    const header = el("header");
    header.append(el("h1", undefined, "owagen decision-strategy explorer"));

    const spacePanel = el("section", "panel space-panel");
    spacePanel.append(el("h2", undefined, "decision space"));
    spacePanel.appendChild(this.space.root as unknown as HTMLElement);
    this.pointReadout = el("p", "point-readout");
    spacePanel.appendChild(this.pointReadout);

    this.alphaSlider = slider();
    this.deltaSlider = slider();
    this.alphaSlider.addEventListener("input", () =>
      this.selectPoint(Number(this.alphaSlider.value), this.state.delta),
    );
    this.deltaSlider.addEventListener("input", () =>
      this.selectPoint(this.state.alpha, Number(this.deltaSlider.value)),
    );
    spacePanel.append(
      labelled("risk alpha", this.alphaSlider),
      labelled("trade-off delta", this.deltaSlider),
    );

    this.nInput = el("input") as HTMLInputElement;
    this.nInput.type = "number";
    this.nInput.min = "1";
    this.nInput.max = String(MAX_CRITERIA);
    this.nInput.value = String(this.state.n);
    this.nInput.addEventListener("change", () => {
      const n = Math.max(1, Math.min(MAX_CRITERIA, Math.round(Number(this.nInput.value) || 1)));
      this.nInput.value = String(n);
      this.setN(n);
    });
    spacePanel.append(labelled("criteria count n", this.nInput));

    this.badge = el("p", "infeasible-badge");
    spacePanel.appendChild(this.badge);

    this.retryPane = el("div", "retry-pane");
    this.retryPane.append(el("span", undefined, "server unreachable "));
    const retryButton = el("button", "retry-button", "retry");
    retryButton.addEventListener("click", () => this.lastAction?.());
    this.retryPane.appendChild(retryButton);
    spacePanel.appendChild(this.retryPane);

    const weightsPanel = el("section", "panel weights-panel");
    weightsPanel.append(el("h2", undefined, "order weights"));
    weightsPanel.appendChild(this.chart.root);
    this.metricsPane = el("div", "metrics-pane");
    weightsPanel.appendChild(this.metricsPane);

    const criteriaPanel = el("section", "panel criteria-panel");
    criteriaPanel.append(el("h2", undefined, "criteria & aggregate"));
    this.criteriaPane = el("div", "criteria-inputs");
    criteriaPanel.appendChild(this.criteriaPane);
    this.criteriaWarning = el("p", "criteria-warning");
    criteriaPanel.appendChild(this.criteriaWarning);
    criteriaPanel.appendChild(this.gauge.root);

    const scenarioPanel = el("section", "panel scenario-panel");
    scenarioPanel.append(el("h2", undefined, "scenarios"));
    this.nameInput = el("input", "scenario-name-input") as HTMLInputElement;
    this.nameInput.placeholder = "scenario name";
    const saveButton = el("button", "save-scenario", "save current");
    saveButton.addEventListener("click", () => this.saveScenario());
    const controls = el("div", "scenario-controls");
    controls.append(this.nameInput, saveButton);
    scenarioPanel.appendChild(controls);
    scenarioPanel.appendChild(this.table.root);

    const main = el("main");
    main.append(spacePanel, weightsPanel, criteriaPanel, scenarioPanel);
    root.replaceChildren(header, main);
  }
}

function slider(): HTMLInputElement {
  const node = document.createElement("input");
  node.type = "range";
  node.min = "0";
  node.max = "1";
  node.step = "0.001";
  return node;
}

function labelled(text: string, control: HTMLElement): HTMLLabelElement {
  const label = document.createElement("label");
  label.className = "control";
  const span = document.createElement("span");
  span.textContent = text;
  label.append(span, control);
  return label;
}

function round3(value: number): number {
  return Math.round(value * 1000) / 1000;
}
