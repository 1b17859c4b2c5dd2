/**
 * Bar chart of the order weights.
 *
 * Guard rail: bars are only rendered when the server's weights sum to
 * 1 within one part in a thousand; anything else is shown as a data
 * error instead of a quietly wrong chart.
 */

import { el, fmt } from "./format.js";

export class WeightChart {
  readonly root: HTMLDivElement;

  constructor() {
    this.root = el("div", "weight-chart");
    this.renderEmpty();
  }

  renderEmpty(message = "pick a point in the decision space"): void {
    this.root.replaceChildren(el("p", "chart-empty", message));
  }

  render(weights: number[]): void {
    const total = weights.reduce((sum, w) => sum + w, 0);
    if (Math.abs(total - 1.0) > 0.001) {
      this.root.replaceChildren(
        el("p", "chart-error", `weights sum to ${total.toFixed(6)}, refusing to draw`),
      );
      return;
    }
    const bars = el("div", "bars");
    const peak = Math.max(...weights, 1e-12);
    weights.forEach((w, i) => {
      const slot = el("div", "bar-slot");
      const bar = el("div", "bar");
      bar.style.height = `${Math.max(1, Math.round((w / peak) * 100))}%`;
      bar.title = `w${i + 1} = ${fmt(w, 6)}`;
      const value = el("span", "bar-value", fmt(w, 3));
      const label = el("span", "bar-label", `w${i + 1}`);
      slot.append(value, bar, label);
      bars.appendChild(slot);
    });
    this.root.replaceChildren(bars);
  }

  get barValues(): number[] {
    return Array.from(this.root.querySelectorAll<HTMLElement>(".bar")).map((bar) => {
      const title = bar.title;
      return Number(title.slice(title.indexOf("=") + 1));
    });
  }
}
