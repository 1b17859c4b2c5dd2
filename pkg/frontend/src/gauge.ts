/** Aggregate score placed on a min-max gauge of the entered criteria. */

import { el, fmt } from "./format.js";

export class AggregateGauge {
  readonly root: HTMLDivElement;

  constructor() {
    this.root = el("div", "gauge");
    this.renderEmpty();
  }

  renderEmpty(message = "enter criteria values to aggregate"): void {
    this.root.replaceChildren(el("p", "gauge-empty", message));
  }

  render(value: number, criteria: number[]): void {
    const low = Math.min(...criteria);
    const high = Math.max(...criteria);
    const span = high - low;
    const position = span > 0 ? (value - low) / span : 0.5;

    const track = el("div", "gauge-track");
    const marker = el("div", "gauge-marker");
    marker.style.left = `${(position * 100).toFixed(2)}%`;
    track.appendChild(marker);

    const labels = el("div", "gauge-labels");
    labels.append(
      el("span", "gauge-min", `min ${fmt(low, 2)}`),
      el("span", "gauge-value", fmt(value, 4)),
      el("span", "gauge-max", `max ${fmt(high, 2)}`),
    );
    this.root.replaceChildren(track, labels);
  }
}
