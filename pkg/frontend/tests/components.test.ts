import { describe, expect, it } from "vitest";

import { DecisionSpace } from "../src/decision-space.js";
import { AggregateGauge } from "../src/gauge.js";
import { WeightChart } from "../src/weight-chart.js";

describe("WeightChart", () => {
  it("renders one bar per weight", () => {
    const chart = new WeightChart();
    chart.render([0.2, 0.2, 0.2, 0.2, 0.2]);
    expect(chart.root.querySelectorAll(".bar")).toHaveLength(5);
  });

  it("refuses to draw weights whose sum is off by more than 1e-3", () => {
    const chart = new WeightChart();
    chart.render([0.5, 0.4]);
    expect(chart.root.querySelectorAll(".bar")).toHaveLength(0);
    expect(chart.root.textContent).toContain("refusing to draw");
  });

  it("accepts sums within the display tolerance", () => {
    const chart = new WeightChart();
    chart.render([0.5, 0.5004]);
    expect(chart.root.querySelectorAll(".bar")).toHaveLength(2);
  });

  it("tallest bar corresponds to the largest weight", () => {
    const chart = new WeightChart();
    chart.render([0.1, 0.6, 0.3]);
    const bars = Array.from(chart.root.querySelectorAll<HTMLElement>(".bar"));
    const heights = bars.map((b) => Number(b.style.height.replace("%", "")));
    expect(Math.max(...heights)).toBe(heights[1]);
  });
});

describe("DecisionSpace", () => {
  function frontier(k = 201): { alphas: number[]; deltaMax: number[] } {
    const alphas = Array.from({ length: k }, (_, i) => i / (k - 1));
    return { alphas, deltaMax: alphas.map((a) => 4 * a * (1 - a)) };
  }

  it("shading boundary matches the frontier samples within one pixel", () => {
    const space = new DecisionSpace();
    const { alphas, deltaMax } = frontier();
    space.setFrontier(alphas, deltaMax);
    const points = space.root
      .querySelector(".feasible-region")!
      .getAttribute("points")!
      .split(" ")
      .map((pair) => pair.split(",").map(Number));
    for (let i = 0; i < alphas.length; i++) {
      const expectedY = space.boundaryPixelAt(i);
      expect(Math.abs(points[i][1] - expectedY)).toBeLessThanOrEqual(1);
    }
  });

  it("maps clicks to (alpha, delta) with delta up the screen", () => {
    let picked: [number, number] | null = null;
    const space = new DecisionSpace({
      onSelect: (alpha, delta) => {
        picked = [alpha, delta];
      },
    });
    document.body.appendChild(space.root as unknown as Node);
    space.root.dispatchEvent(
      new MouseEvent("click", { clientX: space.width / 2, clientY: 0, bubbles: true }),
    );
    expect(picked).not.toBeNull();
    expect(picked![0]).toBeCloseTo(0.5, 2);
    expect(picked![1]).toBeCloseTo(1.0, 2);
  });

  it("marks infeasible points", () => {
    const space = new DecisionSpace();
    space.setPoint(0.1, 0.9, false);
    const marker = space.root.querySelector(".point-marker")!;
    expect(marker.classList.contains("infeasible")).toBe(true);
    space.setPoint(0.5, 0.5, true);
    expect(marker.classList.contains("infeasible")).toBe(false);
  });
});

describe("AggregateGauge", () => {
  it("positions the marker between min and max", () => {
    const gauge = new AggregateGauge();
    gauge.render(3, [1, 2, 3, 4, 5]);
    const marker = gauge.root.querySelector<HTMLElement>(".gauge-marker")!;
    expect(marker.style.left).toBe("50.00%");
    expect(gauge.root.textContent).toContain("min 1.00");
    expect(gauge.root.textContent).toContain("max 5.00");
  });

  it("pins the marker to the edges at min and max", () => {
    const gauge = new AggregateGauge();
    gauge.render(1, [1, 5]);
    expect(gauge.root.querySelector<HTMLElement>(".gauge-marker")!.style.left).toBe("0.00%");
    gauge.render(5, [1, 5]);
    expect(gauge.root.querySelector<HTMLElement>(".gauge-marker")!.style.left).toBe("100.00%");
  });
});
