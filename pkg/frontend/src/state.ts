/**
 * Explorer state and the scenario history.
 *
 * Scenarios live in browser local storage only; there is no server-side
 * persistence. A snapshot stores the request (point, n, criteria) and the
 * server's answers verbatim, so the comparison table renders exactly what
 * the model reported at the time.
 */

import type { AggregateResponse, WeightsResponse } from "./api.js";

export interface Scenario {
  name: string;
  alpha: number;
  delta: number;
  n: number;
  criteria: number[];
  weights: number[];
  orness: number | null;
  dispersion: number | null;
  tradeoff: number | null;
  aggregate: number | null;
  savedAt: string;
}

export const STORAGE_KEY = "owagen.scenarios.v1";

/** UI cap so the charts stay legible; the API itself has no such limit. */
export const MAX_CRITERIA = 50;

export interface ExplorerState {
  alpha: number;
  delta: number;
  n: number;
  criteria: number[];
  lastWeights: WeightsResponse | null;
  lastAggregate: AggregateResponse | null;
  scenarios: Scenario[];
}

export function initialState(): ExplorerState {
  return {
    alpha: 0.5,
    delta: 0.8,
    n: 5,
    criteria: [1, 2, 3, 4, 5],
    lastWeights: null,
    lastAggregate: null,
    scenarios: loadScenarios(),
  };
}

export function snapshot(state: ExplorerState, name: string): Scenario | null {
  const weights = state.lastWeights;
  if (!weights) {
    return null;
  }
  const matching =
    state.lastAggregate !== null &&
    state.lastAggregate.alpha === weights.alpha &&
    state.lastAggregate.delta === weights.delta &&
    state.lastAggregate.n === weights.n;
  return {
    name,
    alpha: weights.alpha,
    delta: weights.delta,
    n: weights.n,
    criteria: [...state.criteria],
    weights: [...weights.weights],
    orness: weights.orness,
    dispersion: weights.dispersion,
    tradeoff: weights.tradeoff,
    aggregate: matching ? state.lastAggregate!.value : null,
    savedAt: new Date().toISOString(),
  };
}

export function saveScenarios(scenarios: Scenario[]): void {
  try {
    localStorage.setItem(STORAGE_KEY, JSON.stringify(scenarios));
  } catch {
    // storage may be unavailable (private mode); history just won't persist
  }
}

export function loadScenarios(): Scenario[] {
  try {
    const raw = localStorage.getItem(STORAGE_KEY);
    if (!raw) {
      return [];
    }
    const parsed = JSON.parse(raw);
    return Array.isArray(parsed) ? (parsed as Scenario[]) : [];
  } catch {
    return [];
  }
}

export type ScenarioColumn =
  | "name"
  | "alpha"
  | "delta"
  | "n"
  | "aggregate"
  | "orness"
  | "dispersion"
  | "tradeoff";

export function sortScenarios(
  scenarios: Scenario[],
  column: ScenarioColumn,
  ascending: boolean,
): Scenario[] {
  const sorted = [...scenarios].sort((a, b) => {
    const va = a[column];
    const vb = b[column];
    if (typeof va === "string" || typeof vb === "string") {
      return String(va).localeCompare(String(vb));
    }
    const na = va === null ? Number.NEGATIVE_INFINITY : (va as number);
    const nb = vb === null ? Number.NEGATIVE_INFINITY : (vb as number);
    return na - nb;
  });
  return ascending ? sorted : sorted.reverse();
}
