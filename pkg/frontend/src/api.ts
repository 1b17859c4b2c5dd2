/**
 * Typed client for the owagen HTTP API.
 *
 * Every displayed number comes from these responses; the client never
 * recomputes metrics locally. Each request channel ("weights",
 * "aggregate") keeps at most one request in flight: issuing a new one
 * aborts its predecessor, so stale slider positions can never overwrite
 * fresh results.
 */

export interface WeightsResponse {
  weights: number[];
  alpha: number;
  delta: number;
  n: number;
  epsilon: number;
  /** metric fields are null for the degenerate single-criterion case */
  orness: number | null;
  dispersion: number | null;
  tradeoff: number | null;
  feasible: true;
  method: string;
  distance: number | null;
}

export interface AggregateResponse {
  value: number;
  weights: number[];
  sorted_criteria: number[];
  alpha: number;
  delta: number;
  n: number;
}

export interface FrontierResponse {
  alphas: number[];
  delta_max: number[];
}

export interface InfeasibleBody {
  code: "infeasible";
  message: string;
  delta_max: number;
  alpha: number;
  delta: number;
  n: number;
}

/** Discriminated result: ok, refused by the model, or transport trouble. */
export type ApiResult<T> =
  | { kind: "ok"; body: T }
  | { kind: "infeasible"; body: InfeasibleBody }
  | { kind: "bad_request"; message: string }
  | { kind: "network_error"; message: string }
  | { kind: "stale" };

type Channel = "weights" | "aggregate";

export class ApiClient {
  private baseUrl: string;
  private inflight = new Map<Channel, AbortController>();

  constructor(baseUrl = "") {
    this.baseUrl = baseUrl.replace(/\/$/, "");
  }

  async fetchWeights(
    alpha: number,
    delta: number,
    n: number,
  ): Promise<ApiResult<WeightsResponse>> {
    return this.post<WeightsResponse>("weights", "/api/weights", { alpha, delta, n });
  }

  async fetchAggregate(
    alpha: number,
    delta: number,
    n: number,
    criteria: number[],
  ): Promise<ApiResult<AggregateResponse>> {
    return this.post<AggregateResponse>("aggregate", "/api/aggregate", {
      alpha,
      delta,
      n,
      criteria,
    });
  }

  /** Feasibility parabola samples; not latest-wins (loaded once at startup). */
  async fetchFrontier(points = 201): Promise<ApiResult<FrontierResponse>> {
    try {
      const response = await fetch(`${this.baseUrl}/api/frontier?points=${points}`);
      if (!response.ok) {
        return { kind: "bad_request", message: `frontier request failed (${response.status})` };
      }
      return { kind: "ok", body: (await response.json()) as FrontierResponse };
    } catch (err) {
      return { kind: "network_error", message: describe(err) };
    }
  }

  private async post<T>(
    channel: Channel,
    path: string,
    payload: unknown,
  ): Promise<ApiResult<T>> {
    this.inflight.get(channel)?.abort();
    const controller = new AbortController();
    this.inflight.set(channel, controller);
    try {
      const response = await fetch(`${this.baseUrl}${path}`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(payload),
        signal: controller.signal,
      });
      const body = await response.json();
      if (response.status === 422 && body.code === "infeasible") {
        return { kind: "infeasible", body: body as InfeasibleBody };
      }
      if (!response.ok) {
        return { kind: "bad_request", message: String(body.message ?? response.status) };
      }
      return { kind: "ok", body: body as T };
    } catch (err) {
      if (err instanceof DOMException && err.name === "AbortError") {
        return { kind: "stale" };
      }
      return { kind: "network_error", message: describe(err) };
    } finally {
      if (this.inflight.get(channel) === controller) {
        this.inflight.delete(channel);
      }
    }
  }
}

function describe(err: unknown): string {
  return err instanceof Error ? err.message : String(err);
}
