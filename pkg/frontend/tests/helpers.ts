/**
 * Test doubles: a fake owagen service behind `fetch`, mirroring the real
 * wire formats (status codes, field names) exactly.
 */

import { vi } from "vitest";

export interface FakeApiOptions {
  /** network failures: every request rejects */
  offline?: boolean;
  /** per-request delay in ms (for latest-wins tests) */
  delayMs?: number;
  /** distinctive metric values so verbatim display is detectable */
  orness?: number;
  dispersion?: number;
  tradeoff?: number;
  aggregateValue?: number;
}

export interface FakeApi {
  calls: { url: string; body: unknown }[];
  restore(): void;
}

function json(status: number, doc: unknown): Response {
  return new Response(JSON.stringify(doc), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

function weightsFor(alpha: number, delta: number, n: number): number[] {
  if (Math.abs(alpha - 0.5) < 0.02 && delta > 0.98) {
    return Array(n).fill(1 / n);
  }
  // deterministic, normalised, peaked near alpha — shape does not matter
  const raw = Array.from({ length: n }, (_, i) => {
    const pos = n === 1 ? 0.5 : i / (n - 1);
    return Math.exp(-((pos - alpha) ** 2) / Math.max(0.003, delta * delta));
  });
  const total = raw.reduce((s, v) => s + v, 0);
  return raw.map((v) => v / total);
}

export function installFakeApi(options: FakeApiOptions = {}): FakeApi {
  const calls: { url: string; body: unknown }[] = [];
  const {
    offline = false,
    delayMs = 0,
    orness = 0.4321,
    dispersion = 0.9876,
    tradeoff = 0.8765,
    aggregateValue = 5.4321,
  } = options;

  const handler = (url: string, init?: RequestInit): Promise<Response> => {
    const body = init?.body ? JSON.parse(String(init.body)) : null;
    calls.push({ url, body });

    const work = new Promise<Response>((resolve, reject) => {
      const signal = init?.signal ?? null;
      const fail = () => reject(new DOMException("aborted", "AbortError"));
      if (signal?.aborted) {
        fail();
        return;
      }
      signal?.addEventListener("abort", fail);

      const respond = () => {
        if (offline) {
          reject(new TypeError("fetch failed"));
          return;
        }
        if (url.startsWith("/api/frontier")) {
          const k = Number(new URLSearchParams(url.split("?")[1]).get("points") ?? 201);
          const alphas = Array.from({ length: k }, (_, i) => i / (k - 1));
          resolve(json(200, { alphas, delta_max: alphas.map((a) => 4 * a * (1 - a)) }));
          return;
        }
        const { alpha, delta, n } = body as { alpha: number; delta: number; n: number };
        const deltaMax = 4 * alpha * (1 - alpha);
        if (delta > deltaMax + 1e-9 && delta > 0) {
          resolve(
            json(422, {
              code: "infeasible",
              message: `requested trade-off exceeds delta_max = ${deltaMax}`,
              delta_max: deltaMax,
              alpha,
              delta,
              n,
            }),
          );
          return;
        }
        const weights = weightsFor(alpha, delta, n);
        if (url === "/api/weights") {
          resolve(
            json(200, {
              weights,
              alpha,
              delta,
              n,
              epsilon: 1e-8,
              orness,
              dispersion,
              tradeoff,
              feasible: true,
              method: delta === 0 ? "dirac" : "calibrated",
              distance: 1e-12,
            }),
          );
          return;
        }
        if (url === "/api/aggregate") {
          const criteria = (body as { criteria: number[] }).criteria;
          resolve(
            json(200, {
              value: aggregateValue,
              weights,
              sorted_criteria: [...criteria].sort((a, b) => a - b),
              alpha,
              delta,
              n,
            }),
          );
          return;
        }
        resolve(json(404, { code: "not_found", message: url }));
      };

      if (delayMs > 0) {
        setTimeout(respond, delayMs);
      } else {
        respond();
      }
    });
    return work;
  };

  const original = globalThis.fetch;
  globalThis.fetch = vi.fn(handler) as unknown as typeof fetch;
  return {
    calls,
    restore() {
      globalThis.fetch = original;
    },
  };
}

/** Drain pending promise chains (and zero-delay timers). */
export async function flush(rounds = 6): Promise<void> {
  for (let i = 0; i < rounds; i++) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}
