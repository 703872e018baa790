/** Client for the loopback solver service.
 *
 * All requests are POSTed JSON; solver failures arrive as structured
 * `{error: {type, message, attainable?}}` payloads with a non-2xx status.
 * In-flight solve requests are superseded latest-wins per channel.
 */

import type { Vec } from "./geometry.js";

export interface TransformRecord {
  scale: number;
  rotation: number;
  translation: [number, number];
  reflect: boolean;
}

export interface SegmentRecord {
  alpha: number;
  lambda: number;
  swap_flag: boolean;
  branch: string;
  contains_cusp: boolean;
  contains_inflection: boolean;
  transform: TransformRecord;
  instance: string;
  iterations: number;
  residual: number;
}

export interface JointRecord {
  position_gap: number;
  tangent_angle_gap: number;
  curvature_gap_rel: number;
  passed: boolean;
}

export interface SolveResponse {
  segment: SegmentRecord;
  polyline: [number, number][];
  first_tangent_length: number;
  end_point: [number, number];
  end_tangent: [number, number] | null;
  feature_point?: [number, number];
  continuity?: {
    passed: boolean;
    joints: JointRecord[];
  };
  segment_count?: number;
}

export interface LimitsResponse {
  r_neg_inf: number;
  r_pos_inf: number;
  instance: string;
  attainable: [number, number | null];
}

export class ServiceError extends Error {
  readonly kind: string;
  readonly attainable: [number | null, number | null] | null;

  constructor(kind: string, message: string,
              attainable: [number | null, number | null] | null = null) {
    super(message);
    this.kind = kind;
    this.attainable = attainable;
  }
}

export class Superseded extends Error {}

type FetchLike = (url: string, init: RequestInit) => Promise<Response>;

export class SolverClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;
  private generation = new Map<string, number>();

  constructor(base = "http://127.0.0.1:8765",
              fetchImpl: FetchLike = (...args) => fetch(...args)) {
    this.base = base.replace(/\/$/, "");
    this.fetchImpl = fetchImpl;
  }

  /** POST helper; `channel` makes older in-flight calls resolve as
   *  Superseded once a newer one is issued on the same channel. */
  private async post<T>(path: string, payload: unknown,
                        channel?: string): Promise<T> {
    let mine = 0;
    if (channel) {
      mine = (this.generation.get(channel) ?? 0) + 1;
      this.generation.set(channel, mine);
    }
    const resp = await this.fetchImpl(this.base + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    if (channel && (this.generation.get(channel) ?? 0) !== mine) {
      throw new Superseded(path);
    }
    const body = await resp.json();
    if (!resp.ok) {
      const err = body?.error ?? {};
      throw new ServiceError(err.type ?? "ServiceError",
                             err.message ?? `HTTP ${resp.status}`,
                             err.attainable ?? null);
    }
    return body as T;
  }

  solveStep(payload: {
    A: [number, number]; C: [number, number];
    v_A: [number, number]; v_C_dir: [number, number];
    alpha?: number; target_length?: number; session?: string;
  }, channel?: string): Promise<SolveResponse> {
    return this.post("/solve-step", payload, channel);
  }

  appendStep(payload: {
    session: string; C: [number, number]; v_C_dir: [number, number];
    alpha?: number;
  }, channel?: string): Promise<SolveResponse> {
    return this.post("/append-step", payload, channel);
  }

  limits(payload: {
    A: [number, number]; C: [number, number];
    v_A: [number, number]; v_C_dir: [number, number];
  }): Promise<LimitsResponse> {
    return this.post("/limits", payload);
  }

  sampleSvg(session: string, overlays = false): Promise<{ svg: string }> {
    return this.post("/sample", { session, format: "svg", overlays });
  }
}

export const toPair = (v: Vec): [number, number] => [v.x, v.y];
