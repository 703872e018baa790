import { describe, expect, it } from "vitest";

import { ServiceError, SolverClient, Superseded } from "../src/api.js";

type Recorded = { url: string; body: any };

const mockFetch = (
  handler: (url: string, body: any) => { status: number; body: any },
  recorded: Recorded[] = [],
  delayByCall: number[] = [],
) => {
  let call = 0;
  return async (url: string, init: RequestInit): Promise<Response> => {
    const body = JSON.parse(init.body as string);
    recorded.push({ url, body });
    const delay = delayByCall[call++] ?? 0;
    if (delay) await new Promise((r) => setTimeout(r, delay));
    const res = handler(url, body);
    return {
      ok: res.status >= 200 && res.status < 300,
      status: res.status,
      json: async () => res.body,
    } as Response;
  };
};

const okSolve = {
  segment: { alpha: -1, lambda: 0.1 },
  polyline: [[0, 0], [1, 1]],
  first_tangent_length: 1,
  end_point: [1, 1],
  end_tangent: [1, 0],
};

describe("SolverClient", () => {
  it("posts payloads and parses solve responses", async () => {
    const recorded: Recorded[] = [];
    const client = new SolverClient("http://svc",
      mockFetch(() => ({ status: 200, body: okSolve }), recorded));
    const out = await client.solveStep({
      A: [0, 0], C: [1, 0], v_A: [1, 0], v_C_dir: [0, 1], alpha: -1,
    });
    expect(out.polyline).toHaveLength(2);
    expect(recorded[0].url).toBe("http://svc/solve-step");
    expect(recorded[0].body.alpha).toBe(-1);
  });

  it("raises ServiceError with the attainable range", async () => {
    const client = new SolverClient("http://svc", mockFetch(() => ({
      status: 422,
      body: { error: { type: "Unreachable", message: "nope",
                       attainable: [0, 1.5] } },
    })));
    await expect(client.solveStep({
      A: [0, 0], C: [1, 0], v_A: [9, 0], v_C_dir: [0, 1], target_length: 9,
    })).rejects.toMatchObject({ kind: "Unreachable", attainable: [0, 1.5] });
    await expect(client.limits({
      A: [0, 0], C: [1, 0], v_A: [9, 0], v_C_dir: [0, 1],
    })).rejects.toBeInstanceOf(ServiceError);
  });

  it("supersedes stale in-flight requests on the same channel", async () => {
    const client = new SolverClient("http://svc", mockFetch(
      () => ({ status: 200, body: okSolve }), [], [25, 0]));
    const slow = client.solveStep({
      A: [0, 0], C: [1, 0], v_A: [1, 0], v_C_dir: [0, 1], alpha: -1,
    }, "drag");
    const fast = client.solveStep({
      A: [0, 0], C: [2, 0], v_A: [1, 0], v_C_dir: [0, 1], alpha: -1,
    }, "drag");
    await expect(fast).resolves.toBeTruthy();
    await expect(slow).rejects.toBeInstanceOf(Superseded);
  });
});
