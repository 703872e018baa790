/** Hit testing and drag bookkeeping for the canvas handles. */

import { Vec, add, dist } from "./geometry.js";
import type { SceneState } from "./scene.js";

export type HandleId =
  | { kind: "A"; step: number }
  | { kind: "C"; step: number }
  | { kind: "vA"; step: number }     // tangent-vector tip (dir + length)
  | { kind: "vC"; step: number };    // last tangent direction tip

export const HANDLE_RADIUS = 9;
export const TANGENT_DISPLAY = 60;   // px length of the unit C-direction arrow

export const handlePosition = (scene: SceneState, id: HandleId): Vec => {
  const s = scene.steps[id.step];
  switch (id.kind) {
    case "A":
      return s.A;
    case "C":
      return s.C;
    case "vA":
      return add(s.A, s.vA);
    case "vC": {
      const d = s.vCDir;
      const n = Math.hypot(d.x, d.y) || 1;
      return add(s.C, {
        x: (d.x / n) * TANGENT_DISPLAY,
        y: (d.y / n) * TANGENT_DISPLAY,
      });
    }
  }
};

/** Enumerate grabbable handles; the propagated first tangents (and interior
 * anchor points) of continuation steps are read-only by design. */
export const listHandles = (scene: SceneState): HandleId[] => {
  const out: HandleId[] = [];
  scene.steps.forEach((_, i) => {
    if (i === 0) {
      out.push({ kind: "A", step: i });
      out.push({ kind: "vA", step: i });
    }
    out.push({ kind: "C", step: i });
    out.push({ kind: "vC", step: i });
  });
  return out;
};

export const hitTest = (
  scene: SceneState,
  p: Vec,
  radius = HANDLE_RADIUS,
): HandleId | null => {
  const handles = listHandles(scene);
  let best: HandleId | null = null;
  let bestDist = radius;
  for (const id of handles) {
    const d = dist(handlePosition(scene, id), p);
    if (d <= bestDist) {
      best = id;
      bestDist = d;
    }
  }
  return best;
};

/** Trailing-edge debouncer with a flush for the release event. */
export class Debouncer {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private pending: (() => void) | null = null;

  constructor(private readonly delayMs: number) {}

  schedule(fn: () => void): void {
    this.pending = fn;
    if (this.timer === null) {
      this.timer = setTimeout(() => {
        this.timer = null;
        const run = this.pending;
        this.pending = null;
        run?.();
      }, this.delayMs);
    }
  }

  /** Run the newest pending call immediately (drag release). */
  flush(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    const run = this.pending;
    this.pending = null;
    run?.();
  }

  cancel(): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = null;
    this.pending = null;
  }
}
