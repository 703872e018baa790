/** Editor scene state: chain steps, their solutions, and the document
 * mapping. Pure data + transitions so everything here is unit-testable;
 * the DOM/canvas layer lives elsewhere.
 */

import { Vec, norm, unit } from "./geometry.js";
import type { JointRecord, SegmentRecord, SolveResponse } from "./api.js";

export type SolveMode = "length" | "fixed-alpha";

export interface StepState {
  /** endpoints; A of step > 0 mirrors the previous end point */
  A: Vec;
  C: Vec;
  /** first tangent: editable on step 0, propagated afterwards */
  vA: Vec;
  /** last tangent direction line (unit-ish, sign as drawn) */
  vCDir: Vec;
  mode: SolveMode;
  alpha: number;
  solution: SegmentRecord | null;
  polyline: [number, number][] | null;
  featurePoint: [number, number] | null;
  endTangent: Vec | null;
  error: string | null;
}

export interface SceneState {
  steps: StepState[];
  joints: JointRecord[];
  continuityPassed: boolean | null;
  sessionId: string;
  overlays: {
    tangents: boolean;
    joints: boolean;
    features: boolean;
    lengthBand: boolean;
  };
  /** attainable |v_A| band of step 0 from the limits endpoint */
  attainable: [number | null, number | null] | null;
  hint: string | null;
}

export const newScene = (sessionId: string): SceneState => ({
  steps: [],
  joints: [],
  continuityPassed: null,
  sessionId,
  overlays: { tangents: true, joints: true, features: true, lengthBand: true },
  attainable: null,
  hint: null,
});

export const defaultFirstStep = (): StepState => ({
  A: { x: 120, y: 300 },
  C: { x: 420, y: 300 },
  vA: { x: 90, y: -110 },
  vCDir: { x: 0.8, y: 0.6 },
  mode: "length",
  alpha: -1.0,
  solution: null,
  polyline: null,
  featurePoint: null,
  endTangent: null,
  error: null,
});

export const addStep = (scene: SceneState, C: Vec): SceneState => {
  const prev = scene.steps[scene.steps.length - 1];
  const A = prev ? prev.C : { x: 120, y: 300 };
  const dir = prev?.endTangent ? unit(prev.endTangent) : { x: 1, y: 0 };
  const step: StepState = {
    A,
    C,
    vA: dir,
    vCDir: dir,
    mode: "length",
    alpha: -1.0,
    solution: null,
    polyline: null,
    featurePoint: null,
    endTangent: null,
    error: null,
  };
  return { ...scene, steps: [...scene.steps, step] };
};

export const removeLastStep = (scene: SceneState): SceneState => ({
  ...scene,
  steps: scene.steps.slice(0, -1),
  joints: scene.joints.slice(0, -1),
});

export const applySolve = (
  scene: SceneState,
  index: number,
  resp: SolveResponse,
): SceneState => {
  const steps = scene.steps.slice();
  const step = { ...steps[index] };
  step.solution = resp.segment;
  step.polyline = resp.polyline;
  step.featurePoint = resp.feature_point ?? null;
  step.endTangent = resp.end_tangent
    ? { x: resp.end_tangent[0], y: resp.end_tangent[1] }
    : null;
  step.error = null;
  steps[index] = step;
  // propagate the next step's anchor so handles stay attached
  if (index + 1 < steps.length) {
    const next = { ...steps[index + 1] };
    next.A = { x: resp.end_point[0], y: resp.end_point[1] };
    if (step.endTangent) next.vA = step.endTangent;
    steps[index + 1] = next;
  }
  const joints = resp.continuity ? resp.continuity.joints : scene.joints;
  return {
    ...scene,
    steps,
    joints,
    continuityPassed: resp.continuity?.passed ?? scene.continuityPassed,
  };
};

export const applyError = (
  scene: SceneState,
  index: number,
  message: string,
): SceneState => {
  const steps = scene.steps.slice();
  steps[index] = { ...steps[index], error: message, polyline: null };
  return { ...scene, steps };
};

export const allSolved = (scene: SceneState): boolean =>
  scene.steps.length > 0 && scene.steps.every((s) => s.solution !== null);

// ---------------------------------------------------------------------------
// Problem-document mapping (schema v1)

export interface ProblemDocument {
  version: 1;
  mode: "chain";
  steps: Array<{
    A?: [number, number];
    C: [number, number];
    v_A?: [number, number];
    v_C_dir: [number, number];
    alpha?: number;
    target_length?: number;
  }>;
}

export const sceneToDocument = (scene: SceneState): ProblemDocument => {
  const steps = scene.steps.map((s, i) => {
    const out: ProblemDocument["steps"][number] = {
      C: [s.C.x, s.C.y],
      v_C_dir: [s.vCDir.x, s.vCDir.y],
    };
    if (i === 0) {
      out.A = [s.A.x, s.A.y];
      out.v_A = [s.vA.x, s.vA.y];
      if (s.mode === "fixed-alpha") out.alpha = s.alpha;
      else out.target_length = norm(s.vA);
    } else if (s.mode === "fixed-alpha") {
      out.alpha = s.alpha;
    }
    return out;
  });
  return { version: 1, mode: "chain", steps };
};

export const documentToScene = (
  doc: ProblemDocument,
  sessionId: string,
): SceneState => {
  if (doc.version !== 1 || doc.mode !== "chain" || !doc.steps.length) {
    throw new Error("unsupported document");
  }
  const scene = newScene(sessionId);
  const steps: StepState[] = doc.steps.map((raw, i) => {
    const first = i === 0;
    const a = raw.A ?? [0, 0];
    const vA = raw.v_A ?? [1, 0];
    let mode: SolveMode = "length";
    let alpha = -1.0;
    if (raw.alpha !== undefined) {
      mode = "fixed-alpha";
      alpha = raw.alpha;
    }
    let vAVec: Vec = { x: vA[0], y: vA[1] };
    if (first && raw.target_length !== undefined) {
      const d = unit(vAVec);
      vAVec = { x: d.x * raw.target_length, y: d.y * raw.target_length };
    }
    return {
      A: { x: a[0], y: a[1] },
      C: { x: raw.C[0], y: raw.C[1] },
      vA: vAVec,
      vCDir: { x: raw.v_C_dir[0], y: raw.v_C_dir[1] },
      mode,
      alpha,
      solution: null,
      polyline: null,
      featurePoint: null,
      endTangent: null,
      error: null,
    };
  });
  return { ...scene, steps };
};

export const roundTripsIdentically = (scene: SceneState): boolean => {
  const doc = sceneToDocument(scene);
  const back = documentToScene(doc, scene.sessionId);
  return JSON.stringify(sceneToDocument(back)) === JSON.stringify(doc);
};
