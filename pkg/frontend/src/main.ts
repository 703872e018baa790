/** Wiring: canvas events -> scene transitions -> service calls -> render. */

import { SolverClient, ServiceError, Superseded, toPair } from "./api.js";
import { clampLength, norm, sub, tangentsParallel, vec } from "./geometry.js";
import {
  Debouncer,
  HandleId,
  hitTest,
} from "./interaction.js";
import { drawScene } from "./render.js";
import {
  SceneState,
  addStep,
  applyError,
  applySolve,
  allSolved,
  defaultFirstStep,
  documentToScene,
  newScene,
  removeLastStep,
  sceneToDocument,
} from "./scene.js";

const canvas = document.getElementById("editor") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const status = document.getElementById("status")!;
const modeSelect = document.getElementById("mode") as HTMLSelectElement;
const alphaInput = document.getElementById("alpha") as HTMLInputElement;

const params = new URLSearchParams(window.location.search);
const client = new SolverClient(params.get("service") ?? "http://127.0.0.1:8765");

let scene: SceneState = newScene(`designer-${Date.now()}`);
scene = { ...scene, steps: [defaultFirstStep()] };
let active: HandleId | null = null;
const debounce = new Debouncer(30);

const setStatus = (text: string) => {
  status.textContent = text;
};

const render = () => drawScene(ctx, scene, active);

/** Re-solve the whole chain through the session endpoints. */
const resolveScene = async (): Promise<void> => {
  const first = scene.steps[0];
  if (!first) return;
  if (tangentsParallel(first.vA, first.vCDir)) {
    scene = applyError(scene, 0, "tangents parallel: pick another direction");
    render();
    return;
  }
  const t0 = performance.now();
  try {
    const payload: Parameters<SolverClient["solveStep"]>[0] = {
      A: toPair(first.A),
      C: toPair(first.C),
      v_A: toPair(first.vA),
      v_C_dir: toPair(first.vCDir),
      session: scene.sessionId,
    };
    if (first.mode === "fixed-alpha") payload.alpha = first.alpha;
    else payload.target_length = norm(first.vA);
    const resp = await client.solveStep(payload, "chain");
    scene = applySolve(scene, 0, resp);
    for (let i = 1; i < scene.steps.length; i++) {
      const step = scene.steps[i];
      const appendPayload: Parameters<SolverClient["appendStep"]>[0] = {
        session: scene.sessionId,
        C: toPair(step.C),
        v_C_dir: toPair(step.vCDir),
      };
      if (step.mode === "fixed-alpha") appendPayload.alpha = step.alpha;
      const r = await client.appendStep(appendPayload, "chain");
      scene = applySolve(scene, i, r);
    }
    scene = { ...scene, hint: null };
    setStatus(`solved ${scene.steps.length} step(s) in ` +
              `${(performance.now() - t0).toFixed(0)} ms`);
  } catch (err) {
    if (err instanceof Superseded) return;
    if (err instanceof ServiceError) {
      await handleSolverError(err);
    } else {
      setStatus(`service unreachable: ${(err as Error).message}`);
    }
  }
  void refreshLimits();
  render();
};

const handleSolverError = async (err: ServiceError): Promise<void> => {
  if (err.kind === "Unreachable" && err.attainable) {
    const [lo, hi] = err.attainable;
    const first = scene.steps[0];
    const clamped = clampLength(first.vA, lo, hi, 5e-3);
    scene = {
      ...scene,
      steps: [{ ...first, vA: clamped }, ...scene.steps.slice(1)],
      hint: `length clamped to attainable (${fmt(lo)}, ${fmt(hi)})`,
    };
    setStatus(scene.hint!);
    await resolveScene();
    return;
  }
  scene = applyError(scene, 0, `${err.kind}: ${err.message.slice(0, 60)}`);
  setStatus(`${err.kind}: ${err.message}`);
};

const fmt = (v: number | null): string =>
  v === null ? "inf" : v.toFixed(3);

const refreshLimits = async (): Promise<void> => {
  const first = scene.steps[0];
  if (!first || tangentsParallel(first.vA, first.vCDir)) return;
  try {
    const lim = await client.limits({
      A: toPair(first.A), C: toPair(first.C),
      v_A: toPair(first.vA), v_C_dir: toPair(first.vCDir),
    });
    scene = { ...scene, attainable: lim.attainable };
    render();
  } catch {
    // limits are advisory; ignore failures during drags
  }
};

// -- pointer interactions ----------------------------------------------------

const canvasPoint = (ev: PointerEvent) => {
  const rect = canvas.getBoundingClientRect();
  return vec(ev.clientX - rect.left, ev.clientY - rect.top);
};

canvas.addEventListener("pointerdown", (ev) => {
  const p = canvasPoint(ev);
  active = hitTest(scene, p);
  if (active) canvas.setPointerCapture(ev.pointerId);
  render();
});

canvas.addEventListener("pointermove", (ev) => {
  if (!active) return;
  const p = canvasPoint(ev);
  const steps = scene.steps.slice();
  const step = { ...steps[active.step] };
  switch (active.kind) {
    case "A":
      step.A = p;
      break;
    case "C":
      step.C = p;
      break;
    case "vA":
      step.vA = sub(p, step.A);
      break;
    case "vC":
      step.vCDir = sub(p, step.C);
      break;
  }
  steps[active.step] = step;
  scene = { ...scene, steps };
  render();
  debounce.schedule(() => void resolveScene());
});

canvas.addEventListener("pointerup", () => {
  if (!active) return;
  active = null;
  debounce.flush();   // final non-debounced solve on release
});

// -- toolbar -----------------------------------------------------------------

document.getElementById("add-step")!.addEventListener("click", () => {
  if (!allSolved(scene)) {
    setStatus("solve the current steps before chaining");
    return;
  }
  const last = scene.steps[scene.steps.length - 1];
  scene = addStep(scene, vec(last.C.x + 140, last.C.y - 60));
  void resolveScene();
});

document.getElementById("remove-step")!.addEventListener("click", () => {
  if (scene.steps.length > 1) {
    scene = removeLastStep(scene);
    void resolveScene();
  }
});

modeSelect.addEventListener("change", () => {
  const first = scene.steps[0];
  scene = {
    ...scene,
    steps: [{ ...first, mode: modeSelect.value as "length" | "fixed-alpha" },
            ...scene.steps.slice(1)],
  };
  void resolveScene();
});

alphaInput.addEventListener("change", () => {
  const first = scene.steps[0];
  scene = {
    ...scene,
    steps: [{ ...first, alpha: Number(alphaInput.value) },
            ...scene.steps.slice(1)],
  };
  if (first.mode === "fixed-alpha") void resolveScene();
});

const download = (name: string, text: string, type: string) => {
  const blob = new Blob([text], { type });
  const url = URL.createObjectURL(blob);
  const a = document.createElement("a");
  a.href = url;
  a.download = name;
  a.click();
  URL.revokeObjectURL(url);
};

document.getElementById("export-doc")!.addEventListener("click", () => {
  if (!allSolved(scene)) {
    setStatus("export blocked: unsolved steps in the scene");
    return;
  }
  download("scene.json", JSON.stringify(sceneToDocument(scene), null, 2),
           "application/json");
});

document.getElementById("export-svg")!.addEventListener("click", async () => {
  if (!allSolved(scene)) {
    setStatus("export blocked: unsolved steps in the scene");
    return;
  }
  const { svg } = await client.sampleSvg(scene.sessionId, true);
  download("scene.svg", svg, "image/svg+xml");
});

document.getElementById("import-doc")!.addEventListener("change", async (ev) => {
  const input = ev.target as HTMLInputElement;
  const file = input.files?.[0];
  if (!file) return;
  try {
    const doc = JSON.parse(await file.text());
    scene = documentToScene(doc, scene.sessionId);
    setStatus(`imported ${scene.steps.length} step(s)`);
    await resolveScene();
  } catch (err) {
    setStatus(`import failed: ${(err as Error).message}`);
  }
  input.value = "";
});

for (const key of ["tangents", "joints", "features", "lengthBand"] as const) {
  const el = document.getElementById(`overlay-${key}`) as HTMLInputElement;
  el.addEventListener("change", () => {
    scene = { ...scene, overlays: { ...scene.overlays, [key]: el.checked } };
    render();
  });
}

void resolveScene();
