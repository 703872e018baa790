/** Canvas drawing: service polylines only, never client-side curve math. */

import { add, angleOf, norm, scale, unit } from "./geometry.js";
import type { SceneState } from "./scene.js";
import { HandleId, handlePosition, listHandles, TANGENT_DISPLAY }
  from "./interaction.js";

const CURVE = "#1d3557";
const HANDLE = "#e63946";
const PROPAGATED = "#8d99ae";
const JOINT_OK = "#2a9d34";
const JOINT_BAD = "#d62828";
const FEATURE = "#f77f00";
const BAND = "rgba(69, 123, 157, 0.18)";

export const drawScene = (
  ctx: CanvasRenderingContext2D,
  scene: SceneState,
  active: HandleId | null,
): void => {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);

  // attainable-length band: annulus sector around A of step 0
  const first = scene.steps[0];
  if (first && scene.overlays.lengthBand && scene.attainable) {
    const [lo, hi] = scene.attainable;
    const rLo = lo ?? 0;
    const rHi = hi ?? Math.max(width, height);
    const a0 = angleOf(first.vA) - 0.6;
    const a1 = angleOf(first.vA) + 0.6;
    ctx.beginPath();
    ctx.arc(first.A.x, first.A.y, rHi, a0, a1);
    ctx.arc(first.A.x, first.A.y, rLo, a1, a0, true);
    ctx.closePath();
    ctx.fillStyle = BAND;
    ctx.fill();
  }

  // curve polylines straight from the service
  for (const step of scene.steps) {
    if (!step.polyline) continue;
    ctx.beginPath();
    step.polyline.forEach(([x, y], i) =>
      i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y));
    ctx.strokeStyle = CURVE;
    ctx.lineWidth = 2;
    ctx.stroke();
  }

  // tangent arrows
  if (scene.overlays.tangents) {
    scene.steps.forEach((step, i) => {
      drawArrow(ctx, step.A, add(step.A, step.vA),
                i === 0 ? HANDLE : PROPAGATED);
      const tip = add(step.C, scale(unit(step.vCDir), TANGENT_DISPLAY));
      drawArrow(ctx, step.C, tip, "#457b9d");
    });
  }

  // joint markers colored by the continuity report
  if (scene.overlays.joints) {
    scene.steps.slice(1).forEach((step, i) => {
      const ok = scene.joints[i]?.passed ?? true;
      ctx.beginPath();
      ctx.arc(step.A.x, step.A.y, 7, 0, Math.PI * 2);
      ctx.strokeStyle = ok ? JOINT_OK : JOINT_BAD;
      ctx.lineWidth = 2.5;
      ctx.stroke();
    });
  }

  // cusp / inflection markers
  if (scene.overlays.features) {
    for (const step of scene.steps) {
      if (!step.featurePoint || !step.solution) continue;
      const [x, y] = step.featurePoint;
      ctx.beginPath();
      if (step.solution.contains_cusp) {
        ctx.moveTo(x - 6, y - 6);
        ctx.lineTo(x + 6, y + 6);
        ctx.moveTo(x - 6, y + 6);
        ctx.lineTo(x + 6, y - 6);
      } else {
        ctx.rect(x - 5, y - 5, 10, 10);
      }
      ctx.strokeStyle = FEATURE;
      ctx.lineWidth = 2;
      ctx.stroke();
    }
  }

  // endpoint + tangent handles
  for (const id of listHandles(scene)) {
    const p = handlePosition(scene, id);
    const isActive = active !== null &&
      active.kind === id.kind && active.step === id.step;
    ctx.beginPath();
    ctx.arc(p.x, p.y, isActive ? 7 : 5, 0, Math.PI * 2);
    ctx.fillStyle = id.kind === "vA" || id.kind === "vC" ? "#457b9d" : HANDLE;
    ctx.fill();
    ctx.strokeStyle = "#ffffff";
    ctx.lineWidth = 1.5;
    ctx.stroke();
  }

  // per-step errors near their endpoints
  ctx.font = "12px system-ui, sans-serif";
  ctx.fillStyle = JOINT_BAD;
  scene.steps.forEach((step) => {
    if (step.error) ctx.fillText(step.error, step.C.x + 10, step.C.y - 10);
  });
};

const drawArrow = (
  ctx: CanvasRenderingContext2D,
  from: { x: number; y: number },
  to: { x: number; y: number },
  color: string,
): void => {
  const d = { x: to.x - from.x, y: to.y - from.y };
  const len = norm(d);
  if (len < 1e-6) return;
  const u = unit(d);
  ctx.beginPath();
  ctx.moveTo(from.x, from.y);
  ctx.lineTo(to.x, to.y);
  const headLen = Math.min(10, len * 0.3);
  const left = {
    x: to.x - headLen * (u.x * 0.866 - u.y * 0.5),
    y: to.y - headLen * (u.y * 0.866 + u.x * 0.5),
  };
  const right = {
    x: to.x - headLen * (u.x * 0.866 + u.y * 0.5),
    y: to.y - headLen * (u.y * 0.866 - u.x * 0.5),
  };
  ctx.moveTo(left.x, left.y);
  ctx.lineTo(to.x, to.y);
  ctx.lineTo(right.x, right.y);
  ctx.strokeStyle = color;
  ctx.lineWidth = 1.8;
  ctx.stroke();
};
