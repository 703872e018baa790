export interface Vec {
  x: number;
  y: number;
}

export const vec = (x: number, y: number): Vec => ({ x, y });

export const add = (a: Vec, b: Vec): Vec => ({ x: a.x + b.x, y: a.y + b.y });

export const sub = (a: Vec, b: Vec): Vec => ({ x: a.x - b.x, y: a.y - b.y });

export const scale = (a: Vec, k: number): Vec => ({ x: a.x * k, y: a.y * k });

export const norm = (a: Vec): number => Math.hypot(a.x, a.y);

export const dist = (a: Vec, b: Vec): number => norm(sub(a, b));

export const unit = (a: Vec): Vec => {
  const n = norm(a);
  return n === 0 ? { x: 1, y: 0 } : { x: a.x / n, y: a.y / n };
};

export const cross = (a: Vec, b: Vec): number => a.x * b.y - a.y * b.x;

export const dot = (a: Vec, b: Vec): number => a.x * b.x + a.y * b.y;

export const fromAngle = (rad: number, length = 1): Vec => ({
  x: length * Math.cos(rad),
  y: length * Math.sin(rad),
});

export const angleOf = (a: Vec): number => Math.atan2(a.y, a.x);

/** Direction and length of v snapped so |v| sits inside [lo, hi]. */
export const clampLength = (
  v: Vec,
  lo: number | null,
  hi: number | null,
  margin = 1e-3,
): Vec => {
  const n = norm(v);
  if (n === 0) return v;
  let target = n;
  if (lo !== null && target <= lo) target = lo * (1 + margin);
  if (hi !== null && target >= hi) target = hi * (1 - margin);
  return target === n ? v : scale(unit(v), target);
};

/** True when the tangent at A is (numerically) parallel to the C line. */
export const tangentsParallel = (vA: Vec, vCDir: Vec): boolean => {
  const c = Math.abs(cross(unit(vA), unit(vCDir)));
  return c < 1e-9;
};
