/**
 * 0.5-crossing estimate, by the same rule the sweep harness uses:
 * take the last point with proportion >= 0.5; an exact 0.5 hit returns
 * its ratio, otherwise interpolate linearly to the next point (which
 * is below 0.5).  Returns null when the curve never crosses.
 */

export interface CurvePoint {
  ratio: number;
  proportion: number;
}

export function estimateCrossing(points: CurvePoint[]): number | null {
  for (let i = 1; i < points.length; i++) {
    if (points[i].ratio < points[i - 1].ratio) {
      throw new Error("points must be sorted by ratio");
    }
  }
  let last = -1;
  for (let i = 0; i < points.length; i++) {
    if (points[i].proportion >= 0.5) {
      last = i;
    }
  }
  if (last < 0) {
    return null;
  }
  const hi = points[last];
  if (hi.proportion === 0.5) {
    return hi.ratio;
  }
  if (last + 1 >= points.length) {
    return null;
  }
  const lo = points[last + 1];
  const frac = (hi.proportion - 0.5) / (hi.proportion - lo.proportion);
  return hi.ratio + frac * (lo.ratio - hi.ratio);
}
