/**
 * Deterministic SVG rendering of a sweep: one polyline per n (straight
 * segments between consecutive points, no smoothing or resampling),
 * axes labeled ratio / P(sat), a legend, and optionally one annotated
 * vertical line per curve at its estimated 0.5-crossing.
 */

import { estimateCrossing } from "./crossing.js";
import { groupByN, SchemaError, SweepRow } from "./schema.js";

export interface RenderOptions {
  annotateCrossings?: boolean;
  width?: number;
  height?: number;
}

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];
const MARGIN = { top: 36, right: 150, bottom: 52, left: 64 };

function fmt(value: number): string {
  return value.toFixed(2);
}

function px(value: number): string {
  // fixed decimals keep output byte-stable across platforms
  return value.toFixed(3);
}

function xTicks(lo: number, hi: number): number[] {
  const span = hi - lo;
  const rawStep = span / 8;
  const candidates = [0.005, 0.01, 0.02, 0.05, 0.1, 0.2, 0.5];
  const step = candidates.find((c) => c >= rawStep) ?? 1.0;
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + 1e-12; t += step) {
    ticks.push(t);
  }
  return ticks;
}

export function renderSvg(rows: SweepRow[], options: RenderOptions = {}): string {
  const annotate = options.annotateCrossings ?? true;
  const width = options.width ?? 760;
  const height = options.height ?? 480;
  if (rows.length === 0) {
    throw new SchemaError("schema mismatch: CSV has a header but no data rows");
  }
  const groups = groupByN(rows);
  for (const [n, pts] of groups) {
    const distinctRatios = new Set(pts.map((p) => p.ratio)).size;
    if (distinctRatios < 2) {
      throw new SchemaError(`curve for n=${n} covers ${distinctRatios} ratio(s), need at least 2`);
    }
  }
  const k = rows[0].k;
  const ratios = rows.map((r) => r.ratio);
  const xLo = Math.min(...ratios);
  const xHi = Math.max(...ratios);
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;
  const sx = (ratio: number) => MARGIN.left + ((ratio - xLo) / (xHi - xLo)) * plotW;
  const sy = (p: number) => MARGIN.top + (1 - p) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="sans-serif">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(
    `<text x="${px(MARGIN.left)}" y="22" font-size="15" fill="#222">` +
      `Proportion of satisfiable ${k}-XOR formulas vs clause/variable ratio</text>`,
  );

  // frame and gridline at P = 0.5
  parts.push(
    `<rect x="${px(MARGIN.left)}" y="${px(MARGIN.top)}" width="${px(plotW)}" ` +
      `height="${px(plotH)}" fill="none" stroke="#444" stroke-width="1"/>`,
  );
  parts.push(
    `<line x1="${px(MARGIN.left)}" y1="${px(sy(0.5))}" x2="${px(MARGIN.left + plotW)}" ` +
      `y2="${px(sy(0.5))}" stroke="#bbb" stroke-width="1" stroke-dasharray="2,4"/>`,
  );

  for (const t of xTicks(xLo, xHi)) {
    const x = sx(t);
    parts.push(
      `<line x1="${px(x)}" y1="${px(MARGIN.top + plotH)}" x2="${px(x)}" ` +
        `y2="${px(MARGIN.top + plotH + 6)}" stroke="#444"/>`,
    );
    parts.push(
      `<text x="${px(x)}" y="${px(MARGIN.top + plotH + 22)}" font-size="12" ` +
        `text-anchor="middle" fill="#222">${fmt(t)}</text>`,
    );
  }
  for (const t of [0, 0.25, 0.5, 0.75, 1]) {
    const y = sy(t);
    parts.push(
      `<line x1="${px(MARGIN.left - 6)}" y1="${px(y)}" x2="${px(MARGIN.left)}" ` +
        `y2="${px(y)}" stroke="#444"/>`,
    );
    parts.push(
      `<text x="${px(MARGIN.left - 10)}" y="${px(y + 4)}" font-size="12" ` +
        `text-anchor="end" fill="#222">${fmt(t)}</text>`,
    );
  }
  parts.push(
    `<text x="${px(MARGIN.left + plotW / 2)}" y="${px(height - 14)}" font-size="14" ` +
      `text-anchor="middle" fill="#222">ratio</text>`,
  );
  parts.push(
    `<text x="18" y="${px(MARGIN.top + plotH / 2)}" font-size="14" text-anchor="middle" ` +
      `fill="#222" transform="rotate(-90 18 ${px(MARGIN.top + plotH / 2)})">P(sat)</text>`,
  );

  let colorIndex = 0;
  const legendX = MARGIN.left + plotW + 16;
  let legendY = MARGIN.top + 10;
  for (const [n, pts] of groups) {
    const color = PALETTE[colorIndex % PALETTE.length];
    colorIndex += 1;
    const path = pts
      .map((p, i) => `${i === 0 ? "M" : "L"}${px(sx(p.ratio))},${px(sy(p.proportion))}`)
      .join(" ");
    parts.push(
      `<path class="curve" data-n="${n}" d="${path}" fill="none" stroke="${color}" stroke-width="1.8"/>`,
    );
    parts.push(
      `<line x1="${px(legendX)}" y1="${px(legendY)}" x2="${px(legendX + 22)}" ` +
        `y2="${px(legendY)}" stroke="${color}" stroke-width="2"/>`,
    );
    parts.push(
      `<text x="${px(legendX + 28)}" y="${px(legendY + 4)}" font-size="12" fill="#222">n = ${n}</text>`,
    );
    legendY += 18;

    if (annotate) {
      const crossing = estimateCrossing(pts);
      if (crossing !== null && crossing >= xLo && crossing <= xHi) {
        const x = sx(crossing);
        parts.push(
          `<line class="crossing" data-n="${n}" x1="${px(x)}" y1="${px(MARGIN.top)}" ` +
            `x2="${px(x)}" y2="${px(MARGIN.top + plotH)}" stroke="${color}" ` +
            `stroke-width="1" stroke-dasharray="4,3" opacity="0.8"/>`,
        );
        parts.push(
          `<text x="${px(legendX + 28)}" y="${px(legendY + 2)}" font-size="11" ` +
            `fill="${color}">cross ${crossing.toFixed(4)}</text>`,
        );
        legendY += 16;
      }
    }
  }
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
