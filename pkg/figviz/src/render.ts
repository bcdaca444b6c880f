/**
 * Deterministic SVG figures: same input, same bytes. Fixed canvas size,
 * coordinates rounded to 1/100 px, no timestamps or random ids.
 */

import { ScatterRow, SweepRecord } from "./schema.js";

const W = 840;
const H = 560;
const MARGIN = { left: 70, right: 24, top: 36, bottom: 56 };

const PLOT_W = W - MARGIN.left - MARGIN.right;
const PLOT_H = H - MARGIN.top - MARGIN.bottom;

// series colors follow the usual convention for these experiments:
// maximum green, bipartite blue, average red
const SERIES = [
  { key: "mean_max", err: "stderr_max", label: "maximum ratio", color: "#2ca02c" },
  { key: "mean_bipartite", err: "stderr_bipartite", label: "bipartite ratio", color: "#1f77b4" },
  { key: "mean_avg", err: "stderr_avg", label: "average ratio", color: "#d62728" },
] as const;

function fx(v: number): string {
  return v.toFixed(2);
}

interface Scale {
  (v: number): number;
  min: number;
  max: number;
}

function linearScale(min: number, max: number, outMin: number, outMax: number): Scale {
  if (max <= min) {
    max = min + 1;
  }
  const f = ((v: number) => outMin + ((v - min) / (max - min)) * (outMax - outMin)) as Scale;
  f.min = min;
  f.max = max;
  return f;
}

function niceTicks(min: number, max: number, target = 6): number[] {
  const span = max - min;
  const raw = span / target;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  const norm = raw / mag;
  const step = (norm < 1.5 ? 1 : norm < 3 ? 2 : norm < 7 ? 5 : 10) * mag;
  const ticks: number[] = [];
  for (let t = Math.ceil(min / step) * step; t <= max + 1e-9; t += step) {
    ticks.push(Number(t.toPrecision(12)));
  }
  return ticks;
}

function axes(xs: Scale, ys: Scale, xLabel: string, yLabel: string,
              xTicks: number[], yTicks: number[]): string {
  const parts: string[] = [];
  const x0 = MARGIN.left;
  const y0 = H - MARGIN.bottom;
  parts.push(`<line x1="${x0}" y1="${y0}" x2="${W - MARGIN.right}" y2="${y0}" stroke="#333"/>`);
  parts.push(`<line x1="${x0}" y1="${MARGIN.top}" x2="${x0}" y2="${y0}" stroke="#333"/>`);
  for (const t of xTicks) {
    const x = fx(xs(t));
    parts.push(`<line x1="${x}" y1="${y0}" x2="${x}" y2="${y0 + 5}" stroke="#333"/>`);
    parts.push(`<text x="${x}" y="${y0 + 20}" font-size="12" text-anchor="middle">${t}</text>`);
  }
  for (const t of yTicks) {
    const y = fx(ys(t));
    parts.push(`<line x1="${x0 - 5}" y1="${y}" x2="${x0}" y2="${y}" stroke="#333"/>`);
    parts.push(`<text x="${x0 - 9}" y="${fx(ys(t) + 4)}" font-size="12" text-anchor="end">${t}</text>`);
    parts.push(`<line x1="${x0}" y1="${y}" x2="${W - MARGIN.right}" y2="${y}" stroke="#eee"/>`);
  }
  parts.push(`<text x="${fx(MARGIN.left + PLOT_W / 2)}" y="${H - 14}" font-size="14" `
    + `text-anchor="middle">${xLabel}</text>`);
  parts.push(`<text x="18" y="${fx(MARGIN.top + PLOT_H / 2)}" font-size="14" `
    + `text-anchor="middle" transform="rotate(-90 18 ${fx(MARGIN.top + PLOT_H / 2)})">${yLabel}</text>`);
  return parts.join("\n");
}

function svgDoc(body: string): string {
  return `<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" `
    + `viewBox="0 0 ${W} ${H}" font-family="Helvetica, Arial, sans-serif">\n`
    + `<rect width="${W}" height="${H}" fill="white"/>\n${body}\n</svg>\n`;
}

export function threeCurvesSvg(records: SweepRecord[],
                               xLabel = "number of points n",
                               yLabel = "ratio"): string {
  const rs = [...records].sort((a, b) => a.n - b.n);
  const lows: number[] = [];
  const highs: number[] = [];
  for (const r of rs) {
    for (const s of SERIES) {
      lows.push(r[s.key] - r[s.err]);
      highs.push(r[s.key] + r[s.err]);
    }
  }
  const pad = 0.05 * (Math.max(...highs) - Math.min(...lows) || 1);
  const xs = linearScale(rs[0].n, rs[rs.length - 1].n, MARGIN.left, W - MARGIN.right);
  const ys = linearScale(Math.min(...lows) - pad, Math.max(...highs) + pad,
                         H - MARGIN.bottom, MARGIN.top);
  const parts: string[] = [];
  parts.push(axes(xs, ys, xLabel, yLabel,
                  niceTicks(xs.min, xs.max, 8), niceTicks(ys.min, ys.max)));
  for (const s of SERIES) {
    const pts = rs.map((r) => `${fx(xs(r.n))},${fx(ys(r[s.key]))}`).join(" ");
    for (const r of rs) {
      const x = fx(xs(r.n));
      const yl = fx(ys(r[s.key] - r[s.err]));
      const yh = fx(ys(r[s.key] + r[s.err]));
      parts.push(`<line x1="${x}" y1="${yl}" x2="${x}" y2="${yh}" stroke="${s.color}"/>`);
      parts.push(`<line x1="${fx(xs(r.n) - 3)}" y1="${yl}" x2="${fx(xs(r.n) + 3)}" y2="${yl}" stroke="${s.color}"/>`);
      parts.push(`<line x1="${fx(xs(r.n) - 3)}" y1="${yh}" x2="${fx(xs(r.n) + 3)}" y2="${yh}" stroke="${s.color}"/>`);
    }
    parts.push(`<polyline fill="none" stroke="${s.color}" stroke-width="1.8" points="${pts}"/>`);
    for (const r of rs) {
      parts.push(`<circle cx="${fx(xs(r.n))}" cy="${fx(ys(r[s.key]))}" r="2.6" fill="${s.color}"/>`);
    }
  }
  SERIES.forEach((s, i) => {
    const y = MARGIN.top + 10 + 20 * i;
    parts.push(`<line x1="${MARGIN.left + 12}" y1="${y}" x2="${MARGIN.left + 44}" y2="${y}" `
      + `stroke="${s.color}" stroke-width="2"/>`);
    parts.push(`<text x="${MARGIN.left + 50}" y="${y + 4}" font-size="13">${s.label}</text>`);
  });
  return svgDoc(parts.join("\n"));
}

export function scatterSvg(rows: ScatterRow[],
                           xLabel = "bipartite ratio",
                           yLabel = "ratio"): string {
  const vals = rows.flatMap((r) => [r.bipartite, r.other]);
  const lo = Math.min(...vals);
  const hi = Math.max(...vals);
  const pad = 0.05 * (hi - lo || 1);
  const xs = linearScale(lo - pad, hi + pad, MARGIN.left, W - MARGIN.right);
  const ys = linearScale(lo - pad, hi + pad, H - MARGIN.bottom, MARGIN.top);
  const parts: string[] = [];
  const ticks = niceTicks(lo - pad, hi + pad);
  parts.push(axes(xs, ys, xLabel, yLabel, ticks, ticks));
  parts.push(`<line x1="${fx(xs(xs.min))}" y1="${fx(ys(xs.min))}" `
    + `x2="${fx(xs(xs.max))}" y2="${fx(ys(xs.max))}" `
    + `stroke="#888" stroke-dasharray="6 4"/>`);
  for (const r of rows) {
    parts.push(`<circle cx="${fx(xs(r.bipartite))}" cy="${fx(ys(r.other))}" r="2.4" `
      + `fill="#1f77b4" fill-opacity="0.55"/>`);
  }
  return svgDoc(parts.join("\n"));
}
