/** Chart model: pure data derived from the CSV rows, independent of pixels.
 * One line series per trust dial (lambda), x = noise level, y = average
 * realized ratio; the y-domain always contains the reference value 1.0. */

import type { ExperimentRow } from './csv.js';

export interface SeriesPoint {
  sigma: number;
  avgRatio: number;
}

export interface Series {
  lambda: number;
  label: string;
  points: SeriesPoint[];
}

export interface ChartModel {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  xDomain: [number, number];
  yDomain: [number, number];
  xTicks: number[];
  yTicks: number[];
}

function niceTicks(lo: number, hi: number, want = 5): number[] {
  const span = hi - lo || 1;
  const step = Math.pow(10, Math.floor(Math.log10(span / want)));
  const candidates = [step, 2 * step, 2.5 * step, 5 * step, 10 * step];
  const chosen = candidates.find((s) => span / s <= want) ?? 10 * step;
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / chosen) * chosen; v <= hi + 1e-9; v += chosen) {
    ticks.push(Number(v.toFixed(6)));
  }
  return ticks;
}

export function buildChartModel(rows: ExperimentRow[], title?: string): ChartModel {
  if (rows.length === 0) {
    throw new Error('no rows to chart');
  }
  const byLambda = new Map<number, SeriesPoint[]>();
  for (const row of rows) {
    const points = byLambda.get(row.lambda) ?? [];
    points.push({ sigma: row.sigma, avgRatio: row.avgRatio });
    byLambda.set(row.lambda, points);
  }
  const series: Series[] = [...byLambda.entries()]
    .sort((a, b) => a[0] - b[0])
    .map(([lambda, points]) => ({
      lambda,
      label: `λ=${lambda}`,
      points: points.sort((a, b) => a.sigma - b.sigma),
    }));
  for (const s of series) {
    if (s.points.length === 0) {
      throw new Error(`series ${s.label} has no noise levels`);
    }
  }

  const sigmas = rows.map((row) => row.sigma);
  const ratios = rows.map((row) => row.avgRatio);
  const xDomain: [number, number] = [Math.min(...sigmas), Math.max(...sigmas)];
  // the reference ratio 1.0 is always in view
  let yLo = Math.min(1, ...ratios);
  let yHi = Math.max(1, ...ratios);
  const pad = Math.max(0.02, (yHi - yLo) * 0.08);
  yLo = Math.max(0, yLo - pad);
  yHi = yHi + pad;

  const cell = rows[0];
  return {
    title: title ?? `r=${cell.r} w=${cell.w} (${cell.nSamples} samples/cell)`,
    xLabel: 'noise sigma',
    yLabel: 'avg ratio',
    series,
    xDomain,
    yDomain: [yLo, yHi],
    xTicks: niceTicks(xDomain[0], xDomain[1], 6),
    yTicks: niceTicks(yLo, yHi, 5),
  };
}
