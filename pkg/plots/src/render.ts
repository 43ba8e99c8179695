/** Rasterize a chart model: axes, gridlines, one polyline per series, a
 * legend, and a dashed reference line at ratio 1.0. */

import type { ChartModel } from './chart.js';
import { GLYPH_HEIGHT, GLYPH_WIDTH, glyphPixel, textWidth } from './font.js';
import { Raster, makeRaster } from './png.js';

export type Color = [number, number, number];

const BLACK: Color = [0, 0, 0];
const GRAY: Color = [200, 200, 200];
const SERIES_COLORS: Color[] = [
  [31, 119, 180],
  [214, 39, 40],
  [44, 160, 44],
  [148, 103, 189],
  [255, 127, 14],
];

export interface RenderOptions {
  width?: number;
  height?: number;
}

function setPixel(raster: Raster, x: number, y: number, color: Color): void {
  if (x < 0 || y < 0 || x >= raster.width || y >= raster.height) return;
  const offset = (y * raster.width + x) * 4;
  raster.pixels[offset] = color[0];
  raster.pixels[offset + 1] = color[1];
  raster.pixels[offset + 2] = color[2];
  raster.pixels[offset + 3] = 255;
}

function drawLine(
  raster: Raster,
  x0: number,
  y0: number,
  x1: number,
  y1: number,
  color: Color,
  thick = 1,
): void {
  // Bresenham with a square pen
  let [cx, cy] = [Math.round(x0), Math.round(y0)];
  const [ex, ey] = [Math.round(x1), Math.round(y1)];
  const dx = Math.abs(ex - cx);
  const dy = -Math.abs(ey - cy);
  const sx = cx < ex ? 1 : -1;
  const sy = cy < ey ? 1 : -1;
  let err = dx + dy;
  for (;;) {
    for (let px = 0; px < thick; px++) {
      for (let py = 0; py < thick; py++) {
        setPixel(raster, cx + px, cy + py, color);
      }
    }
    if (cx === ex && cy === ey) break;
    const e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      cx += sx;
    }
    if (e2 <= dx) {
      err += dx;
      cy += sy;
    }
  }
}

function drawText(
  raster: Raster,
  x: number,
  y: number,
  text: string,
  color: Color,
  scale = 1,
): void {
  let cursor = x;
  for (const char of text) {
    for (let gy = 0; gy < GLYPH_HEIGHT; gy++) {
      for (let gx = 0; gx < GLYPH_WIDTH; gx++) {
        if (!glyphPixel(char, gx, gy)) continue;
        for (let px = 0; px < scale; px++) {
          for (let py = 0; py < scale; py++) {
            setPixel(raster, cursor + gx * scale + px, y + gy * scale + py, color);
          }
        }
      }
    }
    cursor += (GLYPH_WIDTH + 1) * scale;
  }
}

function formatTick(value: number): string {
  return Number(value.toFixed(4)).toString();
}

export function renderChart(model: ChartModel, options: RenderOptions = {}): Raster {
  const width = options.width ?? 720;
  const height = options.height ?? 440;
  const margin = { left: 64, right: 20, top: 30, bottom: 44 };
  const raster = makeRaster(width, height);
  const plotW = width - margin.left - margin.right;
  const plotH = height - margin.top - margin.bottom;

  const [x0, x1] = model.xDomain;
  const [y0, y1] = model.yDomain;
  const sx = (v: number): number =>
    margin.left + (x1 === x0 ? plotW / 2 : ((v - x0) / (x1 - x0)) * plotW);
  const sy = (v: number): number =>
    margin.top + plotH - ((v - y0) / (y1 - y0)) * plotH;

  // gridlines and ticks
  for (const tick of model.xTicks) {
    const px = Math.round(sx(tick));
    drawLine(raster, px, margin.top, px, margin.top + plotH, GRAY);
    const label = formatTick(tick);
    drawText(raster, px - textWidth(label) / 2, margin.top + plotH + 6, label, BLACK);
  }
  for (const tick of model.yTicks) {
    const py = Math.round(sy(tick));
    drawLine(raster, margin.left, py, margin.left + plotW, py, GRAY);
    const label = formatTick(tick);
    drawText(raster, margin.left - textWidth(label) - 6, py - 3, label, BLACK);
  }

  // dashed reference at ratio 1.0
  const refY = Math.round(sy(1));
  for (let px = margin.left; px < margin.left + plotW; px += 8) {
    drawLine(raster, px, refY, Math.min(px + 4, margin.left + plotW), refY, [120, 120, 120]);
  }

  // axes
  drawLine(raster, margin.left, margin.top, margin.left, margin.top + plotH, BLACK);
  drawLine(
    raster,
    margin.left,
    margin.top + plotH,
    margin.left + plotW,
    margin.top + plotH,
    BLACK,
  );

  // series
  model.series.forEach((series, index) => {
    const color = SERIES_COLORS[index % SERIES_COLORS.length];
    const pts = series.points.map((p) => [sx(p.sigma), sy(p.avgRatio)] as const);
    for (let i = 1; i < pts.length; i++) {
      drawLine(raster, pts[i - 1][0], pts[i - 1][1], pts[i][0], pts[i][1], color, 2);
    }
    for (const [px, py] of pts) {
      drawLine(raster, px - 2, py - 2, px + 2, py - 2, color, 1);
      drawLine(raster, px - 2, py - 2, px - 2, py + 2, color, 1);
      drawLine(raster, px + 2, py - 2, px + 2, py + 2, color, 1);
      drawLine(raster, px - 2, py + 2, px + 2, py + 2, color, 1);
    }
  });

  // legend, top-right inside the plot
  const legendX = margin.left + plotW - 90;
  model.series.forEach((series, index) => {
    const color = SERIES_COLORS[index % SERIES_COLORS.length];
    const y = margin.top + 8 + index * 14;
    drawLine(raster, legendX, y + 3, legendX + 18, y + 3, color, 2);
    drawText(raster, legendX + 24, y, series.label, BLACK);
  });

  drawText(raster, margin.left, 10, model.title, BLACK, 1);
  drawText(raster, margin.left + plotW / 2 - textWidth(model.xLabel) / 2,
    height - 12, model.xLabel, BLACK);
  // y label drawn horizontally near the top-left corner
  drawText(raster, 6, margin.top - 12, model.yLabel, BLACK);
  return raster;
}
