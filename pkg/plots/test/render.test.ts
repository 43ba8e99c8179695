import assert from 'node:assert/strict';
import { readFileSync } from 'node:fs';
import { test } from 'node:test';
import { inflateSync } from 'node:zlib';

import { buildChartModel } from '../src/chart.js';
import { parseExperimentCsv } from '../src/csv.js';
import { PNG_SIGNATURE, encodePng, makeRaster } from '../src/png.js';
import { renderChart } from '../src/render.js';

test('png encoder emits a decodable image', () => {
  const raster = makeRaster(3, 2);
  raster.pixels[0] = 0; // one dark pixel
  const png = encodePng(raster);
  assert.deepEqual([...png.subarray(0, 8)], [...PNG_SIGNATURE]);
  assert.equal(png.readUInt32BE(16), 3); // width in IHDR
  assert.equal(png.readUInt32BE(20), 2); // height
  // IDAT payload inflates to height * (1 + 4 * width) filtered bytes
  const idatLength = png.readUInt32BE(33);
  const idat = png.subarray(41, 41 + idatLength);
  assert.equal(inflateSync(idat).length, 2 * (1 + 3 * 4));
});

test('chart renders with distinct series colors on a white canvas', () => {
  const rows = parseExperimentCsv(
    readFileSync(new URL('../../test/fixtures/eq_75_70.csv', import.meta.url), 'utf8'),
  );
  const raster = renderChart(buildChartModel(rows));
  const colors = new Set<string>();
  for (let i = 0; i < raster.pixels.length; i += 4) {
    colors.add(raster.pixels.subarray(i, i + 3).join(','));
  }
  assert.ok(colors.has('255,255,255')); // background
  assert.ok(colors.has('31,119,180')); // first series
  assert.ok(colors.has('214,39,40')); // second series
  assert.ok(colors.size >= 5);
});

test('render is deterministic', () => {
  const rows = parseExperimentCsv(
    readFileSync(new URL('../../test/fixtures/eq_75_19.csv', import.meta.url), 'utf8'),
  );
  const a = encodePng(renderChart(buildChartModel(rows)));
  const b = encodePng(renderChart(buildChartModel(rows)));
  assert.ok(a.equals(b));
});
