import assert from 'node:assert/strict';
import { readFileSync } from 'node:fs';
import { test } from 'node:test';

import { buildChartModel } from '../src/chart.js';
import { parseExperimentCsv } from '../src/csv.js';

const rowsFor = (name: string) =>
  parseExperimentCsv(
    readFileSync(new URL(`../../test/fixtures/${name}`, import.meta.url), 'utf8'),
  );

test('one labeled series per trust dial', () => {
  const model = buildChartModel(rowsFor('eq_75_19.csv'));
  assert.equal(model.series.length, 2);
  assert.deepEqual(
    model.series.map((s) => s.label),
    ['λ=0.2', 'λ=1'],
  );
  for (const series of model.series) {
    assert.equal(series.points.length, 11);
    const sigmas = series.points.map((p) => p.sigma);
    assert.deepEqual(sigmas, [...sigmas].sort((a, b) => a - b));
  }
});

test('y-domain always contains the reference ratio 1.0', () => {
  for (const name of ['eq_75_19.csv', 'eq_75_70.csv']) {
    const model = buildChartModel(rowsFor(name));
    assert.ok(model.yDomain[0] <= 1 && 1 <= model.yDomain[1], name);
    assert.ok(model.yDomain[0] < model.yDomain[1]);
  }
});

test('heavy coalition: trusting the predictor wins at zero noise', () => {
  const model = buildChartModel(rowsFor('eq_75_70.csv'));
  const [low, full] = model.series;
  assert.equal(low.lambda, 0.2);
  assert.ok(low.points[0].avgRatio < full.points[0].avgRatio);
});

test('default title names the cell', () => {
  const model = buildChartModel(rowsFor('eq_75_19.csv'));
  assert.match(model.title, /r=75 w=19/);
});

test('empty rows rejected', () => {
  assert.throws(() => buildChartModel([]), /no rows/);
});
