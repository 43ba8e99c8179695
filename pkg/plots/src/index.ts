export { parseExperimentCsv, REQUIRED_COLUMNS } from './csv.js';
export type { ExperimentRow } from './csv.js';
export { buildChartModel } from './chart.js';
export type { ChartModel, Series, SeriesPoint } from './chart.js';
export { encodePng, makeRaster, PNG_SIGNATURE } from './png.js';
export type { Raster } from './png.js';
export { renderChart } from './render.js';
export { parseArgs, runCli } from './cli.js';
