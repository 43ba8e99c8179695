/** CLI: plot --csv runs/eq_75_70.csv --out figs/eq_75_70.png [--title ...] */

import { mkdirSync, readFileSync, writeFileSync } from 'node:fs';
import { basename, dirname } from 'node:path';

import { buildChartModel } from './chart.js';
import { parseExperimentCsv } from './csv.js';
import { encodePng } from './png.js';
import { renderChart } from './render.js';

interface CliArgs {
  csv: string;
  out: string;
  title?: string;
  width?: number;
  height?: number;
}

export function parseArgs(argv: string[]): CliArgs {
  const args: Partial<CliArgs> = {};
  for (let i = 0; i < argv.length; i++) {
    const flag = argv[i];
    const value = argv[i + 1];
    switch (flag) {
      case '--csv':
        args.csv = value;
        i++;
        break;
      case '--out':
        args.out = value;
        i++;
        break;
      case '--title':
        args.title = value;
        i++;
        break;
      case '--width':
        args.width = Number(value);
        i++;
        break;
      case '--height':
        args.height = Number(value);
        i++;
        break;
      default:
        throw new Error(`unknown flag ${flag}`);
    }
  }
  if (!args.csv || !args.out) {
    throw new Error('usage: plot --csv <file.csv> --out <file.png> [--title t]');
  }
  return args as CliArgs;
}

export function runCli(argv: string[]): string {
  const args = parseArgs(argv);
  const rows = parseExperimentCsv(readFileSync(args.csv, 'utf8'));
  const model = buildChartModel(
    rows,
    args.title ?? basename(args.csv).replace(/\.csv$/, ''),
  );
  const png = encodePng(
    renderChart(model, { width: args.width, height: args.height }),
  );
  mkdirSync(dirname(args.out), { recursive: true });
  writeFileSync(args.out, png);
  return `${args.out}: ${model.series.length} series, ${png.length} bytes`;
}

const entry = process.argv[1] ?? '';
if (entry.endsWith('cli.js') || entry.endsWith('cli.ts')) {
  try {
    console.log(runCli(process.argv.slice(2)));
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : err}`);
    process.exit(1);
  }
}
