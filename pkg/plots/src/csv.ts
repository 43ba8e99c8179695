/** Parsing for the benchmark CSVs written by the experiments harness. */

export interface ExperimentRow {
  r: number;
  w: number;
  lambda: number;
  sigma: number;
  nSamples: number;
  avgRatio: number;
  nSuboptimal: number;
  seed: number;
}

export const REQUIRED_COLUMNS = [
  'r',
  'w',
  'lambda',
  'sigma',
  'n_samples',
  'avg_ratio',
  'n_suboptimal',
  'seed',
] as const;

export function parseExperimentCsv(text: string): ExperimentRow[] {
  const lines = text.split(/\r?\n/).filter((line) => line.trim().length > 0);
  if (lines.length === 0) {
    throw new Error('empty CSV: no header line');
  }
  const header = lines[0].split(',').map((name) => name.trim());
  for (const column of REQUIRED_COLUMNS) {
    if (!header.includes(column)) {
      throw new Error(`missing required column "${column}"`);
    }
  }
  const index = new Map(header.map((name, i) => [name, i]));
  const rows: ExperimentRow[] = [];
  for (let lineNo = 1; lineNo < lines.length; lineNo++) {
    const fields = lines[lineNo].split(',');
    const cell = (column: string): number => {
      const raw = fields[index.get(column)!];
      const value = Number(raw);
      if (raw === undefined || raw.trim() === '' || !Number.isFinite(value)) {
        throw new Error(
          `line ${lineNo + 1}: column "${column}" is not numeric (got ${JSON.stringify(raw)})`,
        );
      }
      return value;
    };
    rows.push({
      r: cell('r'),
      w: cell('w'),
      lambda: cell('lambda'),
      sigma: cell('sigma'),
      nSamples: cell('n_samples'),
      avgRatio: cell('avg_ratio'),
      nSuboptimal: cell('n_suboptimal'),
      seed: cell('seed'),
    });
  }
  if (rows.length === 0) {
    throw new Error('CSV has a header but no data rows');
  }
  return rows;
}
