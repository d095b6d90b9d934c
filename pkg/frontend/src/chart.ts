// Amplitude bars for the scheme-1 reveal: two bars, probabilities from the
// server, widths in percent.

import type { AmplitudeRow } from './api.js';

export interface ChartBar {
  label: string;
  door: string;
  probability: number;
  percent: number; // rendered width, 0-100
}

export function toBars(rows: AmplitudeRow[]): ChartBar[] {
  return rows.map((r) => ({
    label: `|${r.state}>`,
    door: r.door ?? '--',
    probability: r.probability,
    percent: Math.round(r.probability * 1000) / 10,
  }));
}

// display-rounding tolerance: each percent is rounded to 0.1
export function barsAreNormalized(bars: ChartBar[]): boolean {
  const total = bars.reduce((acc, b) => acc + b.probability, 0);
  return Math.abs(total - 1) < 0.005;
}
