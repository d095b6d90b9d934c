import { describe, expect, it } from 'vitest';

import { barsAreNormalized, toBars } from '../src/chart.js';

const rows = [
  { state: '00', door: 'D1' as const, re: 0.7071, im: 0, probability: 0.5 },
  { state: '10', door: 'D3' as const, re: 0.7071, im: 0, probability: 0.5 },
];

describe('toBars', () => {
  it('maps rows to labeled percent bars', () => {
    const bars = toBars(rows);
    expect(bars).toHaveLength(2);
    expect(bars[0].label).toBe('|00>');
    expect(bars[0].door).toBe('D1');
    expect(bars[0].percent).toBe(50);
  });

  it('sums to one within display rounding', () => {
    expect(barsAreNormalized(toBars(rows))).toBe(true);
    const tilted = [
      { state: '00', door: 'D1' as const, re: 0.866, im: 0, probability: 0.75 },
      { state: '01', door: 'D2' as const, re: 0.5, im: 0, probability: 0.25 },
    ];
    expect(barsAreNormalized(toBars(tilted))).toBe(true);
  });

  it('flags a broken distribution', () => {
    const broken = [
      { state: '00', door: 'D1' as const, re: 0.7, im: 0, probability: 0.4 },
      { state: '10', door: 'D3' as const, re: 0.7, im: 0, probability: 0.4 },
    ];
    expect(barsAreNormalized(toBars(broken))).toBe(false);
  });
});
