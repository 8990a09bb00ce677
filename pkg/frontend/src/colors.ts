/** Bar colors assigned by persistence rank; an overlay reuses its bar's color. */

export const PALETTE = [
  "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
  "#17becf", "#e377c2", "#8c564b", "#bcbd22", "#7f7f7f",
];

export function colorForRank(rank: number): string {
  return PALETTE[rank % PALETTE.length];
}
