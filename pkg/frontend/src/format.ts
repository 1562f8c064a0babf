/** Small display helpers; every number shown comes verbatim from the API. */
import type { ReversalEvent } from "./api.js";

export function alternativeName(index: number, labels: string[] | null): string {
  if (labels && labels[index]) return labels[index];
  return String.fromCharCode(97 + index); // a, b, c, ...
}

export function pairLabel(pair: [number, number], labels: string[] | null): string {
  return `${alternativeName(pair[0], labels)}:${alternativeName(pair[1], labels)}`;
}

export function triadLabel(triad: [number, number, number], labels: string[] | null): string {
  return triad.map((t) => alternativeName(t, labels)).join("");
}

export function fixed(x: number, digits = 4): string {
  return x.toFixed(digits);
}

export function probabilityLabel(p: number): string {
  if (p > 0 && p < 1e-4) return p.toExponential(2);
  return p.toFixed(4);
}

export type SortKey = "magnitude" | "pair" | "triad" | "fullRatio" | "triadRatio";

export function sortEvents(
  events: ReversalEvent[],
  key: SortKey,
  descending: boolean,
): ReversalEvent[] {
  const out = [...events];
  const cmp = (a: ReversalEvent, b: ReversalEvent): number => {
    if (key === "pair" || key === "triad") {
      const av = a[key].join(",");
      const bv = b[key].join(",");
      return av < bv ? -1 : av > bv ? 1 : 0;
    }
    return a[key] - b[key];
  };
  out.sort((a, b) => (descending ? -cmp(a, b) : cmp(a, b)));
  return out;
}

/** Grid cells to outline for the strongest reversal: the reversed pair
 * (both orientations) plus the third alternative's two pair cells. */
export function maxReversalCells(events: ReversalEvent[]): Array<[number, number]> {
  if (events.length === 0) return [];
  const top = events.reduce((a, b) => (b.magnitude > a.magnitude ? b : a));
  const [p, q] = top.pair;
  const cells: Array<[number, number]> = [[p, q], [q, p]];
  for (const t of top.triad) {
    if (t !== p && t !== q) {
      cells.push([p, t], [t, p], [q, t], [t, q]);
    }
  }
  return cells;
}
