/** Session state: the upper-triangle judgments of one comparison matrix.
 *
 * Only upper-triangle cells are ever stored or edited; the diagonal is
 * fixed at 1 and the lower triangle is always presented as the exact
 * reciprocal string, so reciprocity cannot be violated through the UI.
 */

export const MIN_ORDER = 4;
export const MAX_ORDER = 12;

/** Judgment scale choices, strongest dominance first. */
export const SCALE_CHOICES: string[] = [
  "9", "8", "7", "6", "5", "4", "3", "2", "1",
  "1/2", "1/3", "1/4", "1/5", "1/6", "1/7", "1/8", "1/9",
];

export function reciprocal(value: string): string {
  if (value.startsWith("1/")) return value.slice(2);
  if (value === "1") return "1";
  return `1/${value}`;
}

export function upperKey(i: number, j: number): string {
  return `${i},${j}`;
}

export class SessionState {
  private cells = new Map<string, string>();
  order: number;

  constructor(order: number = 5) {
    if (order < MIN_ORDER || order > MAX_ORDER) {
      throw new Error(`order ${order} outside ${MIN_ORDER}..${MAX_ORDER}`);
    }
    this.order = order;
  }

  setOrder(order: number): void {
    if (order < MIN_ORDER || order > MAX_ORDER) {
      throw new Error(`order ${order} outside ${MIN_ORDER}..${MAX_ORDER}`);
    }
    this.order = order;
    // judgments outside the new size are dropped; the rest survive resizes
    for (const key of [...this.cells.keys()]) {
      const [i, j] = key.split(",").map(Number);
      if (i >= order || j >= order) this.cells.delete(key);
    }
  }

  setCell(i: number, j: number, value: string | null): void {
    if (i === j) throw new Error("diagonal cells are fixed at 1");
    if (i > j) {
      // editing a lower cell stores the reciprocal in the upper triangle
      [i, j] = [j, i];
      value = value === null ? null : reciprocal(value);
    }
    if (value !== null && !SCALE_CHOICES.includes(value)) {
      throw new Error(`value ${value} is not on the judgment scale`);
    }
    const key = upperKey(i, j);
    if (value === null) this.cells.delete(key);
    else this.cells.set(key, value);
  }

  getUpper(i: number, j: number): string | null {
    return this.cells.get(upperKey(i, j)) ?? null;
  }

  /** Display value for any cell: "1" on the diagonal, reciprocal below. */
  display(i: number, j: number): string | null {
    if (i === j) return "1";
    if (i < j) return this.getUpper(i, j);
    const upper = this.getUpper(j, i);
    return upper === null ? null : reciprocal(upper);
  }

  isComplete(): boolean {
    for (let i = 0; i < this.order; i++) {
      for (let j = i + 1; j < this.order; j++) {
        if (!this.cells.has(upperKey(i, j))) return false;
      }
    }
    return true;
  }

  filledCount(): number {
    let count = 0;
    for (let i = 0; i < this.order; i++) {
      for (let j = i + 1; j < this.order; j++) {
        if (this.cells.has(upperKey(i, j))) count++;
      }
    }
    return count;
  }

  upperCellTotal(): number {
    return (this.order * (this.order - 1)) / 2;
  }

  fillAll(value: string): void {
    for (let i = 0; i < this.order; i++) {
      for (let j = i + 1; j < this.order; j++) {
        this.setCell(i, j, value);
      }
    }
  }

  loadMatrix(rows: string[][]): void {
    const n = rows.length;
    this.setOrder(n);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        this.setCell(i, j, rows[i][j]);
      }
    }
  }

  /** Full matrix of exact rational strings; null when incomplete. */
  toMatrix(): string[][] | null {
    if (!this.isComplete()) return null;
    const out: string[][] = [];
    for (let i = 0; i < this.order; i++) {
      const row: string[] = [];
      for (let j = 0; j < this.order; j++) {
        row.push(this.display(i, j) as string);
      }
      out.push(row);
    }
    return out;
  }
}
