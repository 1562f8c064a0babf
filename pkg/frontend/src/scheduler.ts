/** Debounced evaluation scheduling with stale-response discard.
 *
 * At most one request is in flight; every scheduled evaluation gets a
 * sequence number and only the newest one's response is delivered.
 */

export interface Clock {
  setTimeout(fn: () => void, ms: number): number;
  clearTimeout(id: number): void;
}

const realClock: Clock = {
  setTimeout: (fn, ms) => setTimeout(fn, ms) as unknown as number,
  clearTimeout: (id) => clearTimeout(id),
};

export class EvaluationScheduler<T> {
  private seq = 0;
  private delivered = 0;
  private timer: number | null = null;

  constructor(
    private readonly send: (matrix: string[][]) => Promise<T>,
    private readonly onResult: (result: T) => void,
    private readonly onError: (err: unknown) => void,
    private readonly debounceMs: number = 300,
    private readonly clock: Clock = realClock,
  ) {}

  /** Debounce, then fire; stale responses are dropped by sequence number. */
  schedule(matrix: string[][]): void {
    if (this.timer !== null) this.clock.clearTimeout(this.timer);
    this.timer = this.clock.setTimeout(() => {
      this.timer = null;
      const ticket = ++this.seq;
      this.send(matrix).then(
        (result) => {
          if (ticket > this.delivered) {
            this.delivered = ticket;
            this.onResult(result);
          }
        },
        (err) => {
          if (ticket > this.delivered) {
            this.delivered = ticket;
            this.onError(err);
          }
        },
      );
    }, this.debounceMs);
  }

  cancelPending(): void {
    if (this.timer !== null) {
      this.clock.clearTimeout(this.timer);
      this.timer = null;
    }
  }

  get pending(): boolean {
    return this.timer !== null;
  }
}
