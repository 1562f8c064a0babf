import { describe, expect, it } from "vitest";
import { EvaluationScheduler, type Clock } from "../src/scheduler.js";

class FakeClock implements Clock {
  private next = 1;
  private tasks = new Map<number, () => void>();

  setTimeout(fn: () => void, _ms: number): number {
    const id = this.next++;
    this.tasks.set(id, fn);
    return id;
  }

  clearTimeout(id: number): void {
    this.tasks.delete(id);
  }

  fire(): void {
    const pending = [...this.tasks.entries()];
    this.tasks.clear();
    for (const [, fn] of pending) fn();
  }

  get pendingCount(): number {
    return this.tasks.size;
  }
}

function deferred<T>() {
  let resolve!: (v: T) => void;
  let reject!: (e: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

describe("EvaluationScheduler", () => {
  it("debounces: only the last scheduled matrix is sent", async () => {
    const clock = new FakeClock();
    const sent: string[][][] = [];
    const results: string[] = [];
    const s = new EvaluationScheduler<string>(
      async (m) => {
        sent.push(m);
        return `r${sent.length}`;
      },
      (r) => results.push(r),
      () => results.push("error"),
      300,
      clock,
    );
    s.schedule([["1"]]);
    s.schedule([["2"]]);
    s.schedule([["3"]]);
    expect(clock.pendingCount).toBe(1);
    clock.fire();
    await Promise.resolve();
    await Promise.resolve();
    expect(sent).toEqual([[["3"]]]);
    expect(results).toEqual(["r1"]);
  });

  it("discards stale responses by sequence number", async () => {
    const clock = new FakeClock();
    const first = deferred<string>();
    const second = deferred<string>();
    const pendings = [first, second];
    const delivered: string[] = [];
    const s = new EvaluationScheduler<string>(
      () => pendings.shift()!.promise,
      (r) => delivered.push(r),
      () => delivered.push("error"),
      300,
      clock,
    );
    s.schedule([["a"]]);
    clock.fire(); // request 1 in flight
    s.schedule([["b"]]);
    clock.fire(); // request 2 in flight
    second.resolve("new");
    await Promise.resolve();
    await Promise.resolve();
    first.resolve("old"); // late arrival of the superseded request
    await Promise.resolve();
    await Promise.resolve();
    expect(delivered).toEqual(["new"]);
  });

  it("stale errors are also discarded", async () => {
    const clock = new FakeClock();
    const first = deferred<string>();
    const second = deferred<string>();
    const pendings = [first, second];
    const delivered: string[] = [];
    const s = new EvaluationScheduler<string>(
      () => pendings.shift()!.promise,
      (r) => delivered.push(r),
      () => delivered.push("error"),
      300,
      clock,
    );
    s.schedule([["a"]]);
    clock.fire();
    s.schedule([["b"]]);
    clock.fire();
    second.resolve("fresh");
    await Promise.resolve();
    await Promise.resolve();
    first.reject(new Error("late failure"));
    await Promise.resolve();
    await Promise.resolve();
    expect(delivered).toEqual(["fresh"]);
  });

  it("cancelPending drops a not-yet-fired evaluation", () => {
    const clock = new FakeClock();
    const sent: string[][][] = [];
    const s = new EvaluationScheduler<string>(
      async (m) => {
        sent.push(m);
        return "x";
      },
      () => undefined,
      () => undefined,
      300,
      clock,
    );
    s.schedule([["1"]]);
    expect(s.pending).toBe(true);
    s.cancelPending();
    clock.fire();
    expect(sent).toEqual([]);
    expect(s.pending).toBe(false);
  });
});
