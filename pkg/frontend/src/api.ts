/** API client for the evaluation service. */

export interface ReversalEvent {
  pair: [number, number];
  triad: [number, number, number];
  fullRatio: number;
  triadRatio: number;
  magnitude: number;
}

export interface ReversalReport {
  order: number;
  count: number;
  maxPossible: number;
  prop3Rev: number;
  max3Rev: number;
  events: ReversalEvent[];
}

export interface EvaluationResponse {
  schema: number;
  version: string;
  order: number;
  labels: string[] | null;
  eigenvector: number[];
  lambdaMax: number;
  ci: number;
  ri: number;
  cr: number;
  crThreshold: number;
  crConsistent: boolean;
  koczkodaj: number;
  reversalReport: ReversalReport;
  probabilityConsistent: number;
  prConsistent: boolean;
  modelProvenance: Record<string, unknown>;
}

export interface ApiError {
  status: number;
  detail: string;
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (u, i) => fetch(u, i),
  ) {}

  async evaluate(matrix: string[][]): Promise<EvaluationResponse> {
    const res = await this.fetchImpl(`${this.baseUrl}/api/evaluate`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ matrix }),
    });
    if (!res.ok) {
      let detail = res.statusText;
      try {
        const body = (await res.json()) as { detail?: string };
        if (body.detail) detail = body.detail;
      } catch {
        /* non-JSON error body */
      }
      throw { status: res.status, detail } satisfies ApiError;
    }
    return (await res.json()) as EvaluationResponse;
  }
}
