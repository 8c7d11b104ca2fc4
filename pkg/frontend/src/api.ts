// Thin client for the synthesis service. Every displayed result comes from
// these calls; the UI never computes or mutates architectures locally.

import type {
  CostModelDoc,
  ResultDoc,
  ScenarioDoc,
  ValidationReportDoc,
  ViolationDoc,
} from "./types.js";

export class ApiFailure extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly elements: string[] = [],
    readonly violations: ViolationDoc[] = [],
  ) {
    super(message);
  }
}

async function failureFrom(response: Response): Promise<ApiFailure> {
  let code = "unknown_error";
  let message = `service responded with status ${response.status}`;
  let elements: string[] = [];
  let violations: ViolationDoc[] = [];
  try {
    const body = await response.json();
    code = body.code ?? code;
    message = body.message ?? message;
    elements = body.elements ?? [];
    violations = body.violations ?? [];
  } catch {
    // non-JSON error body; keep the generic message
  }
  return new ApiFailure(response.status, code, message, elements, violations);
}

export interface SynthesizeRequest {
  scenario: ScenarioDoc;
  costs?: CostModelDoc;
  catalog?: unknown;
  levels?: unknown;
}

export class ApiClient {
  constructor(readonly baseUrl: string = "") {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiFailure(0, "network_error", `cannot reach the synthesis service: ${err}`);
    }
    if (!response.ok) {
      throw await failureFrom(response);
    }
    return (await response.json()) as T;
  }

  synthesize(request: SynthesizeRequest): Promise<ResultDoc> {
    return this.post<ResultDoc>("/api/v1/synthesize", request);
  }

  validate(scenario: ScenarioDoc): Promise<ValidationReportDoc> {
    return this.post<ValidationReportDoc>("/api/v1/validate", { scenario });
  }

  async catalog(): Promise<unknown> {
    const response = await fetch(this.baseUrl + "/api/v1/catalog");
    if (!response.ok) {
      throw await failureFrom(response);
    }
    return response.json();
  }
}
