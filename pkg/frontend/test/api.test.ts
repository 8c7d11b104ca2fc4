import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient, ApiFailure } from "../src/api.js";
import { FIXTURES } from "../src/fixtures.js";

const kappa = FIXTURES["kappa"];

function mockFetch(handler: (url: string, init?: RequestInit) => Response | Promise<Response>) {
  const spy = vi.fn(async (url: RequestInfo | URL, init?: RequestInit) =>
    handler(String(url), init),
  );
  vi.stubGlobal("fetch", spy);
  return spy;
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("ApiClient", () => {
  it("posts the scenario and returns the result document", async () => {
    const payload = { schema_version: 1, architecture: { components: [], links: [] } };
    const spy = mockFetch(() => new Response(JSON.stringify(payload), { status: 200 }));
    const client = new ApiClient("http://svc");
    const doc = await client.synthesize({ scenario: kappa.scenario, costs: kappa.costs! });
    expect(doc.schema_version).toBe(1);
    expect(spy).toHaveBeenCalledOnce();
    const [url, init] = spy.mock.calls[0];
    expect(String(url)).toBe("http://svc/api/v1/synthesize");
    const body = JSON.parse(String(init!.body));
    expect(body.scenario.nodes.length).toBe(kappa.scenario.nodes.length);
    expect(body.costs.entries.length).toBe(kappa.costs!.entries!.length);
  });

  it("maps 422 bodies to ApiFailure with violations", async () => {
    mockFetch(
      () =>
        new Response(
          JSON.stringify({
            code: "invalid_scenario",
            message: "scenario has 1 violation(s)",
            elements: ["C1"],
            violations: [{ rule: "consumer_has_outgoing", element: "C1", message: "m" }],
          }),
          { status: 422 },
        ),
    );
    const client = new ApiClient();
    const failure = await client.synthesize({ scenario: kappa.scenario }).catch((e) => e);
    expect(failure).toBeInstanceOf(ApiFailure);
    expect(failure.status).toBe(422);
    expect(failure.code).toBe("invalid_scenario");
    expect(failure.elements).toEqual(["C1"]);
    expect(failure.violations[0].rule).toBe("consumer_has_outgoing");
  });

  it("maps 409 to ApiFailure naming the infeasible node", async () => {
    mockFetch(
      () =>
        new Response(
          JSON.stringify({ code: "infeasible_node", message: "node n1", elements: ["n1"] }),
          { status: 409 },
        ),
    );
    const failure = await new ApiClient().synthesize({ scenario: kappa.scenario }).catch((e) => e);
    expect(failure.status).toBe(409);
    expect(failure.elements).toEqual(["n1"]);
  });

  it("wraps network errors", async () => {
    vi.stubGlobal("fetch", vi.fn(async () => {
      throw new TypeError("connection refused");
    }));
    const failure = await new ApiClient().synthesize({ scenario: kappa.scenario }).catch((e) => e);
    expect(failure).toBeInstanceOf(ApiFailure);
    expect(failure.status).toBe(0);
    expect(failure.code).toBe("network_error");
  });

  it("fetches the validation report", async () => {
    mockFetch(() => new Response(JSON.stringify({ valid: true, violations: [] }), { status: 200 }));
    const report = await new ApiClient().validate(kappa.scenario);
    expect(report.valid).toBe(true);
  });
});
