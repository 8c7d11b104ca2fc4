import { readFileSync } from "node:fs";

import { describe, expect, it } from "vitest";

import { FIXTURES } from "../src/fixtures.js";
import { renderArchitectureSvg, renderCostPanel, renderScenarioSvg } from "../src/render.js";
import type { ResultDoc } from "../src/types.js";

const kappaResult: ResultDoc = JSON.parse(
  readFileSync(new URL("./fixtures/kappa_before.json", import.meta.url), "utf-8"),
);

describe("renderScenarioSvg", () => {
  it("draws every node and edge with clickable ids", () => {
    const scenario = FIXTURES["lambda"].scenario;
    const svg = renderScenarioSvg(scenario);
    for (const node of scenario.nodes) {
      expect(svg).toContain(`data-element="${node.id}"`);
    }
    for (const edge of scenario.edges) {
      expect(svg).toContain(`data-element="${edge.id}"`);
    }
  });

  it("marks the selected element", () => {
    const svg = renderScenarioSvg(FIXTURES["kappa"].scenario, { selected: "n1" });
    expect(svg).toMatch(/class="node action selected" data-element="n1"/);
  });

  it("is deterministic", () => {
    const scenario = FIXTURES["facebook"].scenario;
    expect(renderScenarioSvg(scenario)).toBe(renderScenarioSvg(scenario));
  });
});

describe("renderArchitectureSvg", () => {
  it("styles persistent and volatile links differently", () => {
    const arch = {
      components: [
        { id: "P1", class: "external_producer" as const },
        { id: "n1.batch", class: "data_centric_batch" as const, implements_node: "n1" },
        { id: "C1", class: "external_consumer" as const },
      ],
      links: [
        { id: "e1", from: "P1", to: "n1.batch", persistent: true, implements_edge: "e1", rationale: "P2: x" },
        { id: "e2", from: "n1.batch", to: "C1", persistent: false, implements_edge: "e2", rationale: "V1: y" },
      ],
    };
    const svg = renderArchitectureSvg(arch);
    expect(svg).toMatch(/class="edge persistent" data-element="e1"/);
    expect(svg).toMatch(/class="edge volatile" data-element="e2"/);
    expect(svg).toContain("e1 [persistent]");
  });

  it("marks components added since the previous run", () => {
    const svg = renderArchitectureSvg(kappaResult.architecture, { addedComponents: ["n1.sc"] });
    expect(svg).toMatch(/class="component state_centric added" data-element="n1\.sc"/);
  });

  it("draws boundary components as ellipses", () => {
    const svg = renderArchitectureSvg(kappaResult.architecture);
    expect(svg).toMatch(/class="component external_producer boundary" data-element="P1"/);
    const producerGroup = svg.split('data-element="P1"')[1];
    expect(producerGroup.startsWith(">" + '<ellipse')).toBe(true);
  });
});

describe("renderCostPanel", () => {
  it("shows all three candidate costs per flow and marks the winner", () => {
    const html = renderCostPanel(kappaResult, "n1");
    expect(html).toContain("<table");
    expect(html).toContain("unsupported"); // batch is unsupported in the kappa model
    expect(html).toContain("chosen");
    expect(html.match(/<tr>/g)!.length).toBeGreaterThanOrEqual(2); // one row per flow
  });

  it("explains when a node has no breakdown", () => {
    const html = renderCostPanel(kappaResult, "P1");
    expect(html).toContain("not an internal node");
  });
});
