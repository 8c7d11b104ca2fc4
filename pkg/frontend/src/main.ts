// DOM wiring for the what-if loop: load a scenario, edit attributes, re-run
// synthesis, inspect costs and decisions, diff the before/after architectures.

import { ApiClient, ApiFailure } from "./api.js";
import { diffArchitectures } from "./diff.js";
import { FIXTURES, FIXTURE_NAMES } from "./fixtures.js";
import {
  SessionState,
  SynthesisQueue,
  completeSynthesis,
  editAttribute,
  emptySession,
  exportScenarioText,
  failSynthesis,
  failureFromError,
  loadScenario,
  parseScenarioText,
} from "./state.js";
import { renderArchitectureSvg, renderCostPanel, renderScenarioSvg } from "./render.js";
import type { EdgeDoc, NodeDoc } from "./types.js";
import { DATA_TYPES, GUARANTEES } from "./types.js";

const api = new ApiClient("");
const queue = new SynthesisQueue();

let state: SessionState = emptySession();
let selected: string | null = null;

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

function setBanner(text: string | null, isError = true): void {
  const banner = byId<HTMLDivElement>("banner");
  if (!text) {
    banner.hidden = true;
    return;
  }
  banner.hidden = false;
  banner.textContent = text;
  banner.className = isError ? "banner error" : "banner info";
}

function highlightedElements(): string[] {
  return state.failure ? state.failure.elements : [];
}

function renderAll(): void {
  const scenarioPane = byId<HTMLDivElement>("scenario-graph");
  scenarioPane.innerHTML = state.scenario
    ? renderScenarioSvg(state.scenario, { selected, highlighted: highlightedElements() })
    : '<p class="muted">Load a fixture or import a scenario document.</p>';

  const archPane = byId<HTMLDivElement>("architecture-graph");
  if (state.current) {
    const diff = state.previous
      ? diffArchitectures(state.previous.architecture, state.current.architecture)
      : null;
    archPane.innerHTML = renderArchitectureSvg(state.current.architecture, {
      selected,
      addedComponents: diff ? diff.addedComponents : [],
    });
  } else {
    archPane.innerHTML = '<p class="muted">Run synthesis to see the architecture.</p>';
  }

  byId<HTMLSpanElement>("dirty-marker").hidden = !state.dirty;
  renderInspector();
  renderDecisionLog();
  renderDiffPanel();
  renderFailure();
}

function renderFailure(): void {
  if (!state.failure) {
    setBanner(null);
    return;
  }
  const f = state.failure;
  const detail = f.violations.length
    ? ` ${f.violations.map((v) => `${v.rule}${v.element ? ` (${v.element})` : ""}`).join("; ")}`
    : "";
  const where = f.elements.length ? ` Offending elements: ${f.elements.join(", ")}.` : "";
  setBanner(`${f.status} ${f.code}: ${f.message}.${detail}${where}`);
}

function renderDecisionLog(): void {
  const pane = byId<HTMLDivElement>("decision-log");
  if (!state.current) {
    pane.innerHTML = '<p class="muted">No decisions yet.</p>';
    return;
  }
  const items = state.current.decisions
    .map(
      (d) =>
        `<li><span class="stage">${d.stage}</span> <strong>${d.rule}</strong> ` +
        `[${d.elements.join(", ")}] ${d.explanation}</li>`,
    )
    .join("");
  pane.innerHTML = `<ol>${items}</ol>`;
}

function renderDiffPanel(): void {
  const pane = byId<HTMLDivElement>("diff-panel");
  if (!state.current || !state.previous) {
    pane.innerHTML = '<p class="muted">Run synthesis twice to compare architectures.</p>';
    return;
  }
  const diff = diffArchitectures(state.previous.architecture, state.current.architecture);
  if (diff.empty) {
    pane.innerHTML = '<p class="muted">No changes since the previous run.</p>';
    return;
  }
  const section = (title: string, cls: string, entries: string[]) =>
    entries.length
      ? `<h4 class="${cls}">${title}</h4><ul class="${cls}">` +
        entries.map((e) => `<li>${e}</li>`).join("") +
        "</ul>"
      : "";
  pane.innerHTML =
    section("Added components", "added", diff.addedComponents) +
    section("Removed components", "removed", diff.removedComponents) +
    section("Added links", "added", diff.addedLinks) +
    section("Removed links", "removed", diff.removedLinks) +
    section(
      "Persistence changes",
      "flipped",
      diff.persistenceFlips.map(
        (f) => `${f.id} (${f.from} → ${f.to}) is now ${f.nowPersistent ? "persistent" : "volatile"}`,
      ),
    );
}

function inspectorField(label: string, control: string): string {
  return `<label class="field"><span>${label}</span>${control}</label>`;
}

function renderInspector(): void {
  const pane = byId<HTMLDivElement>("inspector");
  if (!state.scenario || !selected) {
    pane.innerHTML = '<p class="muted">Select a node or edge to edit its attributes.</p>';
    return;
  }
  const node = state.scenario.nodes.find((n) => n.id === selected);
  const edge = state.scenario.edges.find((e) => e.id === selected);
  if (node) {
    pane.innerHTML = nodeInspector(node);
  } else if (edge) {
    pane.innerHTML = edgeInspector(edge);
  } else {
    pane.innerHTML = `<p class="muted">${selected} exists only in the architecture view.</p>`;
    if (state.current) {
      const comp = state.current.architecture.components.find((c) => c.id === selected);
      if (comp && comp.implements_node) {
        pane.innerHTML =
          `<h4>${comp.id}</h4><p>${comp.class}, implements ${comp.implements_node}</p>` +
          renderCostPanel(state.current, comp.implements_node) +
          recommendationNote(comp.id);
      }
    }
    return;
  }
  if (node && state.current) {
    pane.innerHTML += renderCostPanel(state.current, node.id);
  }
  pane.querySelectorAll<HTMLElement>("[data-attr]").forEach((control) => {
    control.addEventListener("change", () => {
      const attribute = control.dataset.attr!;
      const value = (control as HTMLInputElement | HTMLSelectElement).value;
      applyEdit(selected!, attribute, value);
    });
  });
}

function recommendationNote(componentId: string): string {
  const recs = state.current?.recommendations.components[componentId] ?? [];
  return recs.length
    ? `<p>Suggested systems: ${recs.join(", ")}</p>`
    : '<p class="muted">No system recommendation.</p>';
}

function options(values: readonly string[], current: string | undefined): string {
  return values
    .map((v) => `<option value="${v}" ${v === current ? "selected" : ""}>${v}</option>`)
    .join("");
}

function nodeInspector(node: NodeDoc): string {
  let html = `<h4>${node.id}</h4><p class="muted">${node.kind}</p>`;
  if (node.kind === "consumer") {
    html += inspectorField(
      "delivery guarantee",
      `<select data-attr="delivery_guarantee">${options(GUARANTEES, node.delivery_guarantee)}</select>`,
    );
    const incoming = state.scenario!.edges.find((e) => e.to === node.id);
    if (incoming) {
      html += inspectorField(
        "request frequency",
        `<input data-attr="frequency" value="${incoming.frequency}">`,
      );
    }
  }
  if (node.action) {
    html += inspectorField("subtype", `<input data-attr="subtype" value="${node.action.subtype}">`);
    html += inspectorField(
      "input cardinality",
      `<input data-attr="input_cardinality" value="${node.action.input_cardinality}">`,
    );
    html += inspectorField(
      "output cardinality",
      `<input data-attr="output_cardinality" value="${node.action.output_cardinality}">`,
    );
  }
  return html;
}

function edgeInspector(edge: EdgeDoc): string {
  return (
    `<h4>${edge.id}</h4><p class="muted">${edge.from} → ${edge.to}</p>` +
    inspectorField("frequency", `<input data-attr="frequency" value="${edge.frequency}">`) +
    inspectorField(
      "data type",
      `<select data-attr="data_type">${options(DATA_TYPES, edge.data_type)}</select>`,
    ) +
    inspectorField("refinement", `<input data-attr="refinement" value="${edge.refinement ?? ""}">`)
  );
}

function applyEdit(elementId: string, attribute: string, value: unknown): void {
  const outcome = editAttribute(state, elementId, attribute, value);
  if (outcome.error) {
    setBanner(`Edit rejected: ${outcome.error}`);
    return;
  }
  state = outcome.state;
  setBanner(null);
  renderAll();
}

function runSynthesis(): void {
  if (!state.scenario) {
    setBanner("Load a scenario first.");
    return;
  }
  const request = {
    scenario: state.scenario,
    ...(state.costs ? { costs: state.costs } : {}),
  };
  setBanner("Synthesizing…", false);
  void queue.submit(async () => {
    try {
      const result = await api.synthesize(request);
      state = completeSynthesis(state, result);
    } catch (err) {
      if (err instanceof ApiFailure) {
        state = failSynthesis(state, failureFromError(err, err.status));
      } else {
        state = failSynthesis(state, {
          status: 0,
          code: "unexpected_error",
          message: String(err),
          elements: [],
          violations: [],
        });
      }
    }
    renderAll();
  });
}

function wireClicks(paneId: string): void {
  byId<HTMLDivElement>(paneId).addEventListener("click", (event) => {
    const target = (event.target as HTMLElement).closest("[data-element]");
    if (target) {
      selected = target.getAttribute("data-element");
      renderAll();
    }
  });
}

function loadFixtureByName(name: string): void {
  const bundle = FIXTURES[name];
  if (!bundle) {
    state = emptySession();
    selected = null;
    renderAll();
    return;
  }
  const outcome = loadScenario(bundle.scenario, name, bundle.costs);
  if (outcome.errors.length) {
    setBanner(`Fixture ${name} failed schema checks: ${outcome.errors.join("; ")}`);
    return;
  }
  state = outcome.state;
  selected = null;
  setBanner(null);
  renderAll();
}

function init(): void {
  const picker = byId<HTMLSelectElement>("fixture-picker");
  picker.innerHTML =
    '<option value="">(blank)</option>' +
    FIXTURE_NAMES.map((n) => `<option value="${n}">${n}</option>`).join("");
  picker.addEventListener("change", () => loadFixtureByName(picker.value));

  byId<HTMLButtonElement>("synthesize-button").addEventListener("click", runSynthesis);

  byId<HTMLInputElement>("import-input").addEventListener("change", async (event) => {
    const input = event.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) return;
    const outcome = parseScenarioText(await file.text(), file.name);
    if (outcome.errors.length) {
      setBanner(`Import failed: ${outcome.errors.join("; ")}`);
      return;
    }
    state = outcome.state;
    selected = null;
    setBanner(null);
    renderAll();
  });

  byId<HTMLButtonElement>("export-button").addEventListener("click", () => {
    if (!state.scenario) {
      setBanner("Nothing to export.");
      return;
    }
    const blob = new Blob([exportScenarioText(state)], { type: "application/json" });
    const anchor = document.createElement("a");
    anchor.href = URL.createObjectURL(blob);
    anchor.download = `${state.scenarioName ?? "scenario"}.json`;
    anchor.click();
    URL.revokeObjectURL(anchor.href);
  });

  wireClicks("scenario-graph");
  wireClicks("architecture-graph");
  renderAll();
}

document.addEventListener("DOMContentLoaded", init);
