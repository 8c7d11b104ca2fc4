// Session state and its transitions. All functions are pure: they return new
// state objects and never touch the DOM, so the whole what-if loop is
// testable without a browser.

import type {
  ApiErrorDoc,
  CostModelDoc,
  DeliveryGuarantee,
  EdgeDoc,
  Leveled,
  NodeDoc,
  ResultDoc,
  ScenarioDoc,
  ViolationDoc,
} from "./types.js";
import { DATA_TYPES, GUARANTEES, LEVELS, NODE_KINDS } from "./types.js";

export interface SessionFailure {
  status: number;
  code: string;
  message: string;
  elements: string[];
  violations: ViolationDoc[];
}

export interface SessionState {
  scenarioName: string | null;
  scenario: ScenarioDoc | null;
  costs: CostModelDoc | null;
  current: ResultDoc | null;
  previous: ResultDoc | null;
  dirty: boolean;
  failure: SessionFailure | null;
}

export function emptySession(): SessionState {
  return {
    scenarioName: null,
    scenario: null,
    costs: null,
    current: null,
    previous: null,
    dirty: false,
    failure: null,
  };
}

// -- client-side schema checks -------------------------------------------------

function isLeveled(value: unknown): value is Leveled {
  if (typeof value === "number") return Number.isFinite(value);
  return typeof value === "string" && (LEVELS as string[]).includes(value);
}

export function checkScenarioDoc(doc: unknown): string[] {
  const errors: string[] = [];
  if (typeof doc !== "object" || doc === null || Array.isArray(doc)) {
    return ["scenario document must be a JSON object"];
  }
  const d = doc as Record<string, unknown>;
  if (!Array.isArray(d.nodes)) errors.push("nodes must be an array");
  if (!Array.isArray(d.edges)) errors.push("edges must be an array");
  if (errors.length) return errors;
  (d.nodes as unknown[]).forEach((raw, i) => {
    const n = raw as Record<string, unknown>;
    if (typeof n.id !== "string" || !n.id) errors.push(`nodes[${i}].id must be a non-empty string`);
    if (!(NODE_KINDS as string[]).includes(n.kind as string)) {
      errors.push(`nodes[${i}].kind must be one of ${NODE_KINDS.join(", ")}`);
    }
    if (n.kind === "consumer" && !(GUARANTEES as string[]).includes(n.delivery_guarantee as string)) {
      errors.push(`nodes[${i}] (consumer) needs a delivery_guarantee`);
    }
    if (n.kind === "action") {
      const a = n.action as Record<string, unknown> | undefined;
      if (!a) {
        errors.push(`nodes[${i}] (action) needs an action object`);
      } else {
        if (typeof a.subtype !== "string" || !a.subtype) errors.push(`nodes[${i}].action.subtype required`);
        for (const key of ["input_cardinality", "output_cardinality"]) {
          if (!isLeveled(a[key])) errors.push(`nodes[${i}].action.${key} must be a number or level`);
        }
      }
    }
  });
  (d.edges as unknown[]).forEach((raw, i) => {
    const e = raw as Record<string, unknown>;
    for (const key of ["id", "from", "to"]) {
      if (typeof e[key] !== "string" || !e[key]) errors.push(`edges[${i}].${key} must be a non-empty string`);
    }
    if (!(DATA_TYPES as string[]).includes(e.data_type as string)) {
      errors.push(`edges[${i}].data_type must be one of ${DATA_TYPES.join(", ")}`);
    }
    if (!isLeveled(e.frequency)) errors.push(`edges[${i}].frequency must be a number or level`);
  });
  return errors;
}

export interface LoadOutcome {
  state: SessionState;
  errors: string[];
}

export function loadScenario(
  doc: unknown,
  name: string,
  costs: CostModelDoc | null = null,
): LoadOutcome {
  const errors = checkScenarioDoc(doc);
  if (errors.length) {
    return { state: emptySession(), errors };
  }
  const state = emptySession();
  state.scenarioName = name;
  state.scenario = JSON.parse(JSON.stringify(doc)) as ScenarioDoc;
  state.costs = costs ? (JSON.parse(JSON.stringify(costs)) as CostModelDoc) : null;
  return { state, errors: [] };
}

export function parseScenarioText(text: string, name: string): LoadOutcome {
  let doc: unknown;
  try {
    doc = JSON.parse(text);
  } catch (err) {
    return { state: emptySession(), errors: [`not valid JSON: ${err}`] };
  }
  return loadScenario(doc, name);
}

export function exportScenarioText(state: SessionState): string {
  if (!state.scenario) throw new Error("no scenario loaded");
  return JSON.stringify(state.scenario, null, 2) + "\n";
}

// -- attribute edits -----------------------------------------------------------

export interface EditOutcome {
  state: SessionState;
  error: string | null;
}

function rejected(state: SessionState, error: string): EditOutcome {
  return { state, error };
}

function parseLeveled(value: unknown): Leveled | null {
  if (typeof value === "number" && Number.isFinite(value)) return value;
  if (typeof value === "string") {
    if ((LEVELS as string[]).includes(value)) return value as Leveled;
    const parsed = Number(value);
    if (value.trim() !== "" && Number.isFinite(parsed)) return parsed;
  }
  return null;
}

/** Stage one attribute change; invalid values are rejected without touching state.
 *
 * A consumer's "frequency" resolves to its single incoming edge, matching how
 * request frequency is modeled.
 */
export function editAttribute(
  state: SessionState,
  elementId: string,
  attribute: string,
  value: unknown,
): EditOutcome {
  if (!state.scenario) return rejected(state, "no scenario loaded");
  const scenario = JSON.parse(JSON.stringify(state.scenario)) as ScenarioDoc;
  const node = scenario.nodes.find((n) => n.id === elementId);
  const edge = scenario.edges.find((e) => e.id === elementId);
  if (!node && !edge) return rejected(state, `unknown element ${elementId}`);

  const error = node
    ? applyNodeEdit(scenario, node, attribute, value)
    : applyEdgeEdit(edge as EdgeDoc, attribute, value);
  if (error) return rejected(state, error);

  return {
    state: { ...state, scenario, dirty: true, failure: null },
    error: null,
  };
}

function applyNodeEdit(scenario: ScenarioDoc, node: NodeDoc, attribute: string, value: unknown): string | null {
  switch (attribute) {
    case "delivery_guarantee": {
      if (node.kind !== "consumer") return `${node.id} is not a consumer`;
      if (!(GUARANTEES as string[]).includes(value as string)) {
        return `delivery_guarantee must be one of ${GUARANTEES.join(", ")}`;
      }
      node.delivery_guarantee = value as DeliveryGuarantee;
      return null;
    }
    case "frequency": {
      // consumer request frequency lives on its single incoming edge
      if (node.kind !== "consumer") return "frequency edits apply to edges or consumers";
      const incoming = scenario.edges.filter((e) => e.to === node.id);
      if (incoming.length !== 1) return `${node.id} does not have exactly one incoming edge`;
      return applyEdgeEdit(incoming[0], "frequency", value);
    }
    case "subtype": {
      if (!node.action) return `${node.id} has no action`;
      if (typeof value !== "string" || !value) return "subtype must be a non-empty string";
      node.action.subtype = value;
      return null;
    }
    case "input_cardinality":
    case "output_cardinality": {
      if (!node.action) return `${node.id} has no action`;
      const parsed = parseLeveled(value);
      if (parsed === null) return `${attribute} must be a number or high/medium/low`;
      if (typeof parsed === "number" && parsed < 1) return `${attribute} must be >= 1`;
      node.action[attribute] = parsed;
      return null;
    }
    default:
      return `cannot edit ${attribute} on node ${node.id}`;
  }
}

function applyEdgeEdit(edge: EdgeDoc, attribute: string, value: unknown): string | null {
  switch (attribute) {
    case "frequency": {
      const parsed = parseLeveled(value);
      if (parsed === null) return "frequency must be a number or high/medium/low";
      if (typeof parsed === "number" && parsed <= 0) return "frequency must be > 0";
      edge.frequency = parsed;
      return null;
    }
    case "data_type": {
      if (!(DATA_TYPES as string[]).includes(value as string)) {
        return `data_type must be one of ${DATA_TYPES.join(", ")}`;
      }
      edge.data_type = value as EdgeDoc["data_type"];
      return null;
    }
    case "refinement": {
      if (value === "" || value === null || value === undefined) {
        delete edge.refinement;
        return null;
      }
      if (typeof value !== "string") return "refinement must be a string";
      edge.refinement = value;
      return null;
    }
    default:
      return `cannot edit ${attribute} on edge ${edge.id}`;
  }
}

// -- synthesis outcomes ----------------------------------------------------------

/** Successful synthesis: the old current becomes the diff baseline. */
export function completeSynthesis(state: SessionState, result: ResultDoc): SessionState {
  return {
    ...state,
    previous: state.current,
    current: result,
    dirty: false,
    failure: null,
  };
}

/** Failed synthesis: previous/current stay untouched so the diff baseline survives. */
export function failSynthesis(state: SessionState, failure: SessionFailure): SessionState {
  return { ...state, failure };
}

export function failureFromError(doc: ApiErrorDoc & { status?: number }, status: number): SessionFailure {
  const elements = new Set<string>(doc.elements ?? []);
  for (const violation of doc.violations ?? []) {
    if (violation.element) elements.add(violation.element);
  }
  return {
    status,
    code: doc.code,
    message: doc.message,
    elements: [...elements].sort(),
    violations: doc.violations ?? [],
  };
}

// -- request scheduling ------------------------------------------------------------

/** At most one synthesis request in flight; the newest submission replaces any
 * queued one and runs when the active request settles. */
export class SynthesisQueue {
  private inFlight = false;
  private pending: (() => Promise<void>) | null = null;

  get busy(): boolean {
    return this.inFlight;
  }

  async submit(task: () => Promise<void>): Promise<void> {
    if (this.inFlight) {
      this.pending = task;
      return;
    }
    this.inFlight = true;
    try {
      await task();
    } finally {
      this.inFlight = false;
      const next = this.pending;
      this.pending = null;
      if (next) {
        await this.submit(next);
      }
    }
  }
}
