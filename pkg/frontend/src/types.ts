// Document types exchanged with the synthesis service. These mirror the
// backend JSON schemas; the UI never invents fields of its own.

export type NodeKind = "producer" | "consumer" | "action";
export type ActionKind = "processing" | "merge";
export type DeliveryGuarantee = "at_most_once" | "at_least_once" | "exactly_once";
export type DataType = "structured" | "semistructured" | "unstructured";
export type ComponentClass = "state_centric" | "data_centric_batch" | "data_centric_stream";
export type ComponentRole = ComponentClass | "external_producer" | "external_consumer";
export type Level = "high" | "medium" | "low";
export type Leveled = number | Level;

export const NODE_KINDS: NodeKind[] = ["producer", "consumer", "action"];
export const ACTION_KINDS: ActionKind[] = ["processing", "merge"];
export const GUARANTEES: DeliveryGuarantee[] = ["at_most_once", "at_least_once", "exactly_once"];
export const DATA_TYPES: DataType[] = ["structured", "semistructured", "unstructured"];
export const LEVELS: Level[] = ["high", "medium", "low"];

export interface ActionDoc {
  kind: ActionKind;
  subtype: string;
  input_cardinality: Leveled;
  output_cardinality: Leveled;
}

export interface NodeDoc {
  id: string;
  kind: NodeKind;
  delivery_guarantee?: DeliveryGuarantee;
  action?: ActionDoc;
}

export interface EdgeDoc {
  id: string;
  from: string;
  to: string;
  data_type: DataType;
  frequency: Leveled;
  refinement?: string;
}

export interface ScenarioDoc {
  schema_version?: number;
  nodes: NodeDoc[];
  edges: EdgeDoc[];
}

export interface CostFunctionDoc {
  form: "constant" | "linear" | "power" | "polynomial";
  params: number[];
}

export interface CostEntryDoc {
  action_subtype: string;
  class: ComponentClass;
  unsupported?: boolean;
  cc?: CostFunctionDoc;
  rc?: CostFunctionDoc;
}

export interface CostModelDoc {
  schema_version?: number;
  default?: { cc: CostFunctionDoc; rc?: CostFunctionDoc };
  entries?: CostEntryDoc[];
}

export interface ComponentDoc {
  id: string;
  class: ComponentRole;
  implements_node?: string;
  action?: ActionDoc;
}

export interface LinkDoc {
  id: string;
  from: string;
  to: string;
  persistent: boolean;
  implements_edge: string;
  rationale: string;
}

export interface ArchitectureDoc {
  schema_version?: number;
  components: ComponentDoc[];
  links: LinkDoc[];
}

export interface CostBreakdownDoc {
  state_centric: number | null;
  data_centric_batch: number | null;
  data_centric_stream: number | null;
}

export interface FlowDoc {
  consumer: string;
  nodes: string[];
  edges: string[];
  contexts: Record<string, { incoming: number; outgoing: number }>;
  costs: Record<string, CostBreakdownDoc>;
  assignment: Record<string, ComponentClass>;
  objective: number;
  link_plan: Record<string, { persistent: boolean; rule: string }>;
}

export interface DecisionDoc {
  stage: string;
  rule: string;
  elements: string[];
  explanation: string;
}

export interface ResultDoc {
  schema_version: number;
  architecture: ArchitectureDoc;
  flows: FlowDoc[];
  recommendations: {
    components: Record<string, string[]>;
    links: Record<string, string[]>;
  };
  decisions: DecisionDoc[];
}

export interface ViolationDoc {
  rule: string;
  element: string | null;
  message: string;
}

export interface ValidationReportDoc {
  valid: boolean;
  violations: ViolationDoc[];
}

export interface ApiErrorDoc {
  code: string;
  message: string;
  elements: string[];
  violations?: ViolationDoc[];
}
