// Bundled reference scenarios and cost models, copied verbatim from the
// backend package fixtures (src/archsynth/fixtures). Regenerate with
// scripts/sync_fixtures.py after changing them.

import type { CostModelDoc, ScenarioDoc } from "./types.js";

export interface FixtureBundle {
  scenario: ScenarioDoc;
  costs: CostModelDoc | null;
}

export const FIXTURES: Record<string, FixtureBundle> = {
  "data_lake": {
    scenario: {
      "schema_version": 1,
      "nodes": [
        {
          "id": "P1",
          "kind": "producer"
        },
        {
          "id": "P2",
          "kind": "producer"
        },
        {
          "id": "P3",
          "kind": "producer"
        },
        {
          "id": "n1",
          "kind": "action",
          "action": {
            "kind": "merge",
            "subtype": "raw_storage",
            "input_cardinality": "medium",
            "output_cardinality": "low"
          }
        },
        {
          "id": "C1",
          "kind": "consumer",
          "delivery_guarantee": "at_least_once"
        }
      ],
      "edges": [
        {
          "id": "e1",
          "from": "P1",
          "to": "n1",
          "data_type": "structured",
          "frequency": "high"
        },
        {
          "id": "e2",
          "from": "P2",
          "to": "n1",
          "data_type": "semistructured",
          "refinement": "document",
          "frequency": "medium"
        },
        {
          "id": "e3",
          "from": "P3",
          "to": "n1",
          "data_type": "unstructured",
          "frequency": "low"
        },
        {
          "id": "e4",
          "from": "n1",
          "to": "C1",
          "data_type": "semistructured",
          "frequency": "low"
        }
      ]
    } as ScenarioDoc,
    costs: {
      "schema_version": 1,
      "default": {
        "cc": {
          "form": "linear",
          "params": [
            1,
            0
          ]
        },
        "rc": {
          "form": "linear",
          "params": [
            1,
            0
          ]
        }
      },
      "entries": [
        {
          "action_subtype": "raw_storage",
          "class": "data_centric_stream",
          "unsupported": true
        },
        {
          "action_subtype": "raw_storage",
          "class": "data_centric_batch",
          "unsupported": true
        },
        {
          "action_subtype": "raw_storage",
          "class": "state_centric",
          "cc": {
            "form": "linear",
            "params": [
              1,
              0
            ]
          },
          "rc": {
            "form": "linear",
            "params": [
              1,
              0
            ]
          }
        }
      ]
    } as CostModelDoc,
  },
  "lambda": {
    scenario: {
      "schema_version": 1,
      "nodes": [
        {
          "id": "P1",
          "kind": "producer"
        },
        {
          "id": "n1",
          "kind": "action",
          "action": {
            "kind": "processing",
            "subtype": "light_transform",
            "input_cardinality": "low",
            "output_cardinality": "low"
          }
        },
        {
          "id": "n2",
          "kind": "action",
          "action": {
            "kind": "processing",
            "subtype": "heavy_aggregation",
            "input_cardinality": "high",
            "output_cardinality": "low"
          }
        },
        {
          "id": "n3",
          "kind": "action",
          "action": {
            "kind": "merge",
            "subtype": "result_merge",
            "input_cardinality": "medium",
            "output_cardinality": "low"
          }
        },
        {
          "id": "C1",
          "kind": "consumer",
          "delivery_guarantee": "at_most_once"
        },
        {
          "id": "C2",
          "kind": "consumer",
          "delivery_guarantee": "at_most_once"
        }
      ],
      "edges": [
        {
          "id": "e1",
          "from": "P1",
          "to": "n1",
          "data_type": "structured",
          "frequency": "high"
        },
        {
          "id": "e2",
          "from": "P1",
          "to": "n2",
          "data_type": "structured",
          "frequency": "high"
        },
        {
          "id": "e3",
          "from": "n1",
          "to": "n3",
          "data_type": "structured",
          "frequency": "high"
        },
        {
          "id": "e4",
          "from": "n2",
          "to": "n3",
          "data_type": "structured",
          "frequency": "low"
        },
        {
          "id": "e5",
          "from": "n3",
          "to": "C1",
          "data_type": "structured",
          "frequency": "high"
        },
        {
          "id": "e6",
          "from": "n3",
          "to": "C2",
          "data_type": "structured",
          "frequency": "low"
        }
      ]
    } as ScenarioDoc,
    costs: {
      "schema_version": 1,
      "default": {
        "cc": {
          "form": "linear",
          "params": [
            1,
            0
          ]
        },
        "rc": {
          "form": "linear",
          "params": [
            1,
            0
          ]
        }
      },
      "entries": [
        {
          "action_subtype": "result_merge",
          "class": "data_centric_stream",
          "unsupported": true
        },
        {
          "action_subtype": "result_merge",
          "class": "data_centric_batch",
          "unsupported": true
        },
        {
          "action_subtype": "result_merge",
          "class": "state_centric",
          "cc": {
            "form": "linear",
            "params": [
              1,
              0
            ]
          },
          "rc": {
            "form": "linear",
            "params": [
              1,
              0
            ]
          }
        }
      ]
    } as CostModelDoc,
  },
  "liquid": {
    scenario: {
      "schema_version": 1,
      "nodes": [
        {
          "id": "P1",
          "kind": "producer"
        },
        {
          "id": "P2",
          "kind": "producer"
        },
        {
          "id": "n1",
          "kind": "action",
          "action": {
            "kind": "merge",
            "subtype": "incremental_processing",
            "input_cardinality": "medium",
            "output_cardinality": "low"
          }
        },
        {
          "id": "C1",
          "kind": "consumer",
          "delivery_guarantee": "at_most_once"
        }
      ],
      "edges": [
        {
          "id": "e1",
          "from": "P1",
          "to": "n1",
          "data_type": "structured",
          "frequency": "high"
        },
        {
          "id": "e2",
          "from": "P2",
          "to": "n1",
          "data_type": "semistructured",
          "frequency": "high"
        },
        {
          "id": "e3",
          "from": "n1",
          "to": "C1",
          "data_type": "structured",
          "frequency": "high"
        }
      ]
    } as ScenarioDoc,
    costs: null,
  },
  "kappa": {
    scenario: {
      "schema_version": 1,
      "nodes": [
        {
          "id": "P1",
          "kind": "producer"
        },
        {
          "id": "n1",
          "kind": "action",
          "action": {
            "kind": "processing",
            "subtype": "incremental_analytics",
            "input_cardinality": "medium",
            "output_cardinality": "low"
          }
        },
        {
          "id": "C1",
          "kind": "consumer",
          "delivery_guarantee": "at_most_once"
        },
        {
          "id": "C2",
          "kind": "consumer",
          "delivery_guarantee": "at_most_once"
        }
      ],
      "edges": [
        {
          "id": "e1",
          "from": "P1",
          "to": "n1",
          "data_type": "structured",
          "frequency": "high"
        },
        {
          "id": "e2",
          "from": "n1",
          "to": "C1",
          "data_type": "structured",
          "frequency": "high"
        },
        {
          "id": "e3",
          "from": "n1",
          "to": "C2",
          "data_type": "structured",
          "frequency": "low"
        }
      ]
    } as ScenarioDoc,
    costs: {
      "schema_version": 1,
      "default": {
        "cc": {
          "form": "linear",
          "params": [
            1,
            0
          ]
        },
        "rc": {
          "form": "linear",
          "params": [
            1,
            0
          ]
        }
      },
      "entries": [
        {
          "action_subtype": "incremental_analytics",
          "class": "data_centric_batch",
          "unsupported": true
        },
        {
          "action_subtype": "incremental_analytics",
          "class": "data_centric_stream",
          "cc": {
            "form": "linear",
            "params": [
              1,
              0
            ]
          }
        },
        {
          "action_subtype": "incremental_analytics",
          "class": "state_centric",
          "cc": {
            "form": "linear",
            "params": [
              0.95,
              0
            ]
          },
          "rc": {
            "form": "linear",
            "params": [
              1,
              0
            ]
          }
        }
      ]
    } as CostModelDoc,
  },
  "facebook": {
    scenario: {
      "schema_version": 1,
      "nodes": [
        {
          "id": "P1",
          "kind": "producer"
        },
        {
          "id": "P2",
          "kind": "producer"
        },
        {
          "id": "n1",
          "kind": "action",
          "action": {
            "kind": "processing",
            "subtype": "log_aggregation",
            "input_cardinality": 10,
            "output_cardinality": 1
          }
        },
        {
          "id": "n2",
          "kind": "action",
          "action": {
            "kind": "merge",
            "subtype": "log_user_join",
            "input_cardinality": 100,
            "output_cardinality": 100
          }
        },
        {
          "id": "n3",
          "kind": "action",
          "action": {
            "kind": "processing",
            "subtype": "simple_analytics",
            "input_cardinality": 1,
            "output_cardinality": 1
          }
        },
        {
          "id": "n4",
          "kind": "action",
          "action": {
            "kind": "processing",
            "subtype": "complex_analytics",
            "input_cardinality": 100,
            "output_cardinality": 10
          }
        },
        {
          "id": "n5",
          "kind": "action",
          "action": {
            "kind": "processing",
            "subtype": "complex_analytics",
            "input_cardinality": 100,
            "output_cardinality": 10
          }
        },
        {
          "id": "C1",
          "kind": "consumer",
          "delivery_guarantee": "at_most_once"
        },
        {
          "id": "C2",
          "kind": "consumer",
          "delivery_guarantee": "at_most_once"
        },
        {
          "id": "C3",
          "kind": "consumer",
          "delivery_guarantee": "at_most_once"
        }
      ],
      "edges": [
        {
          "id": "e1",
          "from": "P1",
          "to": "n1",
          "data_type": "structured",
          "frequency": 1000
        },
        {
          "id": "e2",
          "from": "n1",
          "to": "n2",
          "data_type": "structured",
          "frequency": 0.0033333333333333335
        },
        {
          "id": "e3",
          "from": "P2",
          "to": "n2",
          "data_type": "structured",
          "frequency": 1.1574074074074073e-05
        },
        {
          "id": "e4",
          "from": "n2",
          "to": "n3",
          "data_type": "structured",
          "frequency": 1000
        },
        {
          "id": "e5",
          "from": "n3",
          "to": "C1",
          "data_type": "structured",
          "frequency": 1000
        },
        {
          "id": "e6",
          "from": "n2",
          "to": "n4",
          "data_type": "structured",
          "frequency": 0.0002777777777777778
        },
        {
          "id": "e7",
          "from": "n4",
          "to": "C2",
          "data_type": "structured",
          "frequency": 0.0002777777777777778
        },
        {
          "id": "e8",
          "from": "n2",
          "to": "n5",
          "data_type": "structured",
          "frequency": 1.1574074074074073e-05
        },
        {
          "id": "e9",
          "from": "n5",
          "to": "C3",
          "data_type": "structured",
          "frequency": 1.1574074074074073e-05
        }
      ]
    } as ScenarioDoc,
    costs: null,
  },
};

export const FIXTURE_NAMES = Object.keys(FIXTURES);
