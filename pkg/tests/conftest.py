from __future__ import annotations

import json

import pytest

import archsynth as a
from archsynth import (
    Action,
    ActionKind,
    DataType,
    DeliveryGuarantee,
    Edge,
    Node,
    NodeKind,
    Scenario,
)
from archsynth import io as docs


def producer(node_id: str) -> Node:
    return Node(id=node_id, kind=NodeKind.PRODUCER)


def consumer(node_id: str, guarantee: str = "at_most_once") -> Node:
    return Node(id=node_id, kind=NodeKind.CONSUMER, delivery_guarantee=DeliveryGuarantee(guarantee))


def action(
    node_id: str,
    kind: str = "processing",
    subtype: str = "aggregation",
    ic: float = 1.0,
    oc: float = 1.0,
) -> Node:
    return Node(
        id=node_id,
        kind=NodeKind.ACTION,
        action=Action(
            kind=ActionKind(kind),
            subtype=subtype,
            input_cardinality=float(ic),
            output_cardinality=float(oc),
        ),
    )


def edge(
    edge_id: str,
    source: str,
    target: str,
    freq: float = 1.0,
    data_type: str = "structured",
    refinement: str | None = None,
) -> Edge:
    return Edge(
        id=edge_id,
        source=source,
        target=target,
        data_type=DataType(data_type),
        frequency=float(freq),
        refinement=refinement,
    )


def scenario(*nodes_and_edges) -> Scenario:
    nodes = tuple(x for x in nodes_and_edges if isinstance(x, Node))
    edges = tuple(x for x in nodes_and_edges if isinstance(x, Edge))
    return Scenario(nodes=nodes, edges=edges)


def load_fixture(name: str):
    """(Scenario, CostModel) for a bundled fixture; identity costs when none ship."""
    parsed = docs.parse_scenario(a.fixture_text(name))
    try:
        model = docs.parse_cost_model(a.fixture_text(name, "costs"))
    except FileNotFoundError:
        model = a.CostModel()
    return parsed, model


def fixture_doc(name: str, kind: str = "scenario") -> dict:
    return json.loads(a.fixture_text(name, kind))


@pytest.fixture(params=a.FIXTURE_NAMES)
def any_fixture(request):
    return request.param


ACCEPTANCE_LINES: list[str] = []


def record_acceptance(name: str, passed: bool) -> None:
    line = f"ACCEPTANCE {name}: {'PASS' if passed else 'FAIL'}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
