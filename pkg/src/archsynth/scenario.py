"""Scenario graphs: producers, actions, and consumers joined by typed, rated edges.

A scenario is a directed acyclic graph. Producers emit data items, actions
transform them, and consumers read results under a delivery guarantee. Each
edge carries a frequency saying how often the downstream side requests data
from it; each action carries input/output cardinalities saying how much data
one evaluation touches. These attributes drive all downstream cost decisions.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class NodeKind(str, Enum):
    PRODUCER = "producer"
    CONSUMER = "consumer"
    ACTION = "action"


class ActionKind(str, Enum):
    PROCESSING = "processing"
    MERGE = "merge"


class DeliveryGuarantee(str, Enum):
    AT_MOST_ONCE = "at_most_once"
    AT_LEAST_ONCE = "at_least_once"
    EXACTLY_ONCE = "exactly_once"

    @property
    def requires_replay(self) -> bool:
        """True when item loss is not acceptable, so ingested data must be replayable."""
        return self is not DeliveryGuarantee.AT_MOST_ONCE


class DataType(str, Enum):
    STRUCTURED = "structured"
    SEMISTRUCTURED = "semistructured"
    UNSTRUCTURED = "unstructured"


@dataclass(frozen=True)
class Action:
    """Transformation performed by an internal node.

    ``subtype`` is an open label ("aggregation", "ml_training", ...) that keys
    into the cost model's support matrix; there is deliberately no fixed
    catalog of transformation kinds. Cardinalities count items per evaluation
    and must be >= 1 and finite.
    """

    kind: ActionKind
    subtype: str
    input_cardinality: float
    output_cardinality: float


@dataclass(frozen=True)
class Node:
    id: str
    kind: NodeKind
    delivery_guarantee: DeliveryGuarantee | None = None  # consumers only
    action: Action | None = None  # action nodes only


@dataclass(frozen=True)
class Edge:
    """Directed data flow between two nodes.

    ``frequency`` is a positive rate in events per second, resolved from
    symbolic levels at parse time. ``refinement`` optionally narrows the data
    type (e.g. "document" under semistructured) for catalog matching.
    """

    id: str
    source: str
    target: str
    data_type: DataType
    frequency: float
    refinement: str | None = None


@dataclass(frozen=True)
class NodeContext:
    """Per-node frequency summary: the maxima over incoming and outgoing edges.

    The maximum (not the sum) is what matters: it is the fastest rate at which
    the node must accept input or serve output. Empty edge sets yield 0.0,
    which happens only at the graph boundary (producers and consumers).
    """

    node: str
    incoming: float
    outgoing: float


@dataclass(frozen=True)
class Violation:
    rule: str
    element: str | None
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}


class InvalidScenarioError(Exception):
    """Raised when an operation requires a valid scenario but validation failed."""

    def __init__(self, report: ValidationReport):
        self.report = report
        first = report.violations[0] if report.violations else None
        detail = f", first: {first.rule} ({first.element})" if first else ""
        super().__init__(f"scenario has {len(report.violations)} violation(s){detail}")


@dataclass(frozen=True)
class Scenario:
    """Immutable scenario graph. Nodes and edges are kept sorted by id."""

    nodes: tuple[Node, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(sorted(self.nodes, key=lambda n: n.id)))
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.id)))

    @cached_property
    def node_by_id(self) -> Mapping[str, Node]:
        return {n.id: n for n in self.nodes}

    @cached_property
    def incoming(self) -> Mapping[str, tuple[Edge, ...]]:
        return _edges_by_endpoint(self.nodes, self.edges, inbound=True)

    @cached_property
    def outgoing(self) -> Mapping[str, tuple[Edge, ...]]:
        return _edges_by_endpoint(self.nodes, self.edges, inbound=False)

    def node(self, node_id: str) -> Node:
        try:
            return self.node_by_id[node_id]
        except KeyError:
            raise KeyError(f"unknown node id: {node_id!r}") from None

    def producers(self) -> tuple[Node, ...]:
        return tuple(n for n in self.nodes if n.kind is NodeKind.PRODUCER)

    def consumers(self) -> tuple[Node, ...]:
        return tuple(n for n in self.nodes if n.kind is NodeKind.CONSUMER)


def _edges_by_endpoint(
    nodes: Sequence[Node], edges: Sequence[Edge], inbound: bool
) -> dict[str, tuple[Edge, ...]]:
    grouped: dict[str, list[Edge]] = {n.id: [] for n in nodes}
    for edge in edges:
        key = edge.target if inbound else edge.source
        grouped.setdefault(key, []).append(edge)
    return {k: tuple(v) for k, v in grouped.items()}


def cycle_nodes(node_ids: Iterable[str], edge_pairs: Iterable[tuple[str, str]]) -> frozenset[str]:
    """Node ids that sit on or behind a directed cycle (empty iff acyclic).

    Kahn peeling: whatever cannot be topologically ordered remains. Edges
    referencing unknown nodes are ignored so this stays usable on graphs that
    failed earlier checks.
    """
    ids = set(node_ids)
    indegree = {n: 0 for n in ids}
    successors: dict[str, list[str]] = {n: [] for n in ids}
    for src, dst in edge_pairs:
        if src in ids and dst in ids:
            indegree[dst] += 1
            successors[src].append(dst)
    queue = deque(sorted(n for n, d in indegree.items() if d == 0))
    seen = 0
    while queue:
        node = queue.popleft()
        seen += 1
        for nxt in successors[node]:
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                queue.append(nxt)
    if seen == len(ids):
        return frozenset()
    return frozenset(n for n, d in indegree.items() if d > 0)


def validate_scenario(scenario: Scenario) -> ValidationReport:
    """Check every scenario invariant and report all violations, not just the first.

    Violations are data, not failures: an empty report means the scenario is
    valid. The function is pure and deterministic (stable violation order).
    """
    out: list[Violation] = []

    seen_nodes: set[str] = set()
    for node in scenario.nodes:
        if node.id in seen_nodes:
            out.append(Violation("duplicate_node_id", node.id, f"node id {node.id!r} defined more than once"))
        seen_nodes.add(node.id)
    seen_edges: set[str] = set()
    for edge in scenario.edges:
        if edge.id in seen_edges:
            out.append(Violation("duplicate_edge_id", edge.id, f"edge id {edge.id!r} defined more than once"))
        seen_edges.add(edge.id)

    node_ids = {n.id for n in scenario.nodes}
    for edge in scenario.edges:
        for endpoint in (edge.source, edge.target):
            if endpoint not in node_ids:
                out.append(Violation("unknown_node", edge.id, f"edge {edge.id!r} references unknown node {endpoint!r}"))
        if edge.source == edge.target:
            out.append(Violation("self_loop", edge.id, f"edge {edge.id!r} connects node {edge.source!r} to itself"))
        if not (math.isfinite(edge.frequency) and edge.frequency > 0):
            out.append(Violation("invalid_frequency", edge.id, f"edge {edge.id!r} frequency must be finite and > 0, got {edge.frequency!r}"))

    for node in scenario.nodes:
        if node.kind is NodeKind.CONSUMER and node.delivery_guarantee is None:
            out.append(Violation("missing_delivery_guarantee", node.id, f"consumer {node.id!r} has no delivery guarantee"))
        if node.kind is not NodeKind.CONSUMER and node.delivery_guarantee is not None:
            out.append(Violation("unexpected_delivery_guarantee", node.id, f"{node.kind.value} {node.id!r} must not carry a delivery guarantee"))
        if node.kind is NodeKind.ACTION and node.action is None:
            out.append(Violation("missing_action", node.id, f"action node {node.id!r} has no action"))
        if node.kind is not NodeKind.ACTION and node.action is not None:
            out.append(Violation("unexpected_action", node.id, f"{node.kind.value} {node.id!r} must not carry an action"))
        if node.action is not None:
            for label, value in (
                ("input_cardinality", node.action.input_cardinality),
                ("output_cardinality", node.action.output_cardinality),
            ):
                if not (math.isfinite(value) and value >= 1):
                    out.append(Violation("invalid_cardinality", node.id, f"node {node.id!r} {label} must be finite and >= 1, got {value!r}"))

    # Degree rules; edges with unknown endpoints were already reported above.
    incoming = scenario.incoming
    outgoing = scenario.outgoing
    for node in scenario.nodes:
        n_in = len(incoming.get(node.id, ()))
        n_out = len(outgoing.get(node.id, ()))
        if node.kind is NodeKind.PRODUCER:
            if n_in:
                out.append(Violation("producer_has_incoming", node.id, f"producer {node.id!r} has {n_in} incoming edge(s)"))
            if not n_out:
                out.append(Violation("producer_missing_outgoing", node.id, f"producer {node.id!r} has no outgoing edge"))
        elif node.kind is NodeKind.CONSUMER:
            if n_out:
                out.append(Violation("consumer_has_outgoing", node.id, f"consumer {node.id!r} has {n_out} outgoing edge(s)"))
            if n_in != 1:
                out.append(Violation("consumer_incoming_not_one", node.id, f"consumer {node.id!r} has {n_in} incoming edges, expected exactly 1"))
        else:
            if node.action is not None and node.action.kind is ActionKind.PROCESSING and n_in != 1:
                out.append(Violation("processing_incoming_not_one", node.id, f"processing node {node.id!r} has {n_in} incoming edges, expected exactly 1"))
            if node.action is not None and node.action.kind is ActionKind.MERGE and n_in < 2:
                out.append(Violation("merge_incoming_below_two", node.id, f"merge node {node.id!r} has {n_in} incoming edges, expected >= 2"))
            if not n_out:
                out.append(Violation("action_missing_outgoing", node.id, f"action node {node.id!r} has no outgoing edge"))

    if not any(n.kind is NodeKind.PRODUCER for n in scenario.nodes):
        out.append(Violation("no_producer", None, "scenario has no producer node"))
    if not any(n.kind is NodeKind.CONSUMER for n in scenario.nodes):
        out.append(Violation("no_consumer", None, "scenario has no consumer node"))

    cyclic = cycle_nodes(node_ids, ((e.source, e.target) for e in scenario.edges))
    if cyclic:
        listed = ", ".join(sorted(cyclic)[:8])
        out.append(Violation("cycle", None, f"graph contains a cycle through: {listed}"))

    if not cyclic:
        reached = _reachable_from_producers(scenario)
        for node in scenario.nodes:
            if node.kind is NodeKind.CONSUMER and node.id not in reached:
                out.append(Violation("consumer_unreachable", node.id, f"consumer {node.id!r} is not reachable from any producer"))

    return ValidationReport(tuple(out))


def _reachable_from_producers(scenario: Scenario) -> set[str]:
    frontier = deque(n.id for n in scenario.nodes if n.kind is NodeKind.PRODUCER)
    reached = set(frontier)
    while frontier:
        node = frontier.popleft()
        for edge in scenario.outgoing.get(node, ()):
            if edge.target not in reached and edge.target in scenario.node_by_id:
                reached.add(edge.target)
                frontier.append(edge.target)
    return reached


def frequencies_from_edges(node_id: str, incoming: Sequence[Edge], outgoing: Sequence[Edge]) -> NodeContext:
    """Build a NodeContext from explicit edge sets (max frequency, 0.0 when empty)."""
    f_in = max((e.frequency for e in incoming), default=0.0)
    f_out = max((e.frequency for e in outgoing), default=0.0)
    return NodeContext(node=node_id, incoming=f_in, outgoing=f_out)


def node_frequencies(scenario: Scenario, node_id: str) -> NodeContext:
    """Frequency context of one node over the whole scenario graph.

    Raises KeyError for unknown node ids.
    """
    scenario.node(node_id)
    return frequencies_from_edges(
        node_id, scenario.incoming.get(node_id, ()), scenario.outgoing.get(node_id, ())
    )
