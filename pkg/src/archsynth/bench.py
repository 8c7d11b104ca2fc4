"""Seeded synthetic scenarios and a timing harness for the pipeline stages.

Two shapes: a single chain (one data flow, growing node count) stresses the
selection step; a fan-out (shared action DAG, growing consumer count) stresses
extraction and integration. Frequencies are drawn log-uniformly over
[0.001, 1000] events/s so all three component classes actually win somewhere.
"""

from __future__ import annotations

import csv
import io as stdio
import random
import time
from dataclasses import dataclass
from typing import Mapping, Sequence

from .catalog import Catalog
from .costs import CostModel
from .scenario import (
    Action,
    ActionKind,
    DataType,
    DeliveryGuarantee,
    Edge,
    Node,
    NodeKind,
    Scenario,
)
from .synthesis import extract_data_flows, integrate, select_components, select_links, synthesize

_SUBTYPES = ("aggregation", "filtering", "time_series", "ml_training", "graph_algorithm")

STAGE_NAMES = ("extract", "select", "integrate", "total")


@dataclass(frozen=True)
class TimingReport:
    """Mean wall-clock duration per stage over `repeats` runs, in integer ms."""

    shape: str
    repeats: int
    stage_ms: Mapping[str, int]


def _random_frequency(rng: random.Random) -> float:
    return 10.0 ** rng.uniform(-3.0, 3.0)


def _random_cardinality(rng: random.Random) -> float:
    return float(round(10.0 ** rng.uniform(0.0, 2.0)))


def _action(rng: random.Random, kind: ActionKind) -> Action:
    return Action(
        kind=kind,
        subtype=rng.choice(_SUBTYPES),
        input_cardinality=max(1.0, _random_cardinality(rng)),
        output_cardinality=max(1.0, _random_cardinality(rng)),
    )


def _edge(rng: random.Random, eid: str, source: str, target: str) -> Edge:
    return Edge(
        id=eid,
        source=source,
        target=target,
        data_type=rng.choice(list(DataType)),
        frequency=_random_frequency(rng),
    )


def gen_chain(n_nodes: int, seed: int = 0) -> Scenario:
    """One producer, a chain of n_nodes processing actions, one consumer."""
    if n_nodes < 1:
        raise ValueError("n_nodes must be >= 1")
    rng = random.Random(seed)
    nodes: list[Node] = [Node(id="P1", kind=NodeKind.PRODUCER)]
    edges: list[Edge] = []
    previous = "P1"
    for i in range(1, n_nodes + 1):
        node_id = f"n{i:04d}"
        nodes.append(Node(id=node_id, kind=NodeKind.ACTION, action=_action(rng, ActionKind.PROCESSING)))
        edges.append(_edge(rng, f"e{len(edges) + 1:04d}", previous, node_id))
        previous = node_id
    nodes.append(Node(
        id="C1",
        kind=NodeKind.CONSUMER,
        delivery_guarantee=rng.choice(list(DeliveryGuarantee)),
    ))
    edges.append(_edge(rng, f"e{len(edges) + 1:04d}", previous, "C1"))
    return Scenario(nodes=tuple(nodes), edges=tuple(edges))


def gen_fanout(n_nodes: int, n_consumers: int, seed: int = 0) -> Scenario:
    """Shared DAG of n_nodes actions serving n_consumers consumers.

    A backbone chain keeps every action on a path; extra backward edges turn
    some actions into merges; consumers attach to the chain tail (guaranteeing
    it an outgoing edge) and to random actions. Valid by construction for any
    n_nodes >= 1, n_consumers >= 1.
    """
    if n_nodes < 1:
        raise ValueError("n_nodes must be >= 1")
    if n_consumers < 1:
        raise ValueError("n_consumers must be >= 1")
    rng = random.Random(seed)
    nodes: list[Node] = [Node(id="P1", kind=NodeKind.PRODUCER)]
    edges: list[Edge] = []
    action_ids: list[str] = []
    previous = "P1"
    for i in range(1, n_nodes + 1):
        node_id = f"n{i:04d}"
        extra_sources: list[str] = []
        # candidates are strictly earlier, so the graph stays acyclic
        if i >= 3 and rng.random() < 0.3:
            extra_sources.append(rng.choice(action_ids[: i - 2]))
        kind = ActionKind.MERGE if extra_sources else ActionKind.PROCESSING
        nodes.append(Node(id=node_id, kind=NodeKind.ACTION, action=_action(rng, kind)))
        edges.append(_edge(rng, f"e{len(edges) + 1:05d}", previous, node_id))
        for source in extra_sources:
            edges.append(_edge(rng, f"e{len(edges) + 1:05d}", source, node_id))
        action_ids.append(node_id)
        previous = node_id
    for c in range(1, n_consumers + 1):
        consumer_id = f"C{c:04d}"
        nodes.append(Node(
            id=consumer_id,
            kind=NodeKind.CONSUMER,
            delivery_guarantee=rng.choice(list(DeliveryGuarantee)),
        ))
        attach = action_ids[-1] if c == 1 else rng.choice(action_ids)
        edges.append(_edge(rng, f"e{len(edges) + 1:05d}", attach, consumer_id))
    return Scenario(nodes=tuple(nodes), edges=tuple(edges))


def time_synthesis(
    scenario: Scenario,
    repeats: int = 3,
    model: CostModel | None = None,
    catalog: Catalog | None = None,
    shape: str = "scenario",
) -> TimingReport:
    """Mean per-stage wall-clock times over `repeats` full runs.

    Stage times come from running the pipeline stages directly; "total" is a
    separate complete synthesize call, so it additionally covers validation,
    recommendation, and decision logging.
    """
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    model = model if model is not None else CostModel()
    sums = {name: 0.0 for name in STAGE_NAMES}
    for _ in range(repeats):
        t0 = time.perf_counter()
        flows = extract_data_flows(scenario)
        t1 = time.perf_counter()
        selected = []
        for flow in flows:
            assignment = select_components(flow, model)
            selected.append((flow, assignment, select_links(flow, assignment)))
        t2 = time.perf_counter()
        integrate(selected)
        t3 = time.perf_counter()
        synthesize(scenario, model=model, catalog=catalog)
        t4 = time.perf_counter()
        sums["extract"] += t1 - t0
        sums["select"] += t2 - t1
        sums["integrate"] += t3 - t2
        sums["total"] += t4 - t3
    stage_ms = {name: int(round(sums[name] / repeats * 1000.0)) for name in STAGE_NAMES}
    return TimingReport(shape=shape, repeats=repeats, stage_ms=stage_ms)


def reports_to_csv(reports: Sequence[TimingReport]) -> str:
    """CSV rows: shape,stage,mean_ms,repeats."""
    buffer = stdio.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(["shape", "stage", "mean_ms", "repeats"])
    for report in reports:
        for stage in STAGE_NAMES:
            writer.writerow([report.shape, stage, report.stage_ms[stage], report.repeats])
    return buffer.getvalue()
