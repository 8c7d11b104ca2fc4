"""Scenario-to-architecture pipeline.

Four stages: decompose the scenario into one data flow per consumer, pick the
cheapest component class for every action in every flow, decide link
persistence per flow, then merge the flows into one architecture. Every choice
lands in an ordered decision log with the rule that fired and the numbers that
drove it.

Component costs per class, for a node with incoming/outgoing request
frequencies f_in/f_out and an action with cardinalities ic/oc:

    state-centric          f_in * cc(ic) + f_out * rc(oc)
    data-centric batch     f_out * cc(ic)
    data-centric stream    f_in * cc(ic)

A state-centric component pays to update its state on every input and to serve
every downstream request; batch pays per downstream request; stream pays per
arriving input. Unsupported (subtype, class) pairs cost infinitely much,
carried as ``None``. The objective (sum of chosen costs, one class per node)
has no cross-node terms, so the per-node argmin is the global optimum; the
test suite keeps a brute-force enumeration oracle around to hold that claim.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .architecture import (
    INTERNAL_EDGE,
    Architecture,
    Boundary,
    Component,
    ComponentClass,
    Link,
)
from .catalog import Catalog, default_catalog, most_permissive, suggest_component, suggest_link
from .costs import CostModel, cost_below
from .scenario import (
    Action,
    DataType,
    Edge,
    InvalidScenarioError,
    Node,
    NodeContext,
    NodeKind,
    Scenario,
    frequencies_from_edges,
    validate_scenario,
)

# Preference order when costs tie: stream gives the lowest result latency.
TIE_BREAK_ORDER = (ComponentClass.STREAM, ComponentClass.BATCH, ComponentClass.STATE_CENTRIC)

_CLASS_ABBREV = {
    ComponentClass.STREAM: "stream",
    ComponentClass.BATCH: "batch",
    ComponentClass.STATE_CENTRIC: "sc",
}

# Pipeline stages, in decision-log order.
STAGE_EXTRACTION = "extraction"
STAGE_COMPONENT_SELECTION = "component_selection"
STAGE_LINK_SELECTION = "link_selection"
STAGE_INTEGRATION = "integration"
STAGE_RECOMMENDATION = "recommendation"

STAGES = (
    STAGE_EXTRACTION,
    STAGE_COMPONENT_SELECTION,
    STAGE_LINK_SELECTION,
    STAGE_INTEGRATION,
    STAGE_RECOMMENDATION,
)


class InfeasibleNodeError(Exception):
    """No component class supports a node's action, so no architecture exists."""

    def __init__(self, node: str, consumer: str | None = None):
        self.node = node
        self.consumer = consumer
        where = f" (data flow of consumer {consumer})" if consumer else ""
        super().__init__(f"node {node!r}: action unsupported by every component class{where}")


@dataclass(frozen=True)
class DataFlow:
    """Per-consumer subgraph: the consumer plus everything that feeds it.

    Frequency contexts are computed inside the flow, not over the whole
    scenario; a node shared by several flows can therefore see different
    outgoing frequencies in each, which is what lets the same action be
    realized by different component classes for different consumers.
    """

    consumer: str
    nodes: tuple[Node, ...]
    edges: tuple[Edge, ...]
    contexts: Mapping[str, NodeContext]

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(sorted(self.nodes, key=lambda n: n.id)))
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.id)))

    @property
    def internal_nodes(self) -> tuple[Node, ...]:
        return tuple(n for n in self.nodes if n.kind is NodeKind.ACTION)

    @cached_property
    def node_by_id(self) -> Mapping[str, Node]:
        return {n.id: n for n in self.nodes}

    def node(self, node_id: str) -> Node:
        try:
            return self.node_by_id[node_id]
        except KeyError:
            raise KeyError(f"node {node_id!r} not in data flow of {self.consumer!r}") from None

    @property
    def guarantee(self):
        return self.node(self.consumer).delivery_guarantee


@dataclass(frozen=True)
class CostBreakdown:
    """The three candidate costs for one node; None marks an unsupported class."""

    node: str
    state_centric: float | None
    batch: float | None
    stream: float | None

    def cost(self, cls: ComponentClass) -> float | None:
        if cls is ComponentClass.STATE_CENTRIC:
            return self.state_centric
        if cls is ComponentClass.BATCH:
            return self.batch
        return self.stream


@dataclass(frozen=True)
class Assignment:
    """Exactly one component class per internal node, at minimum total cost."""

    classes: Mapping[str, ComponentClass]
    objective_value: float


@dataclass(frozen=True)
class LinkDecision:
    persistent: bool
    rule: str


LinkPlan = Mapping[str, LinkDecision]  # keyed by edge id


@dataclass(frozen=True)
class DecisionEntry:
    stage: str
    rule: str
    elements: tuple[str, ...]
    explanation: str


@dataclass(frozen=True)
class FlowSynthesis:
    flow: DataFlow
    breakdowns: Mapping[str, CostBreakdown]
    assignment: Assignment
    link_plan: LinkPlan


@dataclass(frozen=True)
class Recommendations:
    components: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    links: Mapping[str, tuple[str, ...]] = field(default_factory=dict)


@dataclass(frozen=True)
class SynthesisResult:
    architecture: Architecture
    per_flow: tuple[FlowSynthesis, ...]
    decisions: tuple[DecisionEntry, ...]
    recommendations: Recommendations


def extract_data_flows(scenario: Scenario) -> list[DataFlow]:
    """One data flow per consumer, in ascending consumer-id order.

    A flow contains the consumer, all nodes that directly or indirectly feed
    it, and the edges between those nodes. Shared nodes are repeated across
    flows; all values are immutable so flows are independent by construction.
    """
    flows = []
    for consumer in scenario.consumers():
        member_ids = _ancestors(scenario, consumer.id) | {consumer.id}
        nodes = tuple(n for n in scenario.nodes if n.id in member_ids)
        edges = tuple(e for e in scenario.edges if e.source in member_ids and e.target in member_ids)
        incoming: dict[str, list[Edge]] = {}
        outgoing: dict[str, list[Edge]] = {}
        for e in edges:
            incoming.setdefault(e.target, []).append(e)
            outgoing.setdefault(e.source, []).append(e)
        contexts = {
            n.id: frequencies_from_edges(n.id, incoming.get(n.id, ()), outgoing.get(n.id, ()))
            for n in nodes
            if n.kind is NodeKind.ACTION
        }
        flows.append(DataFlow(consumer=consumer.id, nodes=nodes, edges=edges, contexts=contexts))
    return flows


def _ancestors(scenario: Scenario, node_id: str) -> set[str]:
    seen: set[str] = set()
    frontier = deque([node_id])
    while frontier:
        current = frontier.popleft()
        for edge in scenario.incoming.get(current, ()):
            if edge.source not in seen:
                seen.add(edge.source)
                frontier.append(edge.source)
    return seen


def component_costs(ctx: NodeContext, action: Action, model: CostModel) -> CostBreakdown:
    """Evaluate the three class costs for one node; None where unsupported."""

    def against(cls: ComponentClass) -> float | None:
        entry = model.lookup(action.subtype, cls)
        if entry is None:
            return None
        if cls is ComponentClass.STATE_CENTRIC:
            rc = entry.rc if entry.rc is not None else entry.cc
            return ctx.incoming * entry.cc(action.input_cardinality) + ctx.outgoing * rc(action.output_cardinality)
        if cls is ComponentClass.BATCH:
            return ctx.outgoing * entry.cc(action.input_cardinality)
        return ctx.incoming * entry.cc(action.input_cardinality)

    return CostBreakdown(
        node=ctx.node,
        state_centric=against(ComponentClass.STATE_CENTRIC),
        batch=against(ComponentClass.BATCH),
        stream=against(ComponentClass.STREAM),
    )


def flow_cost_breakdowns(flow: DataFlow, model: CostModel) -> dict[str, CostBreakdown]:
    return {
        node.id: component_costs(flow.contexts[node.id], node.action, model)
        for node in flow.internal_nodes
    }


def _cheapest(breakdown: CostBreakdown) -> tuple[ComponentClass, float, tuple[ComponentClass, ...]]:
    """Winning class, its cost, and any classes it merely tied with."""
    best: ComponentClass | None = None
    best_cost: float | None = None
    for cls in TIE_BREAK_ORDER:
        cost = breakdown.cost(cls)
        if cost is None:
            continue
        if best_cost is None or cost_below(cost, best_cost):
            best, best_cost = cls, cost
    if best is None or best_cost is None:
        raise InfeasibleNodeError(breakdown.node)
    tied = tuple(
        cls for cls in TIE_BREAK_ORDER
        if cls is not best and breakdown.cost(cls) == best_cost
    )
    return best, best_cost, tied


def select_components(
    flow: DataFlow,
    model: CostModel,
    log: list[DecisionEntry] | None = None,
    breakdowns: Mapping[str, CostBreakdown] | None = None,
) -> Assignment:
    """Minimum-cost component class per internal node of the flow.

    The objective is separable, so the per-node argmin is globally optimal.
    Ties break in favor of stream, then batch, then state-centric.
    Raises InfeasibleNodeError when some node has no supported class.
    """
    if breakdowns is None:
        breakdowns = flow_cost_breakdowns(flow, model)
    classes: dict[str, ComponentClass] = {}
    objective = 0.0
    for node_id in sorted(breakdowns):
        breakdown = breakdowns[node_id]
        try:
            winner, winner_cost, tied = _cheapest(breakdown)
        except InfeasibleNodeError:
            raise InfeasibleNodeError(node_id, flow.consumer) from None
        classes[node_id] = winner
        objective += winner_cost
        if log is not None:
            ctx = flow.contexts[node_id]
            costs = ", ".join(
                f"{cls.value}={_fmt_cost(breakdown.cost(cls))}" for cls in TIE_BREAK_ORDER
            )
            log.append(DecisionEntry(
                stage=STAGE_COMPONENT_SELECTION,
                rule="select_component",
                elements=(flow.consumer, node_id),
                explanation=(
                    f"flow {flow.consumer}, node {node_id}: f_in={ctx.incoming:g}/s, "
                    f"f_out={ctx.outgoing:g}/s; costs {costs}; chose {winner.value}"
                ),
            ))
            if tied:
                others = ", ".join(cls.value for cls in tied)
                log.append(DecisionEntry(
                    stage=STAGE_COMPONENT_SELECTION,
                    rule="tie_break_stream" if winner is ComponentClass.STREAM else "tie_break",
                    elements=(flow.consumer, node_id),
                    explanation=(
                        f"flow {flow.consumer}, node {node_id}: tie with {others} at cost "
                        f"{_fmt_cost(winner_cost)}; {winner.value} preferred to minimize result latency"
                    ),
                ))
    return Assignment(classes=classes, objective_value=objective)


def _fmt_cost(cost: float | None) -> str:
    return "unsupported" if cost is None else f"{cost:g}"


def select_links(
    flow: DataFlow,
    a: Assignment,
    log: list[DecisionEntry] | None = None,
) -> dict[str, LinkDecision]:
    """Persistence per edge of one flow.

    Rule P1: an edge leaving a producer is persistent when the flow's consumer
    needs at-least-once or exactly-once delivery, so input can be replayed
    after failures. Every other edge is volatile at this stage (rule V1);
    further persistence cases are decided after integration.
    """
    guarantee = flow.guarantee
    plan: dict[str, LinkDecision] = {}
    for edge in flow.edges:
        source = flow.node(edge.source)
        if source.kind is NodeKind.PRODUCER and guarantee is not None and guarantee.requires_replay:
            decision = LinkDecision(persistent=True, rule="P1")
            explanation = (
                f"flow {flow.consumer}, edge {edge.id}: producer output persisted, consumer "
                f"{flow.consumer} requires {guarantee.value} delivery"
            )
        else:
            decision = LinkDecision(persistent=False, rule="V1")
            explanation = f"flow {flow.consumer}, edge {edge.id}: volatile, no persistence rule applies"
        plan[edge.id] = decision
        if log is not None:
            log.append(DecisionEntry(
                stage=STAGE_LINK_SELECTION,
                rule=decision.rule,
                elements=(flow.consumer, edge.id),
                explanation=explanation,
            ))
    return plan


@dataclass
class _MergedNode:
    node: Node
    data_centric: ComponentClass | None  # STREAM or BATCH, post-merge
    state_centric: bool
    batch_dropped: bool
    flows: list[str]

    def component_ids(self) -> list[str]:
        out = []
        if self.data_centric is not None:
            out.append(f"{self.node.id}.{_CLASS_ABBREV[self.data_centric]}")
        if self.state_centric:
            out.append(f"{self.node.id}.{_CLASS_ABBREV[ComponentClass.STATE_CENTRIC]}")
        return out

    @property
    def inflow_target(self) -> str:
        # data enters through the data-centric component when there is one;
        # a state-centric sibling receives results over the internal link
        if self.data_centric is not None:
            return f"{self.node.id}.{_CLASS_ABBREV[self.data_centric]}"
        return f"{self.node.id}.sc"

    def outflow_source(self, selected: ComponentClass) -> str:
        if selected is ComponentClass.BATCH and self.batch_dropped:
            selected = ComponentClass.STREAM
        return f"{self.node.id}.{_CLASS_ABBREV[selected]}"

    @property
    def classes(self) -> set[ComponentClass]:
        out = set()
        if self.data_centric is not None:
            out.add(self.data_centric)
        if self.state_centric:
            out.add(ComponentClass.STATE_CENTRIC)
        return out


def integrate(
    flows: Sequence[tuple[DataFlow, Assignment, LinkPlan]],
    log: list[DecisionEntry] | None = None,
) -> Architecture:
    """Merge per-flow choices into a single architecture.

    Per node: if the flows chose both stream and batch, only stream survives
    (same results, stricter latency) and the batch flow's links re-point to it;
    a state-centric choice always survives. A node can therefore end up with a
    data-centric and a state-centric component, joined by an internal volatile
    link that stores computation results for later retrieval.

    Links present in at least one flow are kept. A kept link is persistent if
    it was persistent in some flow (P1) or if it feeds a node with a batch
    component whose upstream node holds no state-centric component (P2: batch
    re-reads its input on every run, so either the upstream stores it or the
    link must).
    """
    ordered = sorted(flows, key=lambda item: item[0].consumer)

    nodes: dict[str, Node] = {}
    picks: dict[str, list[tuple[str, ComponentClass]]] = {}
    for flow, assignment, _ in ordered:
        for node in flow.nodes:
            nodes[node.id] = node
        for node_id, cls in assignment.classes.items():
            picks.setdefault(node_id, []).append((flow.consumer, cls))

    merged: dict[str, _MergedNode] = {}
    for node_id in sorted(picks):
        chosen = {cls for _, cls in picks[node_id]}
        batch_dropped = ComponentClass.BATCH in chosen and ComponentClass.STREAM in chosen
        if ComponentClass.STREAM in chosen:
            data_centric = ComponentClass.STREAM
        elif ComponentClass.BATCH in chosen:
            data_centric = ComponentClass.BATCH
        else:
            data_centric = None
        merged[node_id] = _MergedNode(
            node=nodes[node_id],
            data_centric=data_centric,
            state_centric=ComponentClass.STATE_CENTRIC in chosen,
            batch_dropped=batch_dropped,
            flows=[consumer for consumer, _ in picks[node_id]],
        )
        if log is not None and batch_dropped:
            by_class = _picks_by_class(picks[node_id])
            log.append(DecisionEntry(
                stage=STAGE_INTEGRATION,
                rule="merge_stream_over_batch",
                elements=(node_id,),
                explanation=(
                    f"node {node_id}: {by_class}; batch dropped in favor of stream "
                    f"(same results, lower latency); links re-pointed to {node_id}.stream"
                ),
            ))

    components: list[Component] = []
    for node in sorted(nodes.values(), key=lambda n: n.id):
        if node.kind is NodeKind.PRODUCER:
            components.append(Component(id=node.id, cls=Boundary.EXTERNAL_PRODUCER))
        elif node.kind is NodeKind.CONSUMER:
            components.append(Component(id=node.id, cls=Boundary.EXTERNAL_CONSUMER))
    for node_id in sorted(merged):
        m = merged[node_id]
        if m.data_centric is not None:
            components.append(Component(
                id=f"{node_id}.{_CLASS_ABBREV[m.data_centric]}",
                cls=m.data_centric,
                implements_node=node_id,
                supported_action=m.node.action,
            ))
        if m.state_centric:
            components.append(Component(
                id=f"{node_id}.sc",
                cls=ComponentClass.STATE_CENTRIC,
                implements_node=node_id,
                supported_action=m.node.action,
            ))

    # Collect links across flows, keyed by (edge, resolved endpoints).
    collected: dict[tuple[str, str, str], dict] = {}
    edge_by_id: dict[str, Edge] = {}
    for flow, assignment, plan in ordered:
        for edge in flow.edges:
            edge_by_id[edge.id] = edge
            source_node = nodes[edge.source]
            if source_node.kind is NodeKind.PRODUCER:
                source_comp = source_node.id
            else:
                source_comp = merged[edge.source].outflow_source(assignment.classes[edge.source])
            target_node = nodes[edge.target]
            if target_node.kind is NodeKind.CONSUMER:
                target_comp = target_node.id
            else:
                target_comp = merged[edge.target].inflow_target
            key = (edge.id, source_comp, target_comp)
            slot = collected.setdefault(key, {"persistent_flows": [], "flows": []})
            slot["flows"].append(flow.consumer)
            if plan[edge.id].persistent:
                slot["persistent_flows"].append(flow.consumer)

    by_edge: dict[str, list[tuple[str, str, str]]] = {}
    for key in collected:
        by_edge.setdefault(key[0], []).append(key)

    links: list[Link] = []
    for edge_id in sorted(by_edge):
        variants = sorted(by_edge[edge_id])
        for key in variants:
            _, source_comp, target_comp = key
            link_id = edge_id if len(variants) == 1 else f"{edge_id}@{source_comp}"
            slot = collected[key]
            edge = edge_by_id[edge_id]
            if slot["persistent_flows"]:
                consumers = ", ".join(sorted(set(slot["persistent_flows"])))
                persistent = True
                rationale = f"P1: ingestion persisted for replay, required by consumer(s) {consumers}"
                rule = "P1"
            elif _batch_pull_requires_persistence(edge, merged):
                persistent = True
                rationale = (
                    f"P2: persistent link before batch component "
                    f"{merged[edge.target].inflow_target}, upstream holds no state"
                )
                rule = "P2"
            else:
                persistent = False
                rationale = "V1: volatile, no persistence rule applies"
                rule = "V1"
            links.append(Link(
                id=link_id,
                source=source_comp,
                target=target_comp,
                persistent=persistent,
                implements_edge=edge_id,
                rationale=rationale,
            ))
            if log is not None:
                log.append(DecisionEntry(
                    stage=STAGE_INTEGRATION,
                    rule=rule,
                    elements=(link_id,),
                    explanation=f"link {source_comp} -> {target_comp}: {rationale}",
                ))

    for node_id in sorted(merged):
        m = merged[node_id]
        if m.data_centric is not None and m.state_centric:
            dc_id = f"{node_id}.{_CLASS_ABBREV[m.data_centric]}"
            sc_id = f"{node_id}.sc"
            links.append(Link(
                id=f"{node_id}.store",
                source=dc_id,
                target=sc_id,
                persistent=False,
                implements_edge=INTERNAL_EDGE,
                rationale="store: computation results kept in the state-centric sibling",
            ))
            if log is not None:
                log.append(DecisionEntry(
                    stage=STAGE_INTEGRATION,
                    rule="dual_component_store",
                    elements=(node_id,),
                    explanation=(
                        f"node {node_id}: realized as {dc_id} plus {sc_id}; {dc_id} computes, "
                        f"results stored in {sc_id} for on-demand retrieval (volatile internal link)"
                    ),
                ))

    return Architecture(components=tuple(components), links=tuple(links))


def _picks_by_class(node_picks: list[tuple[str, ComponentClass]]) -> str:
    by_class: dict[ComponentClass, list[str]] = {}
    for consumer, cls in node_picks:
        by_class.setdefault(cls, []).append(consumer)
    return "; ".join(
        f"{cls.value} chosen in flow(s) {', '.join(sorted(consumers))}"
        for cls, consumers in sorted(by_class.items(), key=lambda kv: kv[0].value)
    )


def _batch_pull_requires_persistence(edge: Edge, merged: Mapping[str, _MergedNode]) -> bool:
    target = merged.get(edge.target)
    if target is None or target.data_centric is not ComponentClass.BATCH:
        return False
    source = merged.get(edge.source)  # None for producers, which hold no state
    return source is None or not source.state_centric


def synthesize(
    scenario: Scenario,
    model: CostModel | None = None,
    catalog: Catalog | None = None,
) -> SynthesisResult:
    """Run the full pipeline and return the architecture with its full audit trail.

    Deterministic end to end: two runs over the same input produce identical
    results. Raises InvalidScenarioError on validation failure and
    InfeasibleNodeError when some action has no supported component class.
    """
    model = model if model is not None else CostModel()
    catalog = catalog if catalog is not None else default_catalog()

    report = validate_scenario(scenario)
    if not report.valid:
        raise InvalidScenarioError(report)

    log: list[DecisionEntry] = []
    flows = extract_data_flows(scenario)
    for flow in flows:
        log.append(DecisionEntry(
            stage=STAGE_EXTRACTION,
            rule="flow_extracted",
            elements=(flow.consumer,),
            explanation=(
                f"data flow for consumer {flow.consumer}: {len(flow.nodes)} nodes "
                f"({_summarize_ids(n.id for n in flow.nodes)}), {len(flow.edges)} edges"
            ),
        ))

    per_flow: list[FlowSynthesis] = []
    for flow in flows:
        breakdowns = flow_cost_breakdowns(flow, model)
        assignment = select_components(flow, model, log=log, breakdowns=breakdowns)
        plan = select_links(flow, assignment, log=log)
        per_flow.append(FlowSynthesis(flow=flow, breakdowns=breakdowns, assignment=assignment, link_plan=plan))

    arch = integrate([(fs.flow, fs.assignment, fs.link_plan) for fs in per_flow], log=log)
    recommendations = _recommend(arch, scenario, catalog, log)
    return SynthesisResult(
        architecture=arch,
        per_flow=tuple(per_flow),
        decisions=tuple(log),
        recommendations=recommendations,
    )


def _summarize_ids(ids: Iterable[str], limit: int = 12) -> str:
    listed = sorted(ids)
    if len(listed) <= limit:
        return ", ".join(listed)
    return ", ".join(listed[:limit]) + f", ... ({len(listed) - limit} more)"


def governing_data_type(
    comp: Component, arch: Architecture, scenario: Scenario
) -> tuple[DataType, str | None, bool]:
    """Data type that drives system selection for a component.

    Incoming edges govern, except for the state-centric half of a dual pair,
    which stores the data-centric sibling's results and therefore follows the
    node's outgoing edges. Mixed types resolve to the most permissive one
    (unstructured > semistructured > structured); the returned flag reports
    whether such mixing happened. The refinement label survives only when all
    candidate edges of the winning type agree on it.
    """
    node_id = comp.implements_node
    assert node_id is not None
    siblings = arch.components_for_node.get(node_id, ())
    stores_results = comp.cls is ComponentClass.STATE_CENTRIC and len(siblings) == 2
    edges = scenario.outgoing[node_id] if stores_results else scenario.incoming[node_id]
    types = [e.data_type for e in edges]
    winner = most_permissive(types)
    refinements = {e.refinement for e in edges if e.data_type is winner}
    refinement = refinements.pop() if len(refinements) == 1 else None
    return winner, refinement, len(set(types)) > 1


def _recommend(
    arch: Architecture,
    scenario: Scenario,
    catalog: Catalog,
    log: list[DecisionEntry],
) -> Recommendations:
    comp_recs: dict[str, tuple[str, ...]] = {}
    for comp in arch.components:
        if comp.is_boundary:
            continue
        data_type, refinement, mixed = governing_data_type(comp, arch, scenario)
        if mixed:
            log.append(DecisionEntry(
                stage=STAGE_RECOMMENDATION,
                rule="mixed_data_types",
                elements=(comp.id,),
                explanation=(
                    f"component {comp.id}: inputs mix data types; most permissive "
                    f"({data_type.value}) governs system selection"
                ),
            ))
        systems = suggest_component(catalog, comp, data_type, refinement)
        comp_recs[comp.id] = systems
        log.append(DecisionEntry(
            stage=STAGE_RECOMMENDATION,
            rule="catalog_component" if systems else "no_recommendation",
            elements=(comp.id,),
            explanation=(
                f"component {comp.id} ({comp.cls.value}, {data_type.value}"
                + (f"/{refinement}" if refinement else "")
                + "): " + (", ".join(systems) if systems else "no recommendation")
            ),
        ))
    link_recs: dict[str, tuple[str, ...]] = {}
    for link in arch.links:
        systems = suggest_link(catalog, link)
        link_recs[link.id] = systems
        kind = "persistent" if link.persistent else "volatile"
        log.append(DecisionEntry(
            stage=STAGE_RECOMMENDATION,
            rule="catalog_link" if systems else "no_recommendation",
            elements=(link.id,),
            explanation=(
                f"link {link.id} ({kind}): " + (", ".join(systems) if systems else "no recommendation")
            ),
        ))
    return Recommendations(components=comp_recs, links=link_recs)
