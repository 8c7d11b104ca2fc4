"""Architecture graphs: component instances wired by persistent or volatile links.

An architecture mirrors the scenario it was derived from: internal components
implement scenario actions, boundary components stand in for the producers and
consumers, and every link records why it is persistent or volatile.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Mapping, Union

from .scenario import Action, Scenario, ValidationReport, Violation, cycle_nodes


class ComponentClass(str, Enum):
    """The three component classes the selection step chooses between."""

    STATE_CENTRIC = "state_centric"
    BATCH = "data_centric_batch"
    STREAM = "data_centric_stream"


class Boundary(str, Enum):
    """Markers for scenario producers/consumers carried into the architecture."""

    EXTERNAL_PRODUCER = "external_producer"
    EXTERNAL_CONSUMER = "external_consumer"


ComponentRole = Union[ComponentClass, Boundary]

# implements_edge marker for links that connect two components of the same node
INTERNAL_EDGE = "internal"


@dataclass(frozen=True)
class Component:
    id: str
    cls: ComponentRole
    implements_node: str | None = None  # absent for boundary components
    supported_action: Action | None = None

    @property
    def is_boundary(self) -> bool:
        return isinstance(self.cls, Boundary)


@dataclass(frozen=True)
class Link:
    """Data transfer between two components.

    ``rationale`` is structured as "rule_id: free text" so decision logs stay
    greppable; it must be non-empty whenever the link is persistent.
    """

    id: str
    source: str
    target: str
    persistent: bool
    implements_edge: str
    rationale: str


@dataclass(frozen=True)
class Architecture:
    """Immutable component graph. Components and links are kept sorted by id."""

    components: tuple[Component, ...]
    links: tuple[Link, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(sorted(self.components, key=lambda c: c.id)))
        object.__setattr__(self, "links", tuple(sorted(self.links, key=lambda l: l.id)))

    @cached_property
    def component_by_id(self) -> Mapping[str, Component]:
        return {c.id: c for c in self.components}

    @cached_property
    def components_for_node(self) -> Mapping[str, tuple[Component, ...]]:
        grouped: dict[str, list[Component]] = {}
        for comp in self.components:
            if comp.implements_node is not None:
                grouped.setdefault(comp.implements_node, []).append(comp)
        return {k: tuple(v) for k, v in grouped.items()}

    @cached_property
    def incoming(self) -> Mapping[str, tuple[Link, ...]]:
        grouped: dict[str, list[Link]] = {c.id: [] for c in self.components}
        for link in self.links:
            grouped.setdefault(link.target, []).append(link)
        return {k: tuple(v) for k, v in grouped.items()}

    @cached_property
    def outgoing(self) -> Mapping[str, tuple[Link, ...]]:
        grouped: dict[str, list[Link]] = {c.id: [] for c in self.components}
        for link in self.links:
            grouped.setdefault(link.source, []).append(link)
        return {k: tuple(v) for k, v in grouped.items()}


def validate_architecture(arch: Architecture, scenario: Scenario | None = None) -> ValidationReport:
    """Check architecture invariants; empty report iff all hold.

    When ``scenario`` is given, component provenance (implements_node) is
    checked against it as well.
    """
    out: list[Violation] = []

    seen: set[str] = set()
    for comp in arch.components:
        if comp.id in seen:
            out.append(Violation("duplicate_component_id", comp.id, f"component id {comp.id!r} defined more than once"))
        seen.add(comp.id)
    seen_links: set[str] = set()
    for link in arch.links:
        if link.id in seen_links:
            out.append(Violation("duplicate_link_id", link.id, f"link id {link.id!r} defined more than once"))
        seen_links.add(link.id)

    comp_ids = {c.id for c in arch.components}
    for link in arch.links:
        for endpoint in (link.source, link.target):
            if endpoint not in comp_ids:
                out.append(Violation("unknown_component", link.id, f"link {link.id!r} references unknown component {endpoint!r}"))
        if link.source == link.target:
            out.append(Violation("link_self_loop", link.id, f"link {link.id!r} connects component {link.source!r} to itself"))
        if link.persistent and not link.rationale.strip():
            out.append(Violation("persistent_link_missing_rationale", link.id, f"persistent link {link.id!r} has no rationale"))

    for comp in arch.components:
        n_in = len(arch.incoming.get(comp.id, ()))
        n_out = len(arch.outgoing.get(comp.id, ()))
        if comp.cls is Boundary.EXTERNAL_PRODUCER and n_in:
            out.append(Violation("producer_has_incoming", comp.id, f"external producer {comp.id!r} has {n_in} incoming link(s)"))
        if comp.cls is Boundary.EXTERNAL_CONSUMER and n_out:
            out.append(Violation("consumer_has_outgoing", comp.id, f"external consumer {comp.id!r} has {n_out} outgoing link(s)"))
        if comp.is_boundary and comp.implements_node is not None:
            out.append(Violation("boundary_implements_node", comp.id, f"boundary component {comp.id!r} must not implement a node"))
        if not comp.is_boundary and comp.implements_node is None:
            out.append(Violation("missing_node_reference", comp.id, f"component {comp.id!r} does not reference a scenario node"))
        if scenario is not None and comp.implements_node is not None and comp.implements_node not in scenario.node_by_id:
            out.append(Violation("unknown_scenario_node", comp.id, f"component {comp.id!r} implements nonexistent node {comp.implements_node!r}"))

    for node_id, comps in sorted(arch.components_for_node.items()):
        if len(comps) > 2:
            out.append(Violation("too_many_components_per_node", node_id, f"node {node_id!r} is implemented by {len(comps)} components, at most 2 allowed"))
        elif len(comps) == 2:
            classes = {c.cls for c in comps}
            data_centric = {ComponentClass.BATCH, ComponentClass.STREAM}
            if ComponentClass.STATE_CENTRIC not in classes or not (classes & data_centric):
                listed = ", ".join(sorted(c.cls.value for c in comps))
                out.append(Violation("invalid_component_pair", node_id, f"node {node_id!r} pair must be one state-centric plus one data-centric, got: {listed}"))

    cyclic = cycle_nodes(comp_ids, ((l.source, l.target) for l in arch.links))
    if cyclic:
        listed = ", ".join(sorted(cyclic)[:8])
        out.append(Violation("cycle", None, f"architecture contains a cycle through: {listed}"))

    if not cyclic:
        forward = _reachable(arch, from_producers=True)
        backward = _reachable(arch, from_producers=False)
        for comp in arch.components:
            if not comp.is_boundary and (comp.id not in forward or comp.id not in backward):
                out.append(Violation("component_off_path", comp.id, f"component {comp.id!r} is not on any producer-to-consumer path"))

    return ValidationReport(tuple(out))


def _reachable(arch: Architecture, from_producers: bool) -> set[str]:
    if from_producers:
        start = [c.id for c in arch.components if c.cls is Boundary.EXTERNAL_PRODUCER]
        neighbors = lambda cid: (l.target for l in arch.outgoing.get(cid, ()))
    else:
        start = [c.id for c in arch.components if c.cls is Boundary.EXTERNAL_CONSUMER]
        neighbors = lambda cid: (l.source for l in arch.incoming.get(cid, ()))
    reached = set(start)
    frontier = list(start)
    while frontier:
        cid = frontier.pop()
        for nxt in neighbors(cid):
            if nxt not in reached and nxt in arch.component_by_id:
                reached.add(nxt)
                frontier.append(nxt)
    return reached
