"""Parse and serialize the JSON documents the toolchain exchanges.

All documents are UTF-8 JSON. Serialization is canonical: keys sorted,
elements ordered by ascending id, numbers in shortest round-trip decimal form,
so identical inputs always produce byte-identical output. Symbolic frequency
and cardinality levels ("high" / "medium" / "low") are resolved to numbers at
parse time through a LevelMap.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Mapping

from . import catalog as catalog_mod
from .architecture import Architecture, Boundary, Component, ComponentClass, Link
from .catalog import Catalog
from .costs import CostEntry, CostFunction, CostModel, DEFAULT_ENTRY
from .scenario import (
    Action,
    ActionKind,
    DataType,
    DeliveryGuarantee,
    Edge,
    InvalidScenarioError,
    Node,
    NodeKind,
    Scenario,
    ValidationReport,
    Violation,
    validate_scenario,
)
from .synthesis import DecisionEntry, STAGES, SynthesisResult

SCHEMA_VERSION = 1

DEFAULT_FREQUENCY_LEVELS = {"high": 1000.0, "medium": 1.0, "low": 0.001}
DEFAULT_CARDINALITY_LEVELS = {"high": 100.0, "medium": 10.0, "low": 1.0}


class ParseError(Exception):
    """Document is not well-formed JSON; message carries the position."""


class SchemaError(Exception):
    """Document is valid JSON but violates the schema; message names the key."""


@dataclass(frozen=True)
class LevelMap:
    """Numeric meaning of the symbolic levels, per attribute family."""

    frequency: Mapping[str, float] = field(default_factory=lambda: dict(DEFAULT_FREQUENCY_LEVELS))
    cardinality: Mapping[str, float] = field(default_factory=lambda: dict(DEFAULT_CARDINALITY_LEVELS))

    def __post_init__(self) -> None:
        for family, table in (("frequency", self.frequency), ("cardinality", self.cardinality)):
            missing = {"high", "medium", "low"} - set(table)
            if missing:
                raise ValueError(f"{family} level map is missing levels: {sorted(missing)}")
            if any(not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0) for v in table.values()):
                raise ValueError(f"{family} level values must be positive and finite")
            if not (table["high"] > table["medium"] > table["low"]):
                raise ValueError(f"{family} levels must be strictly ordered high > medium > low")


DEFAULT_LEVELS = LevelMap()


def parse_levels(doc: Any) -> LevelMap:
    """LevelMap from a (possibly partial) override document or raw bytes."""
    if isinstance(doc, (bytes, str)):
        doc = _loads(doc)
    if not isinstance(doc, dict):
        raise SchemaError("level map document must be an object")
    frequency = dict(DEFAULT_FREQUENCY_LEVELS)
    cardinality = dict(DEFAULT_CARDINALITY_LEVELS)
    frequency.update(doc.get("frequency", {}))
    cardinality.update(doc.get("cardinality", {}))
    try:
        return LevelMap(frequency=frequency, cardinality=cardinality)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def _loads(data: bytes | str) -> Any:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _dumps(doc: Any) -> bytes:
    return (json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _require(obj: Any, key: str, path: str) -> Any:
    if not isinstance(obj, dict):
        raise SchemaError(f"{path} must be an object")
    if key not in obj:
        raise SchemaError(f"{path}.{key} is required")
    return obj[key]


def _string(value: Any, path: str) -> str:
    if not isinstance(value, str) or not value:
        raise SchemaError(f"{path} must be a non-empty string")
    return value


def _enum(value: Any, enum_cls: type, path: str) -> Any:
    try:
        return enum_cls(value)
    except ValueError:
        allowed = ", ".join(e.value for e in enum_cls)
        raise SchemaError(f"{path}: unknown value {value!r}, expected one of: {allowed}") from None


def _leveled_number(value: Any, table: Mapping[str, float], path: str) -> float:
    if isinstance(value, str):
        if value not in table:
            raise SchemaError(f"{path}: unknown level {value!r}, expected high, medium, or low, or a number")
        return float(table[value])
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{path} must be a number or a symbolic level")
    return float(value)


# -- scenario documents -------------------------------------------------------

def _build_scenario(doc: Any, levels: LevelMap) -> Scenario:
    if not isinstance(doc, dict):
        raise SchemaError("scenario document must be an object")
    nodes = []
    for i, raw in enumerate(doc.get("nodes", [])):
        path = f"nodes[{i}]"
        node_id = _string(_require(raw, "id", path), f"{path}.id")
        kind = _enum(_require(raw, "kind", path), NodeKind, f"{path}.kind")
        guarantee = None
        if "delivery_guarantee" in raw:
            guarantee = _enum(raw["delivery_guarantee"], DeliveryGuarantee, f"{path}.delivery_guarantee")
        action = None
        if "action" in raw:
            action = _parse_action(raw["action"], levels, f"{path}.action")
        nodes.append(Node(id=node_id, kind=kind, delivery_guarantee=guarantee, action=action))
    edges = []
    for i, raw in enumerate(doc.get("edges", [])):
        path = f"edges[{i}]"
        edges.append(Edge(
            id=_string(_require(raw, "id", path), f"{path}.id"),
            source=_string(_require(raw, "from", path), f"{path}.from"),
            target=_string(_require(raw, "to", path), f"{path}.to"),
            data_type=_enum(_require(raw, "data_type", path), DataType, f"{path}.data_type"),
            refinement=raw.get("refinement"),
            frequency=_leveled_number(_require(raw, "frequency", path), levels.frequency, f"{path}.frequency"),
        ))
    return Scenario(nodes=tuple(nodes), edges=tuple(edges))


def parse_scenario(data: bytes | str, levels: LevelMap = DEFAULT_LEVELS) -> Scenario:
    """Parse and validate a scenario document.

    Raises ParseError on malformed JSON, SchemaError on shape problems, and
    InvalidScenarioError (carrying the full report) when the parsed graph
    violates scenario invariants.
    """
    scenario = _build_scenario(_loads(data), levels)
    report = validate_scenario(scenario)
    if not report.valid:
        raise InvalidScenarioError(report)
    return scenario


def parse_scenario_lenient(data: bytes | str, levels: LevelMap = DEFAULT_LEVELS) -> tuple[Scenario, ValidationReport]:
    """Like parse_scenario but returns the validation report instead of raising."""
    scenario = _build_scenario(_loads(data), levels)
    return scenario, validate_scenario(scenario)


def _parse_action(raw: Any, levels: LevelMap, path: str) -> Action:
    return Action(
        kind=_enum(_require(raw, "kind", path), ActionKind, f"{path}.kind"),
        subtype=_string(_require(raw, "subtype", path), f"{path}.subtype"),
        input_cardinality=_leveled_number(
            _require(raw, "input_cardinality", path), levels.cardinality, f"{path}.input_cardinality"),
        output_cardinality=_leveled_number(
            _require(raw, "output_cardinality", path), levels.cardinality, f"{path}.output_cardinality"),
    )


def scenario_to_doc(scenario: Scenario) -> dict:
    nodes = []
    for node in scenario.nodes:
        raw: dict[str, Any] = {"id": node.id, "kind": node.kind.value}
        if node.delivery_guarantee is not None:
            raw["delivery_guarantee"] = node.delivery_guarantee.value
        if node.action is not None:
            raw["action"] = {
                "kind": node.action.kind.value,
                "subtype": node.action.subtype,
                "input_cardinality": node.action.input_cardinality,
                "output_cardinality": node.action.output_cardinality,
            }
        nodes.append(raw)
    edges = []
    for edge in scenario.edges:
        raw = {
            "id": edge.id,
            "from": edge.source,
            "to": edge.target,
            "data_type": edge.data_type.value,
            "frequency": edge.frequency,
        }
        if edge.refinement is not None:
            raw["refinement"] = edge.refinement
        edges.append(raw)
    return {"schema_version": SCHEMA_VERSION, "nodes": nodes, "edges": edges}


def serialize_scenario(scenario: Scenario) -> bytes:
    return _dumps(scenario_to_doc(scenario))


# -- architecture documents ---------------------------------------------------

def _parse_component(raw: Any, path: str) -> Component:
    cls_value = _require(raw, "class", path)
    cls: Any
    try:
        cls = ComponentClass(cls_value)
    except ValueError:
        cls = _enum(cls_value, Boundary, f"{path}.class")
    action = None
    if "action" in raw:
        action = _parse_action(raw["action"], DEFAULT_LEVELS, f"{path}.action")
    return Component(
        id=_string(_require(raw, "id", path), f"{path}.id"),
        cls=cls,
        implements_node=raw.get("implements_node"),
        supported_action=action,
    )


def parse_architecture(data: bytes | str) -> Architecture:
    doc = _loads(data)
    if not isinstance(doc, dict):
        raise SchemaError("architecture document must be an object")
    components = [
        _parse_component(raw, f"components[{i}]") for i, raw in enumerate(doc.get("components", []))
    ]
    links = []
    for i, raw in enumerate(doc.get("links", [])):
        path = f"links[{i}]"
        persistent = _require(raw, "persistent", path)
        if not isinstance(persistent, bool):
            raise SchemaError(f"{path}.persistent must be a boolean")
        links.append(Link(
            id=_string(_require(raw, "id", path), f"{path}.id"),
            source=_string(_require(raw, "from", path), f"{path}.from"),
            target=_string(_require(raw, "to", path), f"{path}.to"),
            persistent=persistent,
            implements_edge=_string(_require(raw, "implements_edge", path), f"{path}.implements_edge"),
            rationale=str(raw.get("rationale", "")),
        ))
    return Architecture(components=tuple(components), links=tuple(links))


def architecture_to_doc(arch: Architecture) -> dict:
    components = []
    for comp in arch.components:
        raw: dict[str, Any] = {"id": comp.id, "class": comp.cls.value}
        if comp.implements_node is not None:
            raw["implements_node"] = comp.implements_node
        if comp.supported_action is not None:
            raw["action"] = {
                "kind": comp.supported_action.kind.value,
                "subtype": comp.supported_action.subtype,
                "input_cardinality": comp.supported_action.input_cardinality,
                "output_cardinality": comp.supported_action.output_cardinality,
            }
        components.append(raw)
    links = [
        {
            "id": link.id,
            "from": link.source,
            "to": link.target,
            "persistent": link.persistent,
            "implements_edge": link.implements_edge,
            "rationale": link.rationale,
        }
        for link in arch.links
    ]
    return {"schema_version": SCHEMA_VERSION, "components": components, "links": links}


def serialize_architecture(arch: Architecture) -> bytes:
    return _dumps(architecture_to_doc(arch))


# -- cost model documents ------------------------------------------------------

def _parse_cost_function(raw: Any, path: str) -> CostFunction:
    form = _require(raw, "form", path)
    params = _require(raw, "params", path)
    if not isinstance(params, list):
        raise SchemaError(f"{path}.params must be an array of numbers")
    try:
        return CostFunction(form=form, parameters=tuple(params))
    except ValueError as exc:
        raise SchemaError(f"{path}: {exc}") from None


def parse_cost_model(data: bytes | str) -> CostModel:
    doc = _loads(data)
    if not isinstance(doc, dict):
        raise SchemaError("cost model document must be an object")
    default = DEFAULT_ENTRY
    if "default" in doc:
        raw = doc["default"]
        default = CostEntry(
            cc=_parse_cost_function(_require(raw, "cc", "default"), "default.cc"),
            rc=_parse_cost_function(raw["rc"], "default.rc") if "rc" in raw else None,
        )
        if default.rc is None:
            raise SchemaError("default.rc is required (the default entry serves state-centric lookups)")
    entries: dict[tuple[str, ComponentClass], CostEntry | None] = {}
    for i, raw in enumerate(doc.get("entries", [])):
        path = f"entries[{i}]"
        subtype = _string(_require(raw, "action_subtype", path), f"{path}.action_subtype")
        cls = _enum(_require(raw, "class", path), ComponentClass, f"{path}.class")
        if raw.get("unsupported", False):
            entries[(subtype, cls)] = None
            continue
        cc = _parse_cost_function(_require(raw, "cc", path), f"{path}.cc")
        rc = _parse_cost_function(raw["rc"], f"{path}.rc") if "rc" in raw else None
        if cls is ComponentClass.STATE_CENTRIC and rc is None:
            raise SchemaError(f"{path}: state_centric entries must define rc")
        if cls is not ComponentClass.STATE_CENTRIC and rc is not None:
            raise SchemaError(f"{path}: only state_centric entries may define rc")
        entries[(subtype, cls)] = CostEntry(cc=cc, rc=rc)
    return CostModel(entries=entries, default=default)


def cost_model_to_doc(model: CostModel) -> dict:
    def fn(f: CostFunction) -> dict:
        return {"form": f.form.value, "params": list(f.parameters)}

    entries = []
    for (subtype, cls) in sorted(model.entries, key=lambda k: (k[0], k[1].value)):
        entry = model.entries[(subtype, cls)]
        raw: dict[str, Any] = {"action_subtype": subtype, "class": cls.value}
        if entry is None:
            raw["unsupported"] = True
        else:
            raw["cc"] = fn(entry.cc)
            if entry.rc is not None:
                raw["rc"] = fn(entry.rc)
        entries.append(raw)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "default": {"cc": fn(model.default.cc)},
        "entries": entries,
    }
    if model.default.rc is not None:
        doc["default"]["rc"] = fn(model.default.rc)
    return doc


def serialize_cost_model(model: CostModel) -> bytes:
    return _dumps(cost_model_to_doc(model))


# -- catalog documents ---------------------------------------------------------

def parse_catalog(data: bytes | str) -> Catalog:
    doc = _loads(data)
    try:
        return catalog_mod.catalog_from_config(doc)
    except (ValueError, KeyError, TypeError) as exc:
        raise SchemaError(f"catalog document: {exc}") from None


def serialize_catalog(cat: Catalog) -> bytes:
    return _dumps(catalog_mod.catalog_to_config(cat))


# -- validation reports ---------------------------------------------------------

def report_to_doc(report: ValidationReport) -> dict:
    return {
        "valid": report.valid,
        "violations": [
            {"rule": v.rule, "element": v.element, "message": v.message}
            for v in report.violations
        ],
    }


def serialize_report(report: ValidationReport) -> bytes:
    return _dumps(report_to_doc(report))


# -- synthesis results -----------------------------------------------------------

def result_to_doc(result: SynthesisResult) -> dict:
    flows = []
    for fs in result.per_flow:
        flows.append({
            "consumer": fs.flow.consumer,
            "nodes": [n.id for n in fs.flow.nodes],
            "edges": [e.id for e in fs.flow.edges],
            "contexts": {
                node_id: {"incoming": ctx.incoming, "outgoing": ctx.outgoing}
                for node_id, ctx in sorted(fs.flow.contexts.items())
            },
            "costs": {
                node_id: {
                    "state_centric": b.state_centric,
                    "data_centric_batch": b.batch,
                    "data_centric_stream": b.stream,
                }
                for node_id, b in sorted(fs.breakdowns.items())
            },
            "assignment": {
                node_id: cls.value for node_id, cls in sorted(fs.assignment.classes.items())
            },
            "objective": fs.assignment.objective_value,
            "link_plan": {
                edge_id: {"persistent": d.persistent, "rule": d.rule}
                for edge_id, d in sorted(fs.link_plan.items())
            },
        })
    return {
        "schema_version": SCHEMA_VERSION,
        "architecture": architecture_to_doc(result.architecture),
        "flows": flows,
        "recommendations": {
            "components": {k: list(v) for k, v in sorted(result.recommendations.components.items())},
            "links": {k: list(v) for k, v in sorted(result.recommendations.links.items())},
        },
        "decisions": [
            {
                "stage": d.stage,
                "rule": d.rule,
                "elements": list(d.elements),
                "explanation": d.explanation,
            }
            for d in result.decisions
        ],
    }


def serialize_result(result: SynthesisResult) -> bytes:
    return _dumps(result_to_doc(result))


# -- DOT export -------------------------------------------------------------------

def export_dot(arch: Architecture) -> str:
    """Render an architecture as a Graphviz digraph.

    Boundary components draw as ellipses, internal components as boxes with
    their class; persistent links draw bold and labeled, volatile ones dashed.
    """
    lines = ["digraph architecture {", "  rankdir=LR;"]
    for comp in arch.components:
        if comp.is_boundary:
            lines.append(f'  "{comp.id}" [shape=ellipse];')
        else:
            label = f"{comp.id}\\n{comp.cls.value}"
            lines.append(f'  "{comp.id}" [shape=box, label="{label}"];')
    for link in arch.links:
        if link.persistent:
            attrs = f'style=bold, label="{link.id} (persistent)"'
        else:
            attrs = f'style=dashed, label="{link.id}"'
        lines.append(f'  "{link.source}" -> "{link.target}" [{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- decision log -------------------------------------------------------------------

_STAGE_TITLES = {
    "extraction": "Data flow extraction",
    "component_selection": "Component selection",
    "link_selection": "Link selection (per data flow)",
    "integration": "Integration",
    "recommendation": "System recommendations",
}


def render_decision_log(result: SynthesisResult) -> str:
    """Markdown rendering of the decision log, one section per pipeline stage."""
    arch = result.architecture
    lines = [
        "# Synthesis decision log",
        "",
        f"{len(result.per_flow)} data flow(s), {len(arch.components)} component(s), "
        f"{len(arch.links)} link(s).",
    ]
    for stage in STAGES:
        entries = [d for d in result.decisions if d.stage == stage]
        if not entries:
            continue
        lines.append("")
        lines.append(f"## {_STAGE_TITLES.get(stage, stage)}")
        lines.append("")
        for entry in entries:
            elements = ", ".join(entry.elements)
            lines.append(f"- **{entry.rule}** [{elements}] {entry.explanation}")
    return "\n".join(lines) + "\n"
