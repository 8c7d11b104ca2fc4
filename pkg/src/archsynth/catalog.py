"""Map components and links to concrete system recommendations.

The catalog is data, not code: an ordered rule list loaded from a config
document, so teams can extend or specialize it without touching the engine.
Matching is first-match-wins; a rule may set ``accumulate`` to let later
matching rules append additional systems.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Any

from .architecture import Component, ComponentClass, Link
from .scenario import DataType

# wider types can hold narrower ones, so "most permissive" wins for stores
_PERMISSIVENESS = {
    DataType.STRUCTURED: 0,
    DataType.SEMISTRUCTURED: 1,
    DataType.UNSTRUCTURED: 2,
}


def most_permissive(types: list[DataType]) -> DataType:
    if not types:
        raise ValueError("most_permissive needs at least one data type")
    return max(types, key=lambda t: _PERMISSIVENESS[t])


@dataclass(frozen=True)
class SystemRef:
    name: str
    category: str


@dataclass(frozen=True)
class ComponentRule:
    """Match on component class plus an optional data-type predicate."""

    cls: ComponentClass
    systems: tuple[SystemRef, ...]
    data_type: DataType | None = None
    refinement: str | None = None
    accumulate: bool = False

    def __post_init__(self) -> None:
        if not self.systems:
            raise ValueError("catalog rule must list at least one system")

    def matches(self, cls: ComponentClass, data_type: DataType | None, refinement: str | None) -> bool:
        if self.cls is not cls:
            return False
        if self.data_type is not None and self.data_type is not data_type:
            return False
        if self.refinement is not None and self.refinement != refinement:
            return False
        return True


@dataclass(frozen=True)
class LinkRule:
    persistent: bool
    systems: tuple[SystemRef, ...]
    accumulate: bool = False

    def __post_init__(self) -> None:
        if not self.systems:
            raise ValueError("catalog rule must list at least one system")


@dataclass(frozen=True)
class Catalog:
    component_rules: tuple[ComponentRule, ...] = ()
    link_rules: tuple[LinkRule, ...] = ()


def _collect(matching_rules: list) -> tuple[str, ...]:
    names: list[str] = []
    for rule in matching_rules:
        for system in rule.systems:
            if system.name not in names:
                names.append(system.name)
        if not rule.accumulate:
            break
    return tuple(names)


def suggest_component(
    cat: Catalog,
    comp: Component,
    data_type: DataType | None,
    refinement: str | None = None,
) -> tuple[str, ...]:
    """Ordered, duplicate-free system names for a non-boundary component.

    An empty result is allowed; callers log it as "no recommendation".
    """
    if comp.is_boundary:
        raise ValueError(f"boundary component {comp.id!r} takes no system recommendation")
    assert isinstance(comp.cls, ComponentClass)
    matching = [r for r in cat.component_rules if r.matches(comp.cls, data_type, refinement)]
    return _collect(matching)


def suggest_link(cat: Catalog, link: Link) -> tuple[str, ...]:
    """Ordered, duplicate-free system names for a link, by persistence."""
    matching = [r for r in cat.link_rules if r.persistent == link.persistent]
    return _collect(matching)


def catalog_from_config(doc: Any) -> Catalog:
    """Build a Catalog from a parsed config document (see the io module schema)."""
    if not isinstance(doc, dict):
        raise ValueError("catalog document must be an object")
    component_rules = []
    for i, raw in enumerate(doc.get("component_rules", [])):
        match = raw.get("match", {})
        if "class" not in match:
            raise ValueError(f"component_rules[{i}].match.class is required")
        component_rules.append(
            ComponentRule(
                cls=ComponentClass(match["class"]),
                data_type=DataType(match["data_type"]) if "data_type" in match else None,
                refinement=match.get("refinement"),
                accumulate=bool(raw.get("accumulate", False)),
                systems=tuple(SystemRef(s["name"], s.get("category", "")) for s in raw.get("systems", [])),
            )
        )
    link_rules = []
    for i, raw in enumerate(doc.get("link_rules", [])):
        match = raw.get("match", {})
        if "persistent" not in match:
            raise ValueError(f"link_rules[{i}].match.persistent is required")
        link_rules.append(
            LinkRule(
                persistent=bool(match["persistent"]),
                accumulate=bool(raw.get("accumulate", False)),
                systems=tuple(SystemRef(s["name"], s.get("category", "")) for s in raw.get("systems", [])),
            )
        )
    return Catalog(tuple(component_rules), tuple(link_rules))


def catalog_to_config(cat: Catalog) -> dict:
    doc: dict[str, Any] = {"schema_version": 1, "component_rules": [], "link_rules": []}
    for rule in cat.component_rules:
        match: dict[str, Any] = {"class": rule.cls.value}
        if rule.data_type is not None:
            match["data_type"] = rule.data_type.value
        if rule.refinement is not None:
            match["refinement"] = rule.refinement
        doc["component_rules"].append(
            {
                "match": match,
                "accumulate": rule.accumulate,
                "systems": [{"name": s.name, "category": s.category} for s in rule.systems],
            }
        )
    for rule in cat.link_rules:
        doc["link_rules"].append(
            {
                "match": {"persistent": rule.persistent},
                "accumulate": rule.accumulate,
                "systems": [{"name": s.name, "category": s.category} for s in rule.systems],
            }
        )
    return doc


def default_catalog() -> Catalog:
    """The catalog shipped with the package (data management, processing, transfer)."""
    raw = resources.files("archsynth").joinpath("data/default_catalog.json").read_text("utf-8")
    return catalog_from_config(json.loads(raw))
