from __future__ import annotations

from archsynth import (
    Architecture,
    Boundary,
    Component,
    ComponentClass,
    INTERNAL_EDGE,
    Link,
    synthesize,
    validate_architecture,
)

from conftest import load_fixture

SC = ComponentClass.STATE_CENTRIC
STREAM = ComponentClass.STREAM
BATCH = ComponentClass.BATCH


def comp(cid, cls, node=None):
    return Component(id=cid, cls=cls, implements_node=node)


def link(lid, source, target, persistent=False, rationale="V1: volatile"):
    return Link(
        id=lid, source=source, target=target, persistent=persistent,
        implements_edge=lid, rationale=rationale,
    )


def minimal_arch():
    return Architecture(
        components=(
            comp("P1", Boundary.EXTERNAL_PRODUCER),
            comp("n1.stream", STREAM, "n1"),
            comp("C1", Boundary.EXTERNAL_CONSUMER),
        ),
        links=(link("e1", "P1", "n1.stream"), link("e2", "n1.stream", "C1")),
    )


class TestValidateArchitecture:
    def test_lambda_architecture_is_clean(self):
        s, model = load_fixture("lambda")
        arch = synthesize(s, model=model).architecture
        assert validate_architecture(arch, s).valid

    def test_minimal_architecture_is_clean(self):
        assert validate_architecture(minimal_arch()).valid

    def test_component_for_nonexistent_node(self):
        s, _ = load_fixture("liquid")
        arch = Architecture(
            components=(
                comp("P1", Boundary.EXTERNAL_PRODUCER),
                comp("ghost.stream", STREAM, "ghost"),
                comp("C1", Boundary.EXTERNAL_CONSUMER),
            ),
            links=(link("e1", "P1", "ghost.stream"), link("e2", "ghost.stream", "C1")),
        )
        assert "unknown_scenario_node" in validate_architecture(arch, s).rules()
        # without a scenario the provenance check is skipped
        assert validate_architecture(arch).valid

    def test_three_components_for_one_node(self):
        arch = Architecture(
            components=(
                comp("P1", Boundary.EXTERNAL_PRODUCER),
                comp("n1.stream", STREAM, "n1"),
                comp("n1.batch", BATCH, "n1"),
                comp("n1.sc", SC, "n1"),
                comp("C1", Boundary.EXTERNAL_CONSUMER),
            ),
            links=(
                link("e1", "P1", "n1.stream"),
                link("e2", "n1.stream", "C1"),
                link("i1", "n1.stream", "n1.sc"),
                link("i2", "n1.stream", "n1.batch"),
                link("e3", "n1.sc", "C1"),
                link("e4", "n1.batch", "C1"),
            ),
        )
        assert "too_many_components_per_node" in validate_architecture(arch).rules()

    def test_two_data_centric_components_is_invalid_pair(self):
        arch = Architecture(
            components=(
                comp("P1", Boundary.EXTERNAL_PRODUCER),
                comp("n1.stream", STREAM, "n1"),
                comp("n1.batch", BATCH, "n1"),
                comp("C1", Boundary.EXTERNAL_CONSUMER),
            ),
            links=(
                link("e1", "P1", "n1.stream"),
                link("e2", "n1.stream", "C1"),
                link("i1", "n1.stream", "n1.batch"),
                link("e3", "n1.batch", "C1"),
            ),
        )
        assert "invalid_component_pair" in validate_architecture(arch).rules()

    def test_boundary_degree_rules(self):
        arch = Architecture(
            components=(
                comp("P1", Boundary.EXTERNAL_PRODUCER),
                comp("C1", Boundary.EXTERNAL_CONSUMER),
            ),
            links=(link("e1", "C1", "P1"),),
        )
        report = validate_architecture(arch)
        assert {"producer_has_incoming", "consumer_has_outgoing"} <= report.rules()

    def test_cycle_detected(self):
        arch = Architecture(
            components=(
                comp("P1", Boundary.EXTERNAL_PRODUCER),
                comp("n1.stream", STREAM, "n1"),
                comp("n2.stream", STREAM, "n2"),
                comp("C1", Boundary.EXTERNAL_CONSUMER),
            ),
            links=(
                link("e1", "P1", "n1.stream"),
                link("e2", "n1.stream", "n2.stream"),
                link("e3", "n2.stream", "n1.stream"),
                link("e4", "n2.stream", "C1"),
            ),
        )
        assert "cycle" in validate_architecture(arch).rules()

    def test_component_off_path(self):
        arch = Architecture(
            components=(
                comp("P1", Boundary.EXTERNAL_PRODUCER),
                comp("n1.stream", STREAM, "n1"),
                comp("n2.stream", STREAM, "n2"),
                comp("C1", Boundary.EXTERNAL_CONSUMER),
            ),
            links=(
                link("e1", "P1", "n1.stream"),
                link("e2", "n1.stream", "C1"),
                link("e3", "P1", "n2.stream"),  # n2 reaches no consumer
            ),
        )
        assert "component_off_path" in validate_architecture(arch).rules()

    def test_persistent_link_requires_rationale(self):
        arch = Architecture(
            components=(
                comp("P1", Boundary.EXTERNAL_PRODUCER),
                comp("n1.stream", STREAM, "n1"),
                comp("C1", Boundary.EXTERNAL_CONSUMER),
            ),
            links=(
                Link(id="e1", source="P1", target="n1.stream", persistent=True,
                     implements_edge="e1", rationale=""),
                link("e2", "n1.stream", "C1"),
            ),
        )
        assert "persistent_link_missing_rationale" in validate_architecture(arch).rules()

    def test_unknown_link_endpoint_and_self_loop(self):
        arch = Architecture(
            components=(
                comp("P1", Boundary.EXTERNAL_PRODUCER),
                comp("n1.stream", STREAM, "n1"),
                comp("C1", Boundary.EXTERNAL_CONSUMER),
            ),
            links=(
                link("e1", "P1", "n1.stream"),
                link("e2", "n1.stream", "C1"),
                link("e3", "ghost", "C1"),
                link("e4", "n1.stream", "n1.stream"),
            ),
        )
        report = validate_architecture(arch)
        assert {"unknown_component", "link_self_loop"} <= report.rules()

    def test_internal_edge_marker_round_trip(self):
        s, model = load_fixture("kappa")
        arch = synthesize(s, model=model).architecture
        internal = [l for l in arch.links if l.implements_edge == INTERNAL_EDGE]
        assert len(internal) == 1
