"""archsynth: turn data-intensive application scenarios into explained architectures.

The pipeline decomposes a scenario graph into per-consumer data flows, picks
the cheapest component class for every action, decides link persistence by
rule, merges the flows into one architecture, and recommends concrete systems
per component and link, logging the reason behind every choice.
"""

from .architecture import (
    Architecture,
    Boundary,
    Component,
    ComponentClass,
    INTERNAL_EDGE,
    Link,
    validate_architecture,
)
from .catalog import (
    Catalog,
    ComponentRule,
    LinkRule,
    SystemRef,
    default_catalog,
    most_permissive,
    suggest_component,
    suggest_link,
)
from .costs import (
    CostEntry,
    CostForm,
    CostFunction,
    CostModel,
    DEFAULT_ENTRY,
    IDENTITY,
    cost_below,
)
from .scenario import (
    Action,
    ActionKind,
    DataType,
    DeliveryGuarantee,
    Edge,
    InvalidScenarioError,
    Node,
    NodeContext,
    NodeKind,
    Scenario,
    ValidationReport,
    Violation,
    node_frequencies,
    validate_scenario,
)
from .synthesis import (
    Assignment,
    CostBreakdown,
    DataFlow,
    DecisionEntry,
    FlowSynthesis,
    InfeasibleNodeError,
    LinkDecision,
    Recommendations,
    SynthesisResult,
    component_costs,
    extract_data_flows,
    integrate,
    select_components,
    select_links,
    synthesize,
)

__version__ = "0.1.0"

FIXTURE_NAMES = ("data_lake", "lambda", "liquid", "kappa", "facebook")


def fixture_text(name: str, kind: str = "scenario") -> str:
    """Bundled reference documents: kind is "scenario" or "costs".

    Raises FileNotFoundError when the fixture does not exist (not every
    fixture ships a cost model; absent costs mean the identity default).
    """
    from importlib import resources

    return resources.files("archsynth").joinpath(f"fixtures/{name}.{kind}.json").read_text("utf-8")
