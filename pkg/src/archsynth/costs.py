"""User-configurable cost functions and the action-support matrix.

Costs are dimensionless rate-weighted work: only the relative order between
component classes matters for selection. An action that a component class
cannot implement has infinite cost, represented throughout as ``None`` (a
distinguished marker, never a floating-point infinity, so arithmetic can never
produce NaNs). Comparisons treat ``None`` as greater than any finite cost.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .architecture import ComponentClass


class CostForm(str, Enum):
    CONSTANT = "constant"
    LINEAR = "linear"
    POWER = "power"
    POLYNOMIAL = "polynomial"


_ARITY = {CostForm.CONSTANT: 1, CostForm.LINEAR: 2, CostForm.POWER: 2}


@dataclass(frozen=True)
class CostFunction:
    """One of four function families, validated to stay finite and >= 0 on x >= 0.

    Parameter conventions: constant [c]; linear [a, b] meaning a*x + b;
    power [a, k] meaning a*x**k; polynomial coefficients lowest degree first.
    Requiring nonnegative coefficients (and exponent) keeps every family
    nonnegative and monotone nondecreasing, which selection relies on.
    """

    form: CostForm
    parameters: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "form", CostForm(self.form))
        object.__setattr__(self, "parameters", tuple(float(p) for p in self.parameters))
        expected = _ARITY.get(self.form)
        if expected is not None and len(self.parameters) != expected:
            raise ValueError(f"{self.form.value} cost function takes {expected} parameter(s), got {len(self.parameters)}")
        if self.form is CostForm.POLYNOMIAL and not self.parameters:
            raise ValueError("polynomial cost function needs at least one coefficient")
        for p in self.parameters:
            if not math.isfinite(p):
                raise ValueError(f"cost function parameters must be finite, got {p!r}")
            if p < 0:
                raise ValueError(f"cost function parameters must be >= 0 to keep cost nonnegative, got {p!r}")

    def evaluate(self, x: float) -> float:
        """Evaluate at x >= 0; exact arithmetic per form, deterministic."""
        if not math.isfinite(x):
            raise ValueError(f"cost function argument must be finite, got {x!r}")
        if x < 0:
            raise ValueError(f"cost function argument must be >= 0, got {x!r}")
        p = self.parameters
        if self.form is CostForm.CONSTANT:
            return p[0]
        if self.form is CostForm.LINEAR:
            return p[0] * x + p[1]
        if self.form is CostForm.POWER:
            return p[0] * x ** p[1]
        # polynomial, Horner from the highest degree
        acc = 0.0
        for coeff in reversed(p):
            acc = acc * x + coeff
        return acc

    __call__ = evaluate


IDENTITY = CostFunction(CostForm.LINEAR, (1.0, 0.0))


@dataclass(frozen=True)
class CostEntry:
    """Cost functions for one (action subtype, component class) pair.

    ``cc`` is the computational cost per evaluation; ``rc`` is the retrieval
    cost per downstream request and only meaningful for state-centric entries.
    """

    cc: CostFunction
    rc: CostFunction | None = None


# Default mirrors "cost linear in the input cardinality": identity for both
# computation and retrieval, so the tool works with zero cost configuration.
DEFAULT_ENTRY = CostEntry(cc=IDENTITY, rc=IDENTITY)


@dataclass(frozen=True)
class CostModel:
    """Support matrix plus cost functions, keyed by (action subtype, class).

    An entry of ``None`` marks the pair as unsupported (infinite cost). Absent
    pairs fall back to ``default``, so lookup is a total function.
    """

    entries: Mapping[tuple[str, ComponentClass], CostEntry | None] = field(default_factory=dict)
    default: CostEntry = DEFAULT_ENTRY

    def lookup(self, action_subtype: str, cls: ComponentClass) -> CostEntry | None:
        key = (action_subtype, ComponentClass(cls))
        if key in self.entries:
            return self.entries[key]
        return self.default


def cost_below(a: float | None, b: float | None) -> bool:
    """Strict cost order where None (unsupported) exceeds any finite cost."""
    if a is None:
        return False
    if b is None:
        return True
    return a < b
