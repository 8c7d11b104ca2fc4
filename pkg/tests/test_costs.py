from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from archsynth import (
    ComponentClass,
    CostEntry,
    CostForm,
    CostFunction,
    CostModel,
    IDENTITY,
    cost_below,
)


class TestCostFunction:
    def test_linear_identity(self):
        assert CostFunction(CostForm.LINEAR, (1, 0))(10) == 10

    def test_constant_at_zero(self):
        assert CostFunction(CostForm.CONSTANT, (5,))(0) == 5

    def test_power(self):
        # 2 * 3**2
        assert CostFunction(CostForm.POWER, (2, 2))(3) == 18

    def test_polynomial_lowest_degree_first(self):
        f = CostFunction(CostForm.POLYNOMIAL, (1, 2, 3))
        assert f(2) == 1 + 2 * 2 + 3 * 4

    def test_power_zero_exponent_at_zero(self):
        assert CostFunction(CostForm.POWER, (4, 0))(0) == 4

    @pytest.mark.parametrize("bad", [float("nan"), float("inf"), -1.0])
    def test_rejects_bad_argument(self, bad):
        with pytest.raises(ValueError):
            IDENTITY(bad)

    @pytest.mark.parametrize(
        "form,params",
        [
            (CostForm.LINEAR, (1, -1)),
            (CostForm.CONSTANT, (-2,)),
            (CostForm.POWER, (1, -1)),
            (CostForm.POLYNOMIAL, (1, -3)),
            (CostForm.LINEAR, (float("inf"), 0)),
            (CostForm.LINEAR, (1,)),
            (CostForm.POLYNOMIAL, ()),
        ],
    )
    def test_rejects_bad_parameters(self, form, params):
        with pytest.raises(ValueError):
            CostFunction(form, params)

    @given(
        st.sampled_from(list(CostForm)),
        st.data(),
        st.floats(min_value=0, max_value=1e6),
        st.floats(min_value=0, max_value=1e6),
    )
    def test_monotone_nondecreasing(self, form, data, x, y):
        params = {
            CostForm.CONSTANT: lambda: (data.draw(st.integers(0, 9)),),
            CostForm.LINEAR: lambda: (data.draw(st.integers(0, 9)), data.draw(st.integers(0, 9))),
            CostForm.POWER: lambda: (data.draw(st.integers(0, 9)), data.draw(st.integers(0, 3))),
            CostForm.POLYNOMIAL: lambda: tuple(
                data.draw(st.integers(0, 9)) for _ in range(data.draw(st.integers(1, 4)))
            ),
        }[form]()
        f = CostFunction(form, params)
        lo, hi = sorted((x, y))
        assert f(lo) <= f(hi)
        assert f(lo) >= 0


class TestCostModel:
    def test_absent_pair_falls_back_to_default(self):
        model = CostModel()
        entry = model.lookup("graph_algorithm", ComponentClass.STREAM)
        assert entry is not None
        assert entry.cc(10) == 10

    def test_explicit_unsupported(self):
        model = CostModel(entries={("x", ComponentClass.BATCH): None})
        assert model.lookup("x", ComponentClass.BATCH) is None

    def test_explicit_entry_returned(self):
        entry = CostEntry(cc=IDENTITY, rc=IDENTITY)
        model = CostModel(entries={("aggregation", ComponentClass.STATE_CENTRIC): entry})
        found = model.lookup("aggregation", ComponentClass.STATE_CENTRIC)
        assert found is entry
        assert found.rc is not None

    def test_lookup_is_total(self):
        model = CostModel(entries={("x", ComponentClass.BATCH): None})
        for subtype in ("x", "y", "anything"):
            for cls in ComponentClass:
                model.lookup(subtype, cls)  # never raises


class TestCostOrder:
    def test_none_is_greater_than_any_finite(self):
        assert cost_below(1.0, None)
        assert not cost_below(None, 1.0)
        assert not cost_below(None, None)
        assert cost_below(1.0, 2.0)
        assert not cost_below(2.0, 1.0)
        assert not cost_below(1.0, 1.0)
