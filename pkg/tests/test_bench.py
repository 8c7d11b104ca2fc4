from __future__ import annotations

import pytest

from archsynth import extract_data_flows, validate_scenario
from archsynth.bench import STAGE_NAMES, gen_chain, gen_fanout, reports_to_csv, time_synthesis


class TestGenChain:
    def test_minimal_chain_has_three_nodes(self):
        s = gen_chain(1, seed=1)
        assert len(s.nodes) == 3
        assert validate_scenario(s).valid

    def test_large_chain_node_count(self):
        s = gen_chain(300, seed=2)
        assert len(s.nodes) == 302
        assert validate_scenario(s).valid

    def test_same_seed_same_scenario(self):
        assert gen_chain(20, seed=5) == gen_chain(20, seed=5)
        assert gen_chain(20, seed=5) != gen_chain(20, seed=6)

    def test_rejects_zero_nodes(self):
        with pytest.raises(ValueError):
            gen_chain(0)


class TestGenFanout:
    def test_single_consumer_single_flow(self):
        s = gen_fanout(10, 1, seed=3)
        assert len(extract_data_flows(s)) == 1

    def test_flow_count_matches_consumers(self):
        s = gen_fanout(50, 20, seed=4)
        assert len(extract_data_flows(s)) == 20

    def test_same_seed_same_scenario(self):
        assert gen_fanout(30, 5, seed=9) == gen_fanout(30, 5, seed=9)

    def test_generated_scenarios_always_valid(self):
        # broad sweep over sizes and seeds; full validation each time
        for n in (1, 2, 3, 5, 10, 50, 137, 300, 500):
            for seed in range(50):
                s = gen_fanout(n, 1 + seed % 7, seed=seed)
                assert validate_scenario(s).valid, (n, seed)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            gen_fanout(0, 1)
        with pytest.raises(ValueError):
            gen_fanout(1, 0)


class TestTimeSynthesis:
    def test_report_shape(self):
        report = time_synthesis(gen_chain(10, seed=0), repeats=3, shape="chain(10)")
        assert report.repeats == 3
        assert set(report.stage_ms) == set(STAGE_NAMES)
        assert all(isinstance(v, int) and v >= 0 for v in report.stage_ms.values())

    def test_rejects_zero_repeats(self):
        with pytest.raises(ValueError):
            time_synthesis(gen_chain(1), repeats=0)

    def test_fanout_completes_without_infeasibility(self):
        report = time_synthesis(gen_fanout(40, 10, seed=1), repeats=1, shape="fanout(40x10)")
        assert report.stage_ms["total"] >= 0

    def test_csv_rows(self):
        report = time_synthesis(gen_chain(5, seed=0), repeats=2, shape="chain(5)")
        csv_text = reports_to_csv([report])
        lines = csv_text.strip().splitlines()
        assert lines[0] == "shape,stage,mean_ms,repeats"
        assert len(lines) == 1 + len(STAGE_NAMES)
        assert lines[1].startswith("chain(5),extract,")
        assert lines[1].endswith(",2")
