import asyncio
import json
from fractions import Fraction

import pytest

from qflyest.baseline import load_scenario, packaged_scenario_paths
from qflyest.datamodel import HardwareProfile, OutputFormat, RunConfig
from qflyest.errors import FixtureMismatchError
from qflyest.report import (
    EXPECTED_CELLS,
    algorithm_reports,
    build_results_table,
    check_fixture,
    fixture_mismatches,
    render_algorithm_report,
    render_mapping,
    render_results_table,
    render_series,
)


@pytest.fixture(scope="module")
def scenarios():
    async def load_all():
        return await asyncio.gather(*(load_scenario(p) for p in packaged_scenario_paths()))

    return list(asyncio.run(load_all()))


@pytest.fixture(scope="module")
def results(scenarios):
    return build_results_table(RunConfig(), scenarios)


class TestResultsTable:
    """The full table against the pinned reference values"""

    def test_reference_values(self, results):
        assert len(EXPECTED_CELLS) == 59
        assert check_fixture(results) == 59

    def test_column_order(self, results):
        assert [c.label for c in results.columns] == ["AV_2", "t=2", "t=5", "AV_10", "t=10"]
        assert [c.is_baseline for c in results.columns] == [True, False, False, True, False]

    def test_sections(self, results):
        titles = [section.title for section in results.sections]
        assert titles[0] == "Core Subroutines"
        assert titles[1].startswith("QAOA Iteration Stages (n=64, m=11,264)")
        assert titles[2] == "DQI Execution Stages (n=50, m=200, l=25)"
        dqi_ids = [row.id for row in results.sections[2].rows]
        assert "dqi.hadamard" not in dqi_ids
        assert dqi_ids[-1] == "dqi.total"

    def test_empty_baseline_cells(self, results):
        assert results.cell("core.qcla_adder", "AV_2") is None
        assert results.cell("qaoa.fanout", "AV_10") is None
        with pytest.raises(KeyError):
            results.cell("qaoa.nothing", "t=2")

    def test_exact_values_are_kept(self, results):
        row = next(r for r in results.sections[0].rows if r.id == "core.dicke_unitary")
        cell = row.cells["t=5"]
        assert cell.cycles == 345_042
        assert cell.exact.denominator == 3

    def test_missing_baselines_are_reported(self):
        table = build_results_table(RunConfig())
        mismatches = fixture_mismatches(table)
        assert mismatches
        assert {m["column"] for m in mismatches} == {"AV_2", "AV_10"}

    def test_changed_hardware_fails_the_check(self, scenarios):
        table = build_results_table(RunConfig(hardware=HardwareProfile(t_toff=5)), scenarios)
        with pytest.raises(FixtureMismatchError) as e:
            check_fixture(table)
        rows = {m["row"] for m in e.value.mismatches}
        assert "core.gidney_adder" in rows
        assert "qaoa.fanout" not in rows

    def test_other_evaluation_points(self):
        table = build_results_table(RunConfig(t_bell_points=[3]))
        assert [c.label for c in table.columns] == ["t=3"]
        assert table.cell("qaoa.mixer", "t=3") == 201


class TestRendering:
    def test_markdown(self, results):
        text = render_results_table(results, OutputFormat.MARKDOWN)
        assert "### Core Subroutines" in text
        assert "| Subroutine / Stage | Formula (logical cycles) | AV_2 | t=2 | t=5 | AV_10 | t=10 |" in text
        assert "| Gidney Adder (64-bit) | (64 - 1)(T_Toff + 1/3·T_Bell) | 19 | 294 | 357 | 94 | 462 |" in text
        assert "| Total QAOA Iteration | fanout + clause_evaluation + mixer | 398,342 | 39,255 |" in text
        assert "| --- |" in text

    def test_csv(self, results):
        lines = render_results_table(results, OutputFormat.CSV).splitlines()
        assert lines[0] == "section,id,name,formula,AV_2,t=2,t=5,AV_10,t=10"
        qcla = next(line for line in lines if ",core.qcla_adder," in line)
        assert qcla.endswith(",,60,90,,140")

    def test_json(self, results):
        data = json.loads(render_results_table(results, OutputFormat.JSON))
        assert data["schema_version"] == 1
        dicke = data["sections"][0]["rows"][3]
        assert dicke["cells"]["t=2"]["exact"] == "1025375/3"
        assert dicke["cells"]["AV_2"] is None

    def test_algorithm_report(self):
        report = algorithm_reports(RunConfig())
        text = render_algorithm_report(next(iter(report.values())), OutputFormat.MARKDOWN)
        assert text.splitlines()[0] == "| Stage | Formula (logical cycles) | t=2 | t=5 | t=10 |"
        assert "| Clause Evaluation | 176(max(7·T_Bell, 5·T_Toff) + T_Grid) | 38,896 | 41,536 | 47,696 |" in text

    def test_algorithm_report_json(self):
        report = algorithm_reports(RunConfig())
        data = json.loads(render_algorithm_report(next(iter(report.values())), OutputFormat.JSON))
        assert data["algorithm"] == "qaoa"
        assert data["total"]["evaluated"][0] == {"t_bell": "2", "exact": "39255", "cycles": 39_255}
        assert data["stages"][1]["cost"] == "max(38896 + 0·t, 35376 + 1232·t)"
        assert data["stages"][1]["bell_slope"] == "1232"

    def test_series(self):
        rows = [[Fraction(5, 2), 1_000, None]]
        assert render_series(["t", "cycles", "x"], rows, OutputFormat.CSV, "s") == "t,cycles,x\n5/2,1000,"
        assert "| 5/2 | 1,000 | --- |" in render_series(["t", "cycles", "x"], rows, OutputFormat.MARKDOWN, "s")
        assert json.loads(render_series(["t"], [[Fraction(5, 2)]], OutputFormat.JSON, "s"))["s"] == [{"t": "5/2"}]

    def test_mapping(self):
        text = render_mapping({"diameter": 3, "duplex": True}, OutputFormat.MARKDOWN, "topology")
        assert "| diameter | 3 |" in text
        assert "| duplex | True |" in text
