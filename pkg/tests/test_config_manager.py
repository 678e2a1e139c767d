import json
from fractions import Fraction

import pytest
import yaml

from qflyest.config import Settings
from qflyest.datamodel import OutputFormat, RunConfig
from qflyest.errors import ConfigurationException
from qflyest.manager import ConfigManager


@pytest.fixture
def sample_config():
    """A run configuration that differs from the defaults in every section"""
    return {
        "hardware": {"code_distance": 3, "gridsynth_a": 9.19},
        "topology": {"num_groups": 32, "offsets": [1, 2, 4, 8, 16]},
        "qaoa": {"n_vars": 32, "clause_ratio": "4.26"},
        "dqi": {"weight_l": 10},
        "output_format": "csv",
        "t_bell_points": [2, "7/2", 10],
        "av_scenarios": ["av_2.yaml"],
    }


@pytest.fixture
def config_file(sample_config, tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text(yaml.safe_dump(sample_config))
    return path


class TestConfigManager:
    async def test_load_from_file(self, config_file, sample_config):
        assert await ConfigManager.load_from_file(config_file) == sample_config

        with pytest.raises(FileNotFoundError):
            await ConfigManager.load_from_file(config_file.parent / "missing.json")

        wrong_format = config_file.with_suffix(".txt")
        wrong_format.write_text("nothing")
        with pytest.raises(ValueError, match="Unsupported file format"):
            await ConfigManager.load_from_file(wrong_format)

    async def test_load_run_config(self, config_file):
        config = await ConfigManager.load_run_config(config_file)
        assert config.hardware.code_distance == 3
        assert config.hardware.gridsynth_a == Fraction(919, 100)
        assert config.topology.offsets == (1, 2, 4, 8, 16)
        assert config.qaoa.n_clauses == 137
        assert config.t_bell_points == [2, Fraction(7, 2), 10]
        assert config.output_format == OutputFormat.CSV
        # untouched sections keep their defaults
        assert config.routing.default == Fraction(1, 3)

    async def test_defaults_without_path(self):
        assert await ConfigManager.load_run_config() == RunConfig()

    async def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("")
        assert await ConfigManager.load_run_config(path) == RunConfig()

    @pytest.mark.parametrize(
        "content",
        [
            "t_bell_points: [1]",
            "t_bell_points: []",
            "topology: {offsets: [64]}",
            "routing: {qcla: 2}",
            "hardware: {t_toff: [",
        ],
    )
    async def test_invalid_config(self, tmp_path, content):
        path = tmp_path / "bad.yaml"
        path.write_text(content)
        with pytest.raises(ConfigurationException):
            await ConfigManager.load_run_config(path)

    async def test_missing_config(self, tmp_path):
        with pytest.raises(ConfigurationException, match="not found"):
            await ConfigManager.load_run_config(tmp_path / "missing.yaml")

    @pytest.mark.parametrize("suffix", [".json", ".yaml"])
    async def test_dump_and_reload(self, config_file, tmp_path, suffix):
        config = await ConfigManager.load_run_config(config_file)
        out = tmp_path / f"dumped{suffix}"
        await ConfigManager.dump(config, out)
        assert await ConfigManager.load_run_config(out) == config

    async def test_dump_writes_rationals_as_text(self, tmp_path):
        out = tmp_path / "defaults.json"
        await ConfigManager.dump(RunConfig(), out)
        data = json.loads(out.read_text())
        assert data["routing"]["default"] == "1/3"
        assert data["hardware"]["gridsynth_a"] == "919/100"

    async def test_dump_unsupported(self, tmp_path):
        with pytest.raises(ValueError):
            await ConfigManager.dump(RunConfig(), tmp_path / "config.toml")


class TestScenarioPaths:
    def test_config_relative_first(self, tmp_path):
        (tmp_path / "av_2.yaml").write_text("label: LOCAL\nt_bell: 2\n")
        config = RunConfig(av_scenarios=["av_2.yaml"])
        paths = ConfigManager.resolve_scenario_paths(config, tmp_path / "run.yaml", Settings().SCENARIO_DIR)
        assert paths == [tmp_path / "av_2.yaml"]

    def test_falls_back_to_scenario_dir(self, tmp_path):
        config = RunConfig(av_scenarios=["av_10.yaml"])
        scenario_dir = Settings().SCENARIO_DIR
        paths = ConfigManager.resolve_scenario_paths(config, tmp_path / "run.yaml", scenario_dir)
        assert paths[0].name == "av_10.yaml"
        assert paths[0].exists()

    def test_unresolved_keeps_config_relative(self, tmp_path):
        config = RunConfig(av_scenarios=["nowhere.yaml"])
        paths = ConfigManager.resolve_scenario_paths(config, tmp_path / "run.yaml", tmp_path / "scenarios")
        assert paths == [tmp_path / "nowhere.yaml"]


class TestSettings:
    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("QFLYEST_OUTPUT_FORMAT", "json")
        monkeypatch.setenv("QFLYEST_LOG_LEVEL", "DEBUG")
        settings = Settings()
        assert settings.OUTPUT_FORMAT == OutputFormat.JSON
        assert settings.LOG_LEVEL == "DEBUG"
