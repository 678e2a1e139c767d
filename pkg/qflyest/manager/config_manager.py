import json
from pathlib import Path
from typing import Any, List, Optional, Union

import aiofiles
import yaml
from loguru import logger
from pydantic import ValidationError

from ..datamodel import RunConfig
from ..errors import ConfigurationException


class ConfigManager:
    """Loads and writes run configurations in JSON or YAML"""

    @staticmethod
    async def load_from_file(path: Union[str, Path]) -> Any:
        """Load a raw document from a JSON/YAML file"""
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Config file not found: {path}")

        async with aiofiles.open(path) as f:
            content = await f.read()
            if path.suffix == ".json":
                return json.loads(content)
            elif path.suffix in (".yml", ".yaml"):
                return yaml.safe_load(content)
            raise ValueError(f"Unsupported file format: {path.suffix}")

    @staticmethod
    async def load_run_config(path: Optional[Union[str, Path]] = None) -> RunConfig:
        """
        Load a RunConfig; no path means built-in defaults.

        Raises:
            ConfigurationException: if the file is missing, unreadable or invalid.
        """
        if not path:
            return RunConfig()
        try:
            data = await ConfigManager.load_from_file(path)
        except FileNotFoundError as e:
            raise ConfigurationException(str(e)) from e
        except (ValueError, yaml.YAMLError) as e:
            raise ConfigurationException(f"Could not parse {path}: {e}") from e

        try:
            config = RunConfig.model_validate(data or {})
        except ValidationError as e:
            raise ConfigurationException(f"Invalid configuration in {path}: {e}") from e
        logger.info(f"Loaded run configuration from {path}")
        return config

    @staticmethod
    def resolve_scenario_paths(
        config: RunConfig, config_path: Optional[Union[str, Path]], scenario_dir: Union[str, Path]
    ) -> List[Path]:
        """Relative scenario paths resolve against the config file's directory, then scenario_dir"""
        base = Path(config_path).parent if config_path else Path.cwd()
        resolved = []
        for entry in config.av_scenarios:
            candidate = Path(entry)
            if candidate.is_absolute():
                resolved.append(candidate)
                continue
            for root in (base, Path(scenario_dir)):
                if (root / candidate).exists():
                    resolved.append(root / candidate)
                    break
            else:
                # keep the config-relative path so the error names it
                resolved.append(base / candidate)
        return resolved

    @staticmethod
    async def dump(config: RunConfig, path: Union[str, Path]) -> None:
        """Write a RunConfig; rationals are written as "p/q" strings"""
        path = Path(path)
        data = config.model_dump(mode="json")
        if path.suffix == ".json":
            content = json.dumps(data, indent=2)
        elif path.suffix in (".yml", ".yaml"):
            content = yaml.safe_dump(data, sort_keys=False)
        else:
            raise ValueError(f"Unsupported file format: {path.suffix}")
        async with aiofiles.open(path, "w") as f:
            await f.write(content)
