# config.py

from pathlib import Path

from pydantic_settings import BaseSettings

from .datamodel import OutputFormat


class Settings(BaseSettings):
    CONFIG_FILE: str = ""  # empty: built-in defaults
    OUTPUT_FORMAT: OutputFormat = OutputFormat.MARKDOWN
    LOG_LEVEL: str = "WARNING"
    SCENARIO_DIR: str = str(Path(__file__).parent / "baseline" / "scenarios")

    model_config = {"env_prefix": "QFLYEST_", "env_file": ".env", "extra": "ignore"}
