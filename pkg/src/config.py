"""Configuration loader for the multicast queue toolkit."""

import os
from pathlib import Path
from typing import Any

import yaml
from dotenv import load_dotenv

from src.application.dtos.theory_settings import TheorySettings
from src.domain.value_objects.solver_settings import SolverSettings
from src.domain.value_objects.system_config import SystemConfig
from src.utils import parse_int_list

PROJECT_ROOT = Path(__file__).parent.parent
PRESET_DIR = PROJECT_ROOT / "config" / "presets"

SECTIONS = ("system", "solver", "simulation", "theory", "experiment", "logging")


class Config:
    """Configuration loader from YAML file and environment variables."""

    def __init__(self, config_path: str | None = None, load_env: bool = True) -> None:
        """Load configuration from YAML file.

        Args:
            config_path: Optional path to config file (defaults to config/config.yml)
            load_env: Read ``.env`` and apply SIM_* environment overrides

        Raises:
            FileNotFoundError: If config file doesn't exist
            ValueError: If the file is not a mapping or has unknown sections
        """
        if config_path is None:
            config_path = PROJECT_ROOT / "config" / "config.yml"

        self.config_path = Path(config_path)

        if not self.config_path.exists():
            raise FileNotFoundError(
                f"Config file not found: {self.config_path}\n"
                "Please create config/config.yml from config/config.example.yml"
            )

        # JSON files load too, JSON being a subset of YAML
        with open(self.config_path, "r", encoding="utf-8") as f:
            loaded = yaml.safe_load(f) or {}
        if not isinstance(loaded, dict):
            raise ValueError(f"{self.config_path}: top level must be a mapping")
        unknown = sorted(set(loaded) - set(SECTIONS))
        if unknown:
            raise ValueError(f"{self.config_path}: unknown section(s) {', '.join(unknown)}")
        self.config: dict[str, Any] = loaded

        if load_env:
            load_dotenv()
            self._apply_env_overrides()

    @classmethod
    def from_preset(cls, name: str, load_env: bool = True) -> "Config":
        """Load ``config/presets/<name>.yml``."""
        path = PRESET_DIR / f"{name}.yml"
        if not path.exists():
            available = sorted(p.stem for p in PRESET_DIR.glob("*.yml"))
            raise FileNotFoundError(
                f"Unknown preset '{name}'. Available: {', '.join(available) or 'none'}"
            )
        return cls(str(path), load_env=load_env)

    def _apply_env_overrides(self) -> None:
        """Apply environment variable overrides to configuration."""

        # Logging configuration
        if os.getenv("SIM_LOG_LEVEL"):
            self.config.setdefault("logging", {})
            self.config["logging"]["level"] = os.getenv("SIM_LOG_LEVEL")

        if os.getenv("SIM_LOG_FILE"):
            self.config.setdefault("logging", {})
            self.config["logging"]["file"] = os.getenv("SIM_LOG_FILE")

        # Simulation configuration
        if os.getenv("SIM_WORKERS"):
            self.config.setdefault("simulation", {})
            self.config["simulation"]["workers"] = int(os.environ["SIM_WORKERS"])

        if os.getenv("SIM_SERVICES"):
            self.config.setdefault("simulation", {})
            self.config["simulation"]["n_services"] = int(os.environ["SIM_SERVICES"])

        if os.getenv("SIM_SEEDS"):
            self.config.setdefault("simulation", {})
            self.config["simulation"]["seeds"] = parse_int_list(os.environ["SIM_SEEDS"])

        # Experiment configuration
        if os.getenv("SIM_OUTPUT_DIR"):
            self.config.setdefault("experiment", {})
            self.config["experiment"]["output_dir"] = os.getenv("SIM_OUTPUT_DIR")

    def section(self, name: str) -> dict[str, Any]:
        return dict(self.config.get(name) or {})

    @property
    def full_scale(self) -> bool:
        """Whether this is a long-running profile that needs an explicit opt-in."""
        return bool(self.section("experiment").get("full_scale", False))

    def system_config(self) -> SystemConfig:
        """Scenario from the ``system`` section.

        Raises:
            ConfigValidationError: On unknown keys
        """
        return SystemConfig.from_mapping(self.section("system"))

    def solver_settings(self) -> SolverSettings:
        return SolverSettings.from_mapping(self.section("solver"))

    def theory_settings(self) -> TheorySettings:
        return TheorySettings.from_mapping(self.section("theory"))
