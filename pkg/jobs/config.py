"""
Configuration utilities for correlator jobs.

Settings are merged in the order defaults < environment < config file < command-line
flags. The environment is read after loading a ``.env`` file when python-dotenv finds one.
"""

import copy
import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

from dotenv import load_dotenv

from algebra_layer import AlgebraLayerError, Rational, format_rational, to_rational
from correlator_layer import PoleError
from oracle_layer import OracleConfigManager, OracleError
from .exceptions import JobConfigError

logger = logging.getLogger(__name__)

VALID_COMMANDS = ("correlator", "diagrams", "verify", "virasoro")
VALID_FORMATS = ("json", "text")
VALID_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# environment variable -> (section, key, parser)
ENVIRONMENT_KEYS = {
    "JORDAN_VOA_SEED": ("verification", "seed", int),
    "JORDAN_VOA_BOUND": ("correlator", "bound", int),
    "JORDAN_VOA_LOG_LEVEL": ("global_settings", "log_level", str.upper),
    "JORDAN_VOA_MAX_DEPTH": ("oracle", "max_depth", int),
}


class JobConfigManager:
    """Manager for job configuration."""

    DEFAULT_CONFIG = {
        "correlator": {
            "bound": None,
            "r": "symbolic",
            "prop2": False,
            "expand": False,
        },
        "verification": {
            "seed": 7,
            "datasets": 3,
            "dim": 2,
            "diagonal_points": 20,
            "griess_samples": 3,
            "check_prop1": True,
        },
        "oracle": OracleConfigManager.get_default_config(),
        "global_settings": {
            "log_level": "INFO",
            "output_format": "text",
        },
    }

    @classmethod
    def load_from_file(cls, config_path: str) -> Dict[str, Any]:
        """
        Load configuration from a JSON file.

        Args:
            config_path: Path to configuration file

        Returns:
            Configuration dictionary (possibly partial)

        Raises:
            JobConfigError: If the file cannot be loaded or is invalid
        """
        path = Path(config_path)
        if not path.exists():
            raise JobConfigError(f"Configuration file not found: {config_path}")
        try:
            with open(path, "r", encoding="utf-8") as f:
                config = json.load(f)
        except json.JSONDecodeError as e:
            raise JobConfigError(f"Invalid JSON in configuration file: {e}") from e
        except OSError as e:
            raise JobConfigError(f"Failed to load configuration: {e}") from e
        cls.validate_config(cls.merge_configs(cls.get_default_config(), config))
        return config

    @classmethod
    def save_to_file(cls, config: Dict[str, Any], config_path: str) -> None:
        """
        Save configuration to a JSON file.

        Raises:
            JobConfigError: If the configuration is invalid or cannot be written
        """
        cls.validate_config(config)
        try:
            path = Path(config_path)
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8") as f:
                json.dump(config, f, indent=2, ensure_ascii=False)
        except OSError as e:
            raise JobConfigError(f"Failed to save configuration: {e}") from e

    @classmethod
    def get_default_config(cls) -> Dict[str, Any]:
        return copy.deepcopy(cls.DEFAULT_CONFIG)

    @classmethod
    def merge_configs(cls, base_config: Dict[str, Any],
                      override_config: Dict[str, Any]) -> Dict[str, Any]:
        """
        Merge two configurations with override taking precedence.

        None values in the override never replace a setting.
        """
        merged = copy.deepcopy(base_config)
        for key, value in override_config.items():
            if value is None:
                continue
            if key in merged and isinstance(merged[key], dict) and isinstance(value, dict):
                merged[key] = cls.merge_configs(merged[key], value)
            else:
                merged[key] = value
        return merged

    @classmethod
    def load_environment(cls, environ: Optional[Mapping[str, str]] = None,
                         dotenv_path: Optional[str] = None) -> Dict[str, Any]:
        """
        Read the JORDAN_VOA_* overrides.

        Args:
            environ: Mapping to read instead of os.environ (no .env loading then)
            dotenv_path: Explicit .env file; defaults to the nearest one found

        Returns:
            A partial configuration with the sections that were set

        Raises:
            JobConfigError: If a variable cannot be parsed
        """
        if environ is None:
            load_dotenv(dotenv_path)
            environ = os.environ
        overrides: Dict[str, Any] = {}
        for variable, (section, key, parser) in ENVIRONMENT_KEYS.items():
            raw = environ.get(variable)
            if raw is None or not raw.strip():
                continue
            try:
                value = parser(raw.strip())
            except ValueError as e:
                raise JobConfigError(f"Invalid value for {variable}: {raw!r}") from e
            overrides.setdefault(section, {})[key] = value
        return overrides

    @classmethod
    def validate_config(cls, config: Dict[str, Any]) -> None:
        """
        Validate configuration structure and values.

        Raises:
            JobConfigError: If configuration is invalid
        """
        if not isinstance(config, dict):
            raise JobConfigError("Configuration must be a dictionary")
        for section in cls.DEFAULT_CONFIG:
            if section not in config:
                raise JobConfigError(f"Missing required configuration section: {section}")
            if not isinstance(config[section], dict):
                raise JobConfigError(f"Configuration section '{section}' must be a dictionary")
        cls._validate_correlator_config(config["correlator"])
        cls._validate_verification_config(config["verification"])
        try:
            OracleConfigManager.validate_config(config["oracle"])
        except OracleError as e:
            raise JobConfigError(f"Oracle config: {e}") from e
        cls._validate_global_config(config["global_settings"])

    @staticmethod
    def _is_int(value: Any) -> bool:
        return isinstance(value, int) and not isinstance(value, bool)

    @classmethod
    def _validate_correlator_config(cls, config: Dict[str, Any]) -> None:
        bound = config.get("bound")
        if bound is not None and (not cls._is_int(bound) or bound < 0):
            raise JobConfigError("Correlator config 'bound' must be a non-negative integer")
        for flag in ("prop2", "expand"):
            if flag in config and not isinstance(config[flag], bool):
                raise JobConfigError(f"Correlator config '{flag}' must be a boolean")
        parse_r(config.get("r", "symbolic"))

    @classmethod
    def _validate_verification_config(cls, config: Dict[str, Any]) -> None:
        if "seed" in config and not cls._is_int(config["seed"]):
            raise JobConfigError("Verification config 'seed' must be an integer")
        for key in ("datasets", "dim"):
            if key in config and (not cls._is_int(config[key]) or config[key] < 1):
                raise JobConfigError(f"Verification config '{key}' must be a positive integer")
        for key in ("diagonal_points", "griess_samples"):
            if key in config and (not cls._is_int(config[key]) or config[key] < 0):
                raise JobConfigError(f"Verification config '{key}' must be a non-negative integer")
        if "check_prop1" in config and not isinstance(config["check_prop1"], bool):
            raise JobConfigError("Verification config 'check_prop1' must be a boolean")

    @classmethod
    def _validate_global_config(cls, config: Dict[str, Any]) -> None:
        if "log_level" in config and config["log_level"] not in VALID_LOG_LEVELS:
            raise JobConfigError(f"Global config 'log_level' must be one of: {list(VALID_LOG_LEVELS)}")
        if "output_format" in config and config["output_format"] not in VALID_FORMATS:
            raise JobConfigError(f"Global config 'output_format' must be one of: {list(VALID_FORMATS)}")


def parse_r(value: Any) -> Union[str, Rational]:
    """"symbolic" or an exact rational value of the central parameter."""
    if isinstance(value, str) and value.strip().lower() == "symbolic":
        return "symbolic"
    try:
        return to_rational(value)
    except AlgebraLayerError as e:
        raise JobConfigError(f"r must be 'symbolic' or a rational, got {value!r}") from e


@dataclass
class JobConfig:
    """
    One run of a correlator job.

    ``input_data`` holds an already parsed input object (used by the HTTP surface); when
    absent the input is read from ``input_path``.
    """
    command: str
    input_path: Optional[str] = None
    r: Union[str, Rational] = "symbolic"
    points: Optional[Dict[str, Rational]] = None
    bound: Optional[int] = None
    seed: int = 7
    output_format: str = "text"
    n: Optional[int] = None
    dim: Optional[int] = None
    prop2: bool = False
    expand: bool = False
    corrupt: bool = False
    config_path: Optional[str] = None
    input_data: Optional[Dict[str, Any]] = None
    settings: Dict[str, Any] = field(default_factory=JobConfigManager.get_default_config)

    @property
    def symbolic_r(self) -> bool:
        return isinstance(self.r, str)

    def r_text(self) -> str:
        return "symbolic" if self.symbolic_r else format_rational(self.r)

    def validate(self) -> None:
        """
        Check the invariants of a job.

        Raises:
            JobConfigError: For an unknown command or format, or a negative bound or n
            PoleError: If points of two different pairs coincide
        """
        if self.command not in VALID_COMMANDS:
            raise JobConfigError(f"Unknown command {self.command!r}; expected one of {list(VALID_COMMANDS)}")
        if self.output_format not in VALID_FORMATS:
            raise JobConfigError(f"Unknown format {self.output_format!r}; expected one of {list(VALID_FORMATS)}")
        for name, value, least in (("bound", self.bound, 0), ("n", self.n, 0), ("dim", self.dim, 1)):
            if value is None:
                continue
            if not JobConfigManager._is_int(value):
                raise JobConfigError(f"{name} must be an integer, got {value!r}")
            if value < least:
                raise JobConfigError(f"{name} must be at least {least}, got {value}")
        if not JobConfigManager._is_int(self.seed):
            raise JobConfigError(f"seed must be an integer, got {self.seed!r}")
        if self.points:
            # z_i and w_i never share a factor, so only points of different pairs must differ
            seen: Dict[Rational, List[str]] = {}
            for name, value in self.points.items():
                for other in seen.get(value, []):
                    if other[1:] != name[1:]:
                        raise PoleError(f"pole at evaluation point: {other} = {name}")
                seen.setdefault(value, []).append(name)

    def header(self, bound: Optional[int] = None) -> Dict[str, Any]:
        """Report header; identical configurations give identical headers."""
        return {
            "command": self.command,
            "seed": self.seed,
            "bound": self.bound if bound is None else bound,
            "r": self.r_text(),
        }


def build_job_config(command: str, flags: Optional[Dict[str, Any]] = None,
                     environ: Optional[Mapping[str, str]] = None) -> JobConfig:
    """
    Resolve a JobConfig from defaults, environment, the --config file and flags.

    Args:
        command: Job to run
        flags: Command-line (or request) values; None entries are unset
        environ: Environment mapping, os.environ plus .env when omitted

    Returns:
        A validated JobConfig

    Raises:
        JobConfigError: If any layer of configuration is invalid
        PoleError: If points of two different pairs coincide
    """
    flags = dict(flags or {})
    settings = JobConfigManager.merge_configs(
        JobConfigManager.get_default_config(), JobConfigManager.load_environment(environ)
    )
    config_path = flags.get("config_path")
    if config_path:
        settings = JobConfigManager.merge_configs(settings, JobConfigManager.load_from_file(config_path))
    settings = JobConfigManager.merge_configs(settings, {
        "correlator": {
            "bound": flags.get("bound"),
            "r": flags.get("r"),
            "prop2": flags.get("prop2") or None,
            "expand": flags.get("expand") or None,
        },
        "verification": {"seed": flags.get("seed"), "dim": flags.get("dim")},
        "global_settings": {"output_format": flags.get("output_format")},
    })
    JobConfigManager.validate_config(settings)

    correlator = settings["correlator"]
    cfg = JobConfig(
        command=command,
        input_path=flags.get("input_path"),
        r=parse_r(correlator["r"]),
        points=flags.get("points"),
        bound=correlator["bound"],
        seed=settings["verification"]["seed"],
        output_format=settings["global_settings"]["output_format"],
        n=flags.get("n"),
        dim=settings["verification"]["dim"],
        prop2=correlator["prop2"],
        expand=correlator["expand"],
        corrupt=bool(flags.get("corrupt")),
        config_path=config_path,
        input_data=flags.get("input_data"),
        settings=settings,
    )
    cfg.validate()
    logger.debug("Resolved %s job: seed=%s bound=%s r=%s", command, cfg.seed, cfg.bound, cfg.r_text())
    return cfg
