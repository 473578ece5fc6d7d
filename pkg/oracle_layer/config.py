"""
Configuration utilities for the Oracle Layer module.
"""

from typing import Any, Dict

from .exceptions import OracleError


class OracleConfigManager:
    """Manager for Oracle Layer configuration."""

    DEFAULT_CONFIG = {
        "max_depth": 256,
        "cache_monomials": True,
        "cache_suffix_states": True,
        "prop1_window": 3,
    }

    @classmethod
    def get_default_config(cls) -> Dict[str, Any]:
        return cls.DEFAULT_CONFIG.copy()

    @classmethod
    def merge_configs(cls, base_config: Dict[str, Any], override_config: Dict[str, Any]) -> Dict[str, Any]:
        merged = base_config.copy()
        merged.update({k: v for k, v in (override_config or {}).items() if v is not None})
        return merged

    @classmethod
    def validate_config(cls, config: Dict[str, Any]) -> None:
        """
        Validate oracle settings.

        Raises:
            OracleError: If a value has the wrong type or range
        """
        if not isinstance(config, dict):
            raise OracleError("Oracle configuration must be a dictionary")
        depth = config.get("max_depth", cls.DEFAULT_CONFIG["max_depth"])
        if not isinstance(depth, int) or isinstance(depth, bool) or depth < 1:
            raise OracleError("max_depth must be a positive integer")
        window = config.get("prop1_window", cls.DEFAULT_CONFIG["prop1_window"])
        if not isinstance(window, int) or isinstance(window, bool) or window < 0:
            raise OracleError("prop1_window must be a non-negative integer")
        for flag in ("cache_monomials", "cache_suffix_states"):
            if not isinstance(config.get(flag, True), bool):
                raise OracleError(f"{flag} must be a boolean")
