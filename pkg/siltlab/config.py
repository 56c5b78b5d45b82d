"""Configuration file loading for siltlab."""

from __future__ import annotations

import logging
import os
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from siltlab.models.schemas import SearchConfig

CONFIG_LOCATIONS = [
    Path.home() / ".siltlab.yaml",
    Path.cwd() / ".siltlab.yaml",
    Path.cwd() / "siltlab.yaml",
]

BUDGET_ENV = "SILTLAB_BUDGET"
DEFAULT_BUDGET = 500_000

# Top-level sections recognised in the config file.
_VALID_SECTIONS = {"search", "output", "schur", "logging"}

# Known keys within each section.
_VALID_SECTION_KEYS: dict[str, set[str]] = {
    "search": {"budget", "threads", "validate", "checkpoint_interval"},
    "output": {"format", "indent"},
    "schur": {"cache_dir", "compute_counts"},
    "logging": {"level", "file"},
}

_config_logger = logging.getLogger("siltlab.config")


def _warn_unknown_keys(config: dict, source: str) -> None:
    """Emit warnings for unrecognised top-level sections and keys."""
    for section, keys in config.items():
        if section not in _VALID_SECTIONS:
            _config_logger.warning(
                "Config file '%s': unknown section '%s' (ignored)", source, section
            )
            continue
        if not isinstance(keys, dict):
            continue
        valid_keys = _VALID_SECTION_KEYS.get(section, set())
        for key in keys:
            if key not in valid_keys:
                _config_logger.warning(
                    "Config file '%s': unknown key '%s.%s' (ignored)",
                    source, section, key,
                )


def load_config(path: Path | None = None) -> dict:
    """Load config from file, checking default locations.

    Args:
        path: Explicit config file path. If None, searches default locations.

    Returns:
        Configuration dictionary, or empty dict if no config found.
    """
    locations = [path] if path else CONFIG_LOCATIONS
    for loc in locations:
        if loc.exists():
            with open(loc) as f:
                data = yaml.safe_load(f) or {}
            _warn_unknown_keys(data, str(loc))
            return data
    return {}


@dataclass
class SearchOptions:
    """Run options built once from file config, environment and CLI args."""

    # Search
    budget: int = DEFAULT_BUDGET
    threads: int = field(default_factory=lambda: os.cpu_count() or 1)
    validate: bool = False
    checkpoint_interval: int = 1
    checkpoint_path: Path | None = None

    # Output
    output_format: str = "text"
    indent: int = 2

    # Schur count cache
    cache_dir: Path = field(default_factory=lambda: Path(".siltlab_cache"))
    compute_counts: bool = False

    # Logging (resolved separately in main, kept here for completeness)
    log_level: str = "INFO"
    log_file: str | None = None

    @classmethod
    def from_sources(
        cls,
        file_config: Mapping[str, Any],
        env: Mapping[str, str] | None = None,
        *,
        budget: int | None = None,
        threads: int | None = None,
        validate: bool | None = None,
        checkpoint_interval: int | None = None,
        checkpoint_path: Path | None = None,
        output_format: str | None = None,
        indent: int | None = None,
        cache_dir: Path | None = None,
        compute_counts: bool | None = None,
        log_level: str | None = None,
        log_file: str | None = None,
    ) -> SearchOptions:
        """Merge layers: CLI over environment over file over defaults.

        Only non-None CLI values take precedence.
        """
        opts = cls()
        env = os.environ if env is None else env

        search = file_config.get("search") or {}
        output = file_config.get("output") or {}
        schur = file_config.get("schur") or {}
        logs = file_config.get("logging") or {}

        # File config layer
        if search.get("budget") is not None:
            opts.budget = int(search["budget"])
        if search.get("threads") is not None:
            opts.threads = int(search["threads"])
        if search.get("validate") is not None:
            opts.validate = bool(search["validate"])
        if search.get("checkpoint_interval") is not None:
            opts.checkpoint_interval = int(search["checkpoint_interval"])
        if output.get("format") is not None:
            opts.output_format = str(output["format"])
        if output.get("indent") is not None:
            opts.indent = int(output["indent"])
        if schur.get("cache_dir") is not None:
            opts.cache_dir = Path(schur["cache_dir"])
        if schur.get("compute_counts") is not None:
            opts.compute_counts = bool(schur["compute_counts"])
        if logs.get("level") is not None:
            opts.log_level = str(logs["level"])
        if logs.get("file") is not None:
            opts.log_file = str(logs["file"])

        # Environment layer
        raw_budget = env.get(BUDGET_ENV)
        if raw_budget:
            try:
                opts.budget = int(raw_budget)
            except ValueError:
                _config_logger.warning(
                    "Ignoring non-integer %s=%r", BUDGET_ENV, raw_budget
                )

        # CLI layer
        if budget is not None:
            opts.budget = budget
        if threads is not None:
            opts.threads = threads
        if validate is not None:
            opts.validate = validate
        if checkpoint_interval is not None:
            opts.checkpoint_interval = checkpoint_interval
        if checkpoint_path is not None:
            opts.checkpoint_path = checkpoint_path
        if output_format is not None:
            opts.output_format = output_format
        if indent is not None:
            opts.indent = indent
        if cache_dir is not None:
            opts.cache_dir = cache_dir
        if compute_counts is not None:
            opts.compute_counts = compute_counts
        if log_level is not None:
            opts.log_level = log_level
        if log_file is not None:
            opts.log_file = log_file
        return opts

    def to_search_config(self) -> SearchConfig:
        """Validate the merged values (raises pydantic ``ValidationError``)."""
        return SearchConfig(
            budget=self.budget,
            threads=self.threads,
            validate=self.validate,
            checkpoint_interval=self.checkpoint_interval,
            output_format=self.output_format,  # type: ignore[arg-type]
            indent=self.indent,
            checkpoint=self.checkpoint_path,
        )
