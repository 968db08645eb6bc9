"""
Flat key = value run documents.

    # ba scenario at full scale
    network = ba
    realizations = 5

Comments start with '#', blank lines are ignored, values are coerced by the
RunConfig model. Unknown keys fail fast.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Mapping, Optional

from pydantic import ValidationError

from ..contracts import RunConfig
from ..errors import ConfigParseError, ConfigValidationError

logger = logging.getLogger(__name__)

# keys whose value may be spelled "none" to mean "unset"
_OPTIONAL_KEYS = frozenset({"max_events", "scenario"})


def parse_document(text: str) -> dict[str, tuple[str, int]]:
    """Split a document into {key: (raw value, line number)}."""
    entries: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigParseError(f"expected 'key = value', got {line!r}", line=lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigParseError("empty key", line=lineno)
        if key in entries:
            raise ConfigParseError(
                f"duplicate key (first set on line {entries[key][1]})", line=lineno, key=key
            )
        entries[key] = (value, lineno)
    return entries


def _describe(exc: ValidationError) -> str:
    parts = []
    for err in exc.errors():
        loc = ".".join(str(p) for p in err["loc"]) or "config"
        parts.append(f"{loc}: {err['msg']}")
    return "; ".join(parts)


def config_from_mapping(values: Mapping[str, Any]) -> RunConfig:
    """Validate already-split values (strings or native types) into a RunConfig."""
    cleaned: dict[str, Any] = {}
    for key, value in values.items():
        if key in _OPTIONAL_KEYS and isinstance(value, str) and value.lower() in ("", "none"):
            value = None
        cleaned[key] = value
    try:
        return RunConfig(**cleaned)
    except ValidationError as exc:
        raise ConfigValidationError(_describe(exc)) from exc


def parse_config(text: str, overrides: Optional[Mapping[str, Any]] = None) -> RunConfig:
    entries = parse_document(text)
    for key, (_, lineno) in entries.items():
        if key not in RunConfig.model_fields:
            raise ConfigParseError("unknown key", line=lineno, key=key)
    values: dict[str, Any] = {key: value for key, (value, _) in entries.items()}
    if overrides:
        values.update({k: v for k, v in overrides.items() if v is not None})
    return config_from_mapping(values)


def load_config(path: str | Path, overrides: Optional[Mapping[str, Any]] = None) -> RunConfig:
    """Read, parse and validate a run document; `overrides` win over the file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigParseError(f"cannot read {path}: {exc.strerror}") from exc
    config = parse_config(text, overrides)
    logger.debug(
        "loaded %s: scenario=%s network=%s", path, config.scenario_name, config.network.value
    )
    return config
