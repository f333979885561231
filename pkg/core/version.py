# -*- coding: utf-8 -*-
"""Release and numerical-stack versions.

conf/version.json names the release and the JSON output schema; numpy and
scipy versions come from the installed distributions.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass
from functools import lru_cache
from importlib import metadata
from typing import Dict

from core.config import PROJECT_ROOT

logger = logging.getLogger(__name__)

PROJECT_NAME = "rician-lab"
VERSION_FILE = PROJECT_ROOT / "conf" / "version.json"
NUMERIC_PACKAGES = ("numpy", "scipy")
UNKNOWN = "unknown"


@dataclass(frozen=True)
class VersionInfo:
    project: str
    schema: int
    numpy: str
    scipy: str

    def as_dict(self) -> Dict[str, str]:
        out = {k: str(v) for k, v in asdict(self).items()}
        out["name"] = PROJECT_NAME
        return out


def _dist_version(name: str) -> str:
    try:
        return metadata.version(name)
    except metadata.PackageNotFoundError:
        return UNKNOWN


def _read_version_file() -> Dict[str, object]:
    try:
        data = json.loads(VERSION_FILE.read_text(encoding="utf-8"))
    except FileNotFoundError:
        logger.warning("%s is missing; versions reported as %s", VERSION_FILE, UNKNOWN)
        return {}
    except (OSError, ValueError) as exc:
        logger.warning("cannot read %s: %s", VERSION_FILE, exc)
        return {}
    return data if isinstance(data, dict) else {}


@lru_cache(maxsize=1)
def version_info() -> VersionInfo:
    data = _read_version_file()
    project = str(data.get("project_version") or "").strip() or UNKNOWN
    try:
        schema = int(data.get("schema_version", 0))
    except (TypeError, ValueError):
        logger.warning("schema_version in %s is not an integer", VERSION_FILE)
        schema = 0
    return VersionInfo(project=project, schema=schema, **{p: _dist_version(p) for p in NUMERIC_PACKAGES})


def project_version() -> str:
    return version_info().project


def schema_version() -> int:
    return version_info().schema


def versions() -> Dict[str, str]:
    """Flat map for display and the JSON meta block."""
    return version_info().as_dict()
