# -*- coding: utf-8 -*-
"""ini configuration (conf/settings.ini and sweep/figure files).

Sections and keys are uppercase, e.g.

    [MONTE_CARLO]
    SAMPLES = 200000
"""

from __future__ import annotations

import configparser
import os
from pathlib import Path
from typing import List, Optional, Union

PROJECT_ROOT = Path(__file__).resolve().parents[2]
DEFAULT_SETTINGS = PROJECT_ROOT / "conf" / "settings.ini"


class ConfigLoader:
    def __init__(self, path: Optional[Union[str, Path]] = None):
        self.project_root = PROJECT_ROOT
        self.config_path = Path(os.path.expanduser(str(path))) if path else DEFAULT_SETTINGS

        # keep key case as written; sections are looked up verbatim
        self.config = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
        self.config.optionxform = str
        if not self.config_path.exists():
            raise FileNotFoundError(f"config file not found: {self.config_path}")
        self.config.read(self.config_path, encoding="utf-8")

    def sections(self) -> List[str]:
        return self.config.sections()

    def has(self, section: str, key: str) -> bool:
        return self.config.has_option(section, key)

    def get(self, section: str, key: str, fallback: Optional[str] = None) -> Optional[str]:
        """Raw value with ``~`` expanded; ``fallback`` when missing."""
        val = self.config.get(section, key, fallback=None)
        if val is None:
            return fallback
        val = val.strip()
        if "~" in val:
            return os.path.expanduser(val)
        return val

    def get_int(self, section: str, key: str, fallback: Optional[int] = None) -> Optional[int]:
        val = self.get(section, key)
        if val is None or val == "":
            return fallback
        try:
            return int(float(val)) if float(val).is_integer() else int(val)
        except ValueError as exc:
            raise ValueError(f"[{section}] {key} must be an integer, got {val!r} ({self.config_path})") from exc

    def get_float(self, section: str, key: str, fallback: Optional[float] = None) -> Optional[float]:
        val = self.get(section, key)
        if val is None or val == "":
            return fallback
        try:
            return float(val)
        except ValueError as exc:
            raise ValueError(f"[{section}] {key} must be a number, got {val!r} ({self.config_path})") from exc

    def get_list(self, section: str, key: str, fallback: Optional[List[str]] = None) -> Optional[List[str]]:
        """Comma or whitespace separated list."""
        val = self.get(section, key)
        if val is None:
            return fallback
        return [part for part in val.replace(",", " ").split() if part]

