# -*- coding: utf-8 -*-
"""Config helpers."""

from core.config.loader import DEFAULT_SETTINGS, PROJECT_ROOT, ConfigLoader

__all__ = ["DEFAULT_SETTINGS", "PROJECT_ROOT", "ConfigLoader"]
