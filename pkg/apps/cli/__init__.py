# -*- coding: utf-8 -*-
"""CLI package."""
