# -*- coding: utf-8 -*-
"""CLI command modules."""
