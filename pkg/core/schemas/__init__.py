# -*- coding: utf-8 -*-
"""Schemas package."""
