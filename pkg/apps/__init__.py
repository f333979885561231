# -*- coding: utf-8 -*-
"""Applications package."""
