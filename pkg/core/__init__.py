# -*- coding: utf-8 -*-
"""Core package for rician-lab: channel model, bounds and capacity estimators."""
