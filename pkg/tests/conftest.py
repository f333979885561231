# -*- coding: utf-8 -*-
import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from core.estimators import MonteCarloSpec  # noqa: E402
from core.special import QuadratureRule, default_rule  # noqa: E402


@pytest.fixture
def rule():
    return default_rule()


@pytest.fixture
def adaptive_rule():
    return QuadratureRule.adaptive(1e-11)


@pytest.fixture
def small_mc():
    return MonteCarloSpec(samples=20_000, seed=7, shards=2)
