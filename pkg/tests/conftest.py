"""Shared fixtures: the standard parameter block used across the suite."""

from __future__ import annotations

import pytest

from coopsec import ChannelGains, Geometry, NoiseModel, PowerBudget


@pytest.fixture
def std_gains() -> ChannelGains:
    return ChannelGains(g_ab=0.4, g_ae=0.3, g_jb=0.5, g_je=0.3, g_aj=0.2)


@pytest.fixture
def std_noise() -> NoiseModel:
    return NoiseModel(1.0)


@pytest.fixture
def unit_geometry() -> Geometry:
    return Geometry(d_ab=1.0, d_ae=1.0, d_jb=1.0, d_je=1.0, d_aj=1.0, eta=2.0)


@pytest.fixture
def std_budgets() -> PowerBudget:
    return PowerBudget(p_a_max=5.0, p_j_max=5.0)
