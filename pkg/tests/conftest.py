"""Shared fixtures: the degree-4/degree-3 reference pair used across suites."""

import numpy as np
import pytest

from bernstein_agcd import BernsteinPoly

# Reference inputs with a known approximate common factor (x-1.078)(x-5.145).
REF_P_COEFFS = [5.887134, 1.341879, 0.080590, 0.000769, -0.000086]
REF_Q_COEFFS = [-17.88416, -9.503893, -4.226960, -1.05336]

# Degree-4 polynomial with exact roots {1.2, 2.1, 3.0, 5.6}.
QUARTIC_COEFFS = [42.336, 23.058, 11.730, 5.377, 2.024]


@pytest.fixture
def ref_p():
    return BernsteinPoly(np.array(REF_P_COEFFS), (0.0, 1.0))


@pytest.fixture
def ref_q():
    return BernsteinPoly(np.array(REF_Q_COEFFS), (0.0, 1.0))


@pytest.fixture
def quartic():
    return BernsteinPoly(np.array(QUARTIC_COEFFS), (0.0, 1.0))
