from fractions import Fraction as F
from pathlib import Path

import pytest

from adaptcache.model import build_scenario

DATA = Path(__file__).parent / "data"

# Multi-rate worked example: K=6, gamma=1/3, T_tar = T_MAN.
MULTI_ALPHA = (F(1, 2), F(5, 8), F(3, 4), F(7, 8), F(1), F(1))
Q_SUM = (F(25, 32), F(25, 32), F(51, 64), F(307, 320), F(1), F(1))
Q_PFO = (F(14, 25), F(7, 10), F(21, 25), F(49, 50), F(1), F(1))
L_SUM = (F(125, 16), F(25, 2), F(15), F(35, 2), F(6057, 320), F(787, 40))

# Two-type worked example: K=6, gamma=2/6, two users at alpha=2/3.
TWO_ALPHA = (F(2, 3), F(2, 3), F(1), F(1), F(1), F(1))


@pytest.fixture
def multirate():
    return build_scenario(6, F(1, 3), MULTI_ALPHA)


@pytest.fixture
def two_type():
    return build_scenario(6, F(2, 6), TWO_ALPHA)


@pytest.fixture
def fig1():
    alpha = [F(4, 5) + F(1, 5) * F(k, 19) for k in range(20)]
    return build_scenario(20, F(3, 20), alpha)


@pytest.fixture
def data_dir():
    return DATA
