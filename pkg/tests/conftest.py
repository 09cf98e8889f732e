import math
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

EXAMPLE1 = [[3, 2, 1], [2, 0, 2], [1, 2, 3]]
EXAMPLE2_A1 = [[6, 3, 4, 2], [3, 1, 0, 3], [4, 0, 2, 1], [2, 3, 1, 2]]
EXAMPLE2_A2 = [[6, 0, 4, 2], [3, 1, 0, 3], [4, 0, 2, 1], [2, 3, 1, 2]]
QUINTIC = [1, 80, 1500, 5000, 3750, 0.2]

# two-point weights that saturate the fourth-moment and |mu_3| range bounds
P_PLUS = 0.5 + 1 / (2 * math.sqrt(3))
P_MINUS = 0.5 - 1 / (2 * math.sqrt(3))


@pytest.fixture
def example1():
    return np.array(EXAMPLE1, dtype=float)


@pytest.fixture
def quintic():
    return list(QUINTIC)
