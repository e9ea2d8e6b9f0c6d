import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mollowqed.constants import load_config  # noqa: E402
from mollowqed.prediction import drive_for  # noqa: E402


@pytest.fixture(scope="session")
def data():
    return load_config(environ={})


@pytest.fixture(scope="session")
def drive_half(data):
    return drive_for(Fraction(1, 2), 1000, 50, data)


@pytest.fixture(scope="session")
def drive_three_halves(data):
    return drive_for(Fraction(3, 2), 1000, 50, data)
