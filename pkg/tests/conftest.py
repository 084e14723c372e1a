import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gsystems.dga import MCElement, unit_cochain  # noqa: E402
from strategies import ACTIONS, character  # noqa: E402

SCENARIOS = Path(__file__).resolve().parent.parent / "gsystems" / "scenarios"


@pytest.fixture
def scenarios_dir():
    return SCENARIOS


@pytest.fixture
def reflection():
    """Z/2 acting on R by s: x -> -x."""
    return ACTIONS["z2_reflection"]


@pytest.fixture
def trivial_z2():
    return ACTIONS["z2_trivial"]


@pytest.fixture
def z3_rotation():
    return ACTIONS["z3_rotation"]


@pytest.fixture
def s3_permutation():
    return ACTIONS["s3_permutation"]


@pytest.fixture
def sign(reflection):
    return MCElement(character(reflection, -1))


@pytest.fixture
def pullback(reflection):
    return MCElement(unit_cochain(reflection, 1, 0))
