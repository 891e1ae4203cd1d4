import pytest

from stripcluster.catalog import catalog
from stripcluster.oracle.orientation import Orientation, zigzag


@pytest.fixture(scope="session")
def orientations():
    return {
        "zigzag": zigzag(),
        "rll": Orientation(core="RLL", core_start=0, left_cycle="RLL", right_cycle="RLL"),
        "mixed": Orientation(core="RL", core_start=0, left_cycle="RL", right_cycle="RLL"),
    }


@pytest.fixture(scope="session")
def cat():
    return catalog()
