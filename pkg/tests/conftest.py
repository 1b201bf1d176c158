import pytest

from bcnrecon import Bcn, LogicalMatrix, example_5state


@pytest.fixture
def ex5() -> Bcn:
    return example_5state()


@pytest.fixture
def swap_pair() -> Bcn:
    """Two states swapped by the only input, constant output.

    The lone state pair maps to itself forever, so no input word ever
    separates the two states: the smallest non-reconstructible network.
    """
    return Bcn(2, 1, 1, LogicalMatrix(2, (2, 1)), LogicalMatrix(1, (1, 1)))


@pytest.fixture
def injective_readout() -> Bcn:
    """Three states with an identity readout: the output names the state."""
    return Bcn(3, 2, 3, LogicalMatrix(3, (2, 3, 1, 1, 1, 2)), LogicalMatrix(3, (1, 2, 3)))
