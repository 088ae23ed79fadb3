import os
import sys
import pytest

# Add the src directory to the Python path
root_dir = os.path.dirname(os.path.abspath(__file__)).replace("tests", "src")

if root_dir not in sys.path:
    sys.path.insert(0, root_dir)

data_dir = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


@pytest.fixture
def data_path():
    """
    Returns a function resolving a fixture file name inside tests/data.
    """

    def resolve(*parts: str) -> str:
        return os.path.join(data_dir, *parts)

    return resolve


@pytest.fixture
def square():
    """
    The unit square: four points on a cycle with squared distances 1, 2, 1.
    """
    from qsymkit.spaces import from_points

    return from_points([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def two_points():
    from qsymkit.spaces import FiniteMetricSpace

    return FiniteMetricSpace(n=2, sqdist=[[0, 1], [1, 0]])


@pytest.fixture
def scalene():
    """
    Three points with pairwise distinct squared distances 1, 4, 9.
    """
    from qsymkit.spaces import FiniteMetricSpace

    return FiniteMetricSpace(n=3, sqdist=[[0, 1, 4], [1, 0, 9], [4, 9, 0]])
