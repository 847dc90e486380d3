"""Global fixtures for matroid_hvectors tests."""

import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from matroid_hvectors.complex import SimplicialComplex, build  # noqa: E402
from matroid_hvectors.matroid import construct_delta_m  # noqa: E402


@pytest.fixture
def k3() -> SimplicialComplex:
    """The triangle boundary K₃."""
    return build(3, [[1, 2], [1, 3], [2, 3]])


@pytest.fixture
def starred_triangle() -> SimplicialComplex:
    """Three new vertices starred off vertex 1 of K₃; its partition is 4+1+1."""
    return construct_delta_m((3, 0, 0))


@pytest.fixture
def two_triangles() -> SimplicialComplex:
    """Δ for m = (2, 2): the complete bipartite graph K₃,₃ on anti-cliques {1,3,4} and {2,5,6}."""
    return construct_delta_m((2, 2))


@pytest.fixture
def impure_triangle() -> SimplicialComplex:
    """A filled triangle with a pendant edge: impure, but every proper restriction is pure."""
    return build(4, [[1, 2], [1, 3], [2, 3, 4]])


@pytest.fixture
def path3() -> SimplicialComplex:
    """The path 1-2-3, a matroid."""
    return build(3, [[1, 2], [2, 3]])


@pytest.fixture
def path4() -> SimplicialComplex:
    """The path 1-2-3-4, the smallest pure graph that is not a matroid."""
    return build(4, [[1, 2], [2, 3], [3, 4]])
