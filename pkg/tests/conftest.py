import numpy as np
import pytest

from design_uncertainty import assign_povms, builtin_design, mub_grouping


@pytest.fixture(scope="session")
def octahedron():
    return builtin_design("octahedron")


@pytest.fixture(scope="session")
def icosahedron():
    return builtin_design("icosahedron")


@pytest.fixture(scope="session")
def icosidodecahedron():
    return builtin_design("icosidodecahedron")


@pytest.fixture(scope="session")
def oct_single(octahedron):
    return assign_povms(octahedron, "single")


@pytest.fixture(scope="session")
def oct_mub(octahedron):
    return assign_povms(octahedron, mub_grouping())


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
