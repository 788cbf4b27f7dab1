import pytest
from hypothesis import settings

import ycube

settings.register_profile("ci", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("ci")


def _patch_code(p, q, generations, layers=3, hexagon=False):
    t = ycube.build_patch(ycube.SchlafliPair(p, q), generations)
    return ycube.build_code(ycube.stack(t, layers), include_hexagon=hexagon)


def _torus_code(p, q, l, layers=3, hexagon=False):
    t = ycube.build_periodic_flat(ycube.SchlafliPair(p, q), l)
    return ycube.build_code(ycube.stack(t, layers), include_hexagon=hexagon)


@pytest.fixture(scope="session")
def code54():
    return _patch_code(5, 4, 2)


@pytest.fixture(scope="session")
def code54g3():
    return _patch_code(5, 4, 3)


@pytest.fixture(scope="session")
def code46():
    return _patch_code(4, 6, 2)


@pytest.fixture(scope="session")
def code64():
    return _patch_code(6, 4, 2)


@pytest.fixture(scope="session")
def code44torus():
    return _torus_code(4, 4, 3)


@pytest.fixture(scope="session")
def code36torus():
    # L=6 keeps the three sublattice flavors distinguishable
    return _torus_code(3, 6, 6, hexagon=True)


@pytest.fixture(scope="session")
def code36small():
    return _torus_code(3, 6, 3, hexagon=True)
