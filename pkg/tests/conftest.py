from fractions import Fraction

import pytest

from cevian.core import Mode, build_configuration
from cevian.generators import GeneratorSpec, generate
from cevian.morley import NumTri
from cevian.triangle import TraceSet, Triangle


@pytest.fixture
def tri():
    return Triangle((0, 0), (7, 0), (2, 5))


@pytest.fixture
def right_tri():
    return Triangle((0, 0), (4, 0), (0, 3))


@pytest.fixture
def traces():
    return TraceSet.from_pairs([(1, 2), (3, 1), (2, 5)])


@pytest.fixture
def isogonal_cfg(tri, traces):
    return build_configuration(tri, traces, Mode.isogonal())


@pytest.fixture
def isotomic_cfg(tri, traces):
    return build_configuration(tri, traces, Mode.isotomic())


@pytest.fixture
def median_cfg(right_tri):
    return build_configuration(right_tri, TraceSet.from_pairs([(1, 1), (1, 1), (1, 1)]), Mode.isotomic())


@pytest.fixture
def bisector_cfg(right_tri):
    return build_configuration(right_tri, TraceSet.from_pairs([(3, 4), (5, 4), (5, 3)]), Mode.isogonal())


@pytest.fixture
def conic_cfg():
    from cevian.generators import conic_first_configuration

    return conic_first_configuration([0, 4, 1, -2, Fraction(1, 3), 5])


def _generated(flavor, mode="isogonal", count=4, seed=7):
    spec = GeneratorSpec(seed=seed, count=count, mode=mode, flavor=flavor)
    return [generate(spec, i) for i in range(count)]


@pytest.fixture(scope="session")
def generated_isogonal():
    return _generated("trace", "isogonal")


@pytest.fixture(scope="session")
def generated_isotomic():
    return _generated("trace", "isotomic")


@pytest.fixture(scope="session")
def generated_conic():
    return _generated("conic")


@pytest.fixture(scope="session")
def generated_pairs():
    return _generated("pairs")


@pytest.fixture
def num_tri():
    return NumTri((0, 0), (7, 0), (2, 5))


@pytest.fixture
def num_right_tri():
    return NumTri((0, 0), (4, 0), (0, 3))
