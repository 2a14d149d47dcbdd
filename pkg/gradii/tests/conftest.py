"""Fixtures that are useful for all tests."""
import pytest

from gradii import classg, series
from gradii.classg import GAlphaSpec, HerglotzSpec


@pytest.fixture(scope="session")
def koebe_section():
    """The second section ``z + 2z^2`` of the Koebe function."""
    return series.section(series.koebe(8), 2, order=2)


@pytest.fixture(scope="session")
def half_square():
    """``z - z^2/2``, the member of G(1) with ``f' = 1 - z``."""
    return classg.extremal_function(1.0, 2, order=32)


@pytest.fixture(scope="session")
def g1_member():
    """A random member of G(1) with three atoms, truncated at degree 64."""
    return classg.random_member(GAlphaSpec(1.0),
                                HerglotzSpec.sample(2024, atom_count=3),
                                order=64)
