import pytest

from condlat import catalog


@pytest.fixture
def b4():
    return catalog.entry("material-B4").lattice


@pytest.fixture
def quad_frame():
    return catalog.frame_entry("quad-two-way").frame


def names_at(lattice, witness):
    return tuple(lattice.names[i] for i in witness)
