import pytest

from knotforge import parse_pd

TREFOIL_PD = "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]"
FIG8_PD = "X[1,4,2,5];X[3,7,4,6];X[5,8,6,1];X[7,3,8,2]"
MIRROR_TREFOIL_PD = "X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]"


@pytest.fixture
def unknot():
    return parse_pd("U")


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL_PD)


@pytest.fixture
def fig8():
    return parse_pd(FIG8_PD)


@pytest.fixture
def mirror_trefoil():
    return parse_pd(MIRROR_TREFOIL_PD)
