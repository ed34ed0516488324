import warnings

import pytest

from cablefloer.hfunc import HKnot, UnverifiedRegimeWarning
from cablefloer.knots import preset


@pytest.fixture(scope="session")
def t34():
    return HKnot.from_delta(preset("T(3,4)"))


@pytest.fixture(scope="session")
def trefoil():
    return HKnot.from_delta(preset("T(2,3)"))


@pytest.fixture(scope="session")
def unknot():
    return HKnot.unknot()


@pytest.fixture
def quiet():
    """Silence the below-threshold warning for tests that scan small m on purpose."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UnverifiedRegimeWarning)
        yield
