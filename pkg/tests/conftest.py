import pytest

from cohrealize.types.universe import Universe
from cohrealize.utils.system import Output


@pytest.fixture(scope='session')
def small_universe() -> Universe:
    """ W(2,2): ∅, ν0, ν1 and ν01 """
    return Universe(2, 2).warm()


@pytest.fixture(scope='session')
def universe() -> Universe:
    """ W(3,2), the default bound """
    return Universe(3, 2).warm()


@pytest.fixture(autouse=True)
def reset_output():
    yield
    Output.verbose = False
    Output.quiet = False
