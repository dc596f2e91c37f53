import pytest

from decabracket.brackets.fobracket import monomial_tables
from decabracket.poisson.poissonlab import bivector_of


@pytest.fixture(scope="module")
def tables():
    """The ten monomial tables, in Delta(3) order."""
    return monomial_tables()


@pytest.fixture(scope="module")
def bivectors(tables):
    return [bivector_of(table) for table in tables]
