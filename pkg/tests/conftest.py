"""Shared fixtures for siltlab tests."""

from pathlib import Path

import pytest

from siltlab.algebra.based import BasedAlgebra
from siltlab.catalog import registry

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def example23() -> BasedAlgebra:
    """1 <-> 2 with both composites zero, over F_2."""
    return registry.get("example23", 2)


@pytest.fixture(scope="session")
def a2() -> BasedAlgebra:
    """A_2 over F_2."""
    return registry.get("A", 2, 2)


@pytest.fixture(scope="session")
def a3() -> BasedAlgebra:
    """A_3 over F_2."""
    return registry.get("A", 2, 3)


@pytest.fixture(scope="session")
def d3() -> BasedAlgebra:
    """D_3 over F_2."""
    return registry.get("D", 2, 3)


@pytest.fixture(scope="session")
def k4() -> BasedAlgebra:
    """Block of S(2,6) over F_2."""
    return registry.get("K4")


@pytest.fixture(scope="session")
def path_a3() -> BasedAlgebra:
    """Path algebra of 1 <- 2 -> 3 over F_2."""
    return registry.get("pathA3", 2)


@pytest.fixture
def fixtures_dir() -> Path:
    """Directory holding expected output files."""
    return FIXTURES
