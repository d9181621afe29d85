"""Pytest configuration and fixtures."""

import pytest
from httpx import ASGITransport, AsyncClient

from braidforge.main import app
from braidforge.services.presentations import Family, FamilySpec, catalog
from braidforge.services.rewriting import derive


@pytest.fixture
async def client():
    """Create async test client."""
    async with AsyncClient(
        transport=ASGITransport(app=app),
        base_url="http://test",
    ) as ac:
        yield ac


@pytest.fixture
def wb3():
    """WB_3 catalog presentation."""
    return catalog(FamilySpec(Family.WELDED_BRAID, 3))


@pytest.fixture(scope="session")
def derived_fvb3():
    """Derived presentation of FVB_3' (index 4)."""
    return derive(Family.FLAT_VIRTUAL_BRAID, 3)


@pytest.fixture(scope="session")
def derived_wb3():
    """Windowed derived presentation of WB_3' with K = 2."""
    return derive(Family.WELDED_BRAID, 3, 2)
