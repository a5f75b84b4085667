import pytest

from tameact.catalog import build_case, catalog_names
from tameact.geometry import inertia_hopf


@pytest.fixture(scope="session")
def cases():
    """Every catalog entry, built once per session."""
    return {name: build_case(name) for name in catalog_names()}


@pytest.fixture(scope="session")
def inertia_by_case(cases):
    """InertiaHopf at every point of every entry (the expensive part of
    several cross-checks, so computed once and shared)."""
    out = {}
    for name, case in cases.items():
        out[name] = [inertia_hopf(case.algebra, pt) for pt in case.points]
    return out
