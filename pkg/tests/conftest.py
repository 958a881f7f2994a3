"""Shared fixtures: the expensive enumerations run once per session."""

import pytest

from factorwords import Budget, brute_force_enumerate, enumerate_representable

# exact safe scan limits per order: one past the extremal witness length
SAFE_SCAN_LEN = {1: 3, 2: 6, 3: 11, 4: 25}


@pytest.fixture(scope="session")
def enum_results():
    """Graph-search enumeration for orders 1..4, with the set listings."""
    return {n: enumerate_representable(n, collect_sets=True) for n in (1, 2, 3, 4)}


@pytest.fixture(scope="session")
def brute_small():
    """Brute-force oracle for orders 1..3."""
    return {n: brute_force_enumerate(n, SAFE_SCAN_LEN[n], collect_sets=True)
            for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def brute4():
    """Brute-force oracle for order 4 (the heavy one)."""
    return brute_force_enumerate(4, SAFE_SCAN_LEN[4], Budget.default(workers=4),
                                 collect_sets=True)
