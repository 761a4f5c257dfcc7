from __future__ import annotations

import pytest

from corpus import mixed_corpus


@pytest.fixture(scope="session")
def integer_corpus() -> list[tuple[float, ...]]:
    """1050 integer sequences (convex, perturbed, random), lengths 3 to 50."""
    return mixed_corpus()
