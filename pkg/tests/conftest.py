import pytest

from nulldiam import connected_graphs


@pytest.fixture(scope="session")
def census7() -> dict[int, list]:
    """One representative per isomorphism class of connected graphs, n <= 7."""
    return {n: list(connected_graphs(n)) for n in range(1, 8)}
