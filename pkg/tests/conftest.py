import pytest

from ospds.diagram import enumerate_corefree, parse


def P(text: str, t: int):
    return parse(text, t)


@pytest.fixture(scope="session")
def corefree_pool():
    """Every core-free diagram with up to 4 crosses and width 8, all types."""
    pool = []
    for t in (0, 1, 2):
        for k in range(0, 5):
            pool.extend(enumerate_corefree(t, k, 8))
    return pool


@pytest.fixture(scope="session")
def small_cores():
    """A spread of core diagrams per type, up to three core symbols."""
    return {
        0: [P("o", 0), P("+o>", 0), P("+oo>>", 0), P("+o><", 0),
            P("o<", 0), P("+o>o<", 0)],
        1: [P("o", 1), P("<", 1), P(">", 1), P("o><", 1), P("<o<", 1),
            P(">><", 1)],
        2: [P(">", 2), P(">o<", 2), P(">><", 2), P(">o>o<", 2)],
    }
