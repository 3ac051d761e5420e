import pytest

from topolab import make_complete, make_cycle, make_path
from topolab.ops import corona, join

ACCEPTANCE_RESULTS: dict[str, str] = {}


def record_acceptance(name: str, outcome: str) -> None:
    ACCEPTANCE_RESULTS[name] = outcome


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{ACCEPTANCE_RESULTS[name]:4}  {name}")


def brute_edges(g):
    """Edge set rebuilt from scratch by scanning every vertex pair."""
    return {(u, v) for u in range(g.n) for v in range(u + 1, g.n) if v in g.adj[u]}


@pytest.fixture
def small_graphs():
    return {
        "P1": make_path(1),
        "P4": make_path(4),
        "C5": make_cycle(5),
        "K4": make_complete(4),
        "P2+P3": join(make_path(2), make_path(3)),
        "C3+K3": join(make_cycle(3), make_complete(3)),
        "K3.P2": corona(make_complete(3), make_path(2)),
        "P3.C3": corona(make_path(3), make_cycle(3)),
    }
