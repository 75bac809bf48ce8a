import itertools
import sys

import networkx as nx
import pytest

from isodom import certify
from isodom.graph import Graph

ORACLE_CHECKERS = {
    "DS": certify.is_dominating,
    "SDS": certify.is_secure_dominating_naive,
    "IDS": certify.is_isolate_dominating,
    "ISDS": certify.is_isolate_secure_dominating,
}


def from_nx(G):
    return Graph.from_edges(G.number_of_nodes(), G.edges())


def atlas(max_n, connected=True):
    """All graphs up to isomorphism with 1..max_n vertices (networkx atlas, n <= 7)."""
    out = []
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() > max_n:
            break
        if connected and not nx.is_connected(G):
            continue
        out.append(from_nx(G))
    return out


def all_subsets(n):
    for k in range(n + 1):
        yield from itertools.combinations(range(n), k)


def oracle_min(g, kind):
    """(size, lex)-first subset accepted by the set-based checker, or None."""
    check = ORACLE_CHECKERS[kind]
    for s in all_subsets(g.n):
        if check(g, s).verdict:
            return s
    return None


@pytest.fixture(scope="session")
def connected_upto6():
    return atlas(6)


@pytest.fixture(scope="session")
def connected_upto7():
    return atlas(7)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(mod.RESULTS):
            terminalreporter.write_line(mod.RESULTS[number])
