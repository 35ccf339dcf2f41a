import itertools

import pytest

from bicliquekit.core import Cover, HostGraph


def brute_edge_counts(cover: Cover) -> dict:
    """Per-edge coverage by literally testing edge membership in each biclique."""
    counts = {}
    for edge in cover.host.edges():
        u, v = edge
        c = 0
        for bq in cover.bicliques:
            if cover.host.kind == "complete":
                if (u in bq.left and v in bq.right) or (v in bq.left and u in bq.right):
                    c += 1
            elif u in bq.left and v in bq.right:
                c += 1
        counts[edge] = c
    return counts


def subsets(d, sizes=None):
    sizes = range(d + 1) if sizes is None else sizes
    return [frozenset(c) for s in sizes for c in itertools.combinations(range(1, d + 1), s)]


@pytest.fixture
def brute():
    return brute_edge_counts


def pytest_terminal_summary(terminalreporter):
    import sys

    module = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
