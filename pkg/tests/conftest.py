from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from fdds.core import Fdds
from fdds.trees import tree_from_parents

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def maps(min_nodes: int = 1, max_nodes: int = 8):
    """Strategy for arbitrary transition maps."""
    return st.integers(min_nodes, max_nodes).flatmap(
        lambda m: st.lists(st.integers(0, max(m - 1, 0)), min_size=m, max_size=m)
    ).map(Fdds)


def connected_maps(max_nodes: int = 8):
    return maps(1, max_nodes).filter(lambda a: a.is_connected())


def trees(max_nodes: int = 10):
    """Random recursive trees: node i hangs below one of 0..i-1."""
    return (
        st.integers(1, max_nodes)
        .flatmap(lambda n: st.tuples(*[st.integers(0, i - 1) for i in range(1, n)]))
        .map(lambda ps: tree_from_parents([None, *ps]))
    )


def forests(max_trees: int = 4, max_nodes: int = 6):
    return st.lists(trees(max_nodes), min_size=1, max_size=max_trees).map(
        lambda ts: {t: ts.count(t) for t in set(ts)}
    )


def brute_isomorphic(a: Fdds, b: Fdds) -> bool:
    """Isomorphism by trying every bijection (only for a handful of nodes)."""
    if len(a) != len(b):
        return False
    n = len(a)
    for perm in itertools.permutations(range(n)):
        if all(perm[a.succ[i]] == b.succ[perm[i]] for i in range(n)):
            return True
    return False


@pytest.fixture
def rng():
    return random.Random(20240601)


ACCEPTANCE_LINES: list = []


def record_criterion(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
