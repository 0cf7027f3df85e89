"""Random systems, trees and forests for tests, demos and fixtures."""

from __future__ import annotations

import random
from typing import Optional

from .core import Fdds
from .trees import Forest, Tree, forest, tree_from_parents

__all__ = ["random_fdds", "random_connected", "random_tree", "random_forest"]


def _rng(rng: Optional[random.Random]) -> random.Random:
    return rng if rng is not None else random.Random()


def random_fdds(m: int, rng: Optional[random.Random] = None, connected: bool = False) -> Fdds:
    """A uniformly random map on ``m`` nodes (conditioned on connectivity if asked)."""
    if m < 0:
        raise ValueError("node count must be non-negative")
    if connected:
        return random_connected(m, rng)
    r = _rng(rng)
    return Fdds([r.randrange(m) for _ in range(m)])


def random_connected(m: int, rng: Optional[random.Random] = None) -> Fdds:
    """Uniform over connected maps on ``m`` labelled nodes, by rejection.

    A random map is connected with probability about ``sqrt(pi / 2m)``, so
    the expected number of draws stays small at the sizes used here.
    """
    if m < 1:
        raise ValueError("a connected system needs at least one node")
    r = _rng(rng)
    while True:
        a = Fdds([r.randrange(m) for _ in range(m)])
        if a.is_connected():
            return a


def random_tree(n: int, rng: Optional[random.Random] = None) -> Tree:
    """Random recursive tree on ``n`` nodes (node i picks a parent among 0..i-1)."""
    if n < 1:
        raise ValueError("a tree needs at least one node")
    r = _rng(rng)
    return tree_from_parents([None] + [r.randrange(i) for i in range(1, n)])


def random_forest(count: int, max_size: int, rng: Optional[random.Random] = None) -> Forest:
    r = _rng(rng)
    return forest(random_tree(r.randint(1, max_size), r) for _ in range(count))
