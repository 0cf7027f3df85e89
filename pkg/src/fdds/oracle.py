"""Brute-force ground truth for small instances.

Everything here is exhaustive: isomorphism classes of rooted trees and of
functional digraphs are enumerated outright, and equations are solved by
trying every candidate of the size forced by node counting.  Only meant for
at most ten nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from collections import Counter
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .core import Fdds, fdds_power, fdds_product, is_isomorphic
from .trees import Forest, Tree, attach_root, forest_power

__all__ = [
    "BudgetExceeded",
    "EnumerationBudget",
    "MAX_ORACLE_NODES",
    "enumerate_trees",
    "trees_of_size",
    "forests_of_size",
    "enumerate_fdds",
    "fdds_of_size",
    "brute_divide",
    "brute_root",
    "brute_forest_root",
    "quotient_table",
    "unroll_classes",
    "brute_unroll_divide",
]

MAX_ORACLE_NODES = 10


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationBudget:
    max_nodes: int
    connected: bool = False
    max_cycle: Optional[int] = None
    min_nodes: int = 1

    def __post_init__(self):
        if self.max_nodes > MAX_ORACLE_NODES:
            raise BudgetExceeded(f"oracle enumeration is capped at {MAX_ORACLE_NODES} nodes, asked for {self.max_nodes}")
        if self.min_nodes < 0:
            raise ValueError("min_nodes must be non-negative")


def _check(n: int) -> None:
    if n > MAX_ORACLE_NODES + 1:
        raise BudgetExceeded(f"oracle enumeration is capped at {MAX_ORACLE_NODES} nodes, asked for {n}")


# ---------------------------------------------------------------------------
# trees and forests


@lru_cache(maxsize=None)
def trees_of_size(n: int) -> Tuple[Tree, ...]:
    """All rooted trees with exactly ``n`` nodes, one per isomorphism class."""
    _check(n)
    if n < 1:
        return ()
    return tuple(attach_root(f) for f in forests_of_size(n - 1))


@lru_cache(maxsize=None)
def _pool(n: int) -> Tuple[Tree, ...]:
    # every tree with at most n nodes, each once
    return tuple(t for s in range(1, n + 1) for t in trees_of_size(s))


def forests_of_size(n: int) -> List[Forest]:
    """All forests with exactly ``n`` nodes (multisets of trees)."""
    _check(n + 1)
    pool = _pool(n)
    out: List[Forest] = []

    def grow(rest: int, start: int, acc: Dict[Tree, int]) -> None:
        if rest == 0:
            out.append(dict(acc))
            return
        for i in range(start, len(pool)):
            t = pool[i]
            if t.size > rest:
                continue
            acc[t] = acc.get(t, 0) + 1
            grow(rest - t.size, i, acc)
            if acc[t] == 1:
                del acc[t]
            else:
                acc[t] -= 1

    grow(n, 0, {})
    return out


def enumerate_trees(max_nodes: int) -> Iterator[Tree]:
    """All rooted trees with ``1..max_nodes`` nodes, by increasing size."""
    _check(max_nodes)
    for n in range(1, max_nodes + 1):
        yield from trees_of_size(n)


# ---------------------------------------------------------------------------
# functional digraphs


def _assemble(trees: Sequence[Tree]) -> Fdds:
    # cycle 0 -> 1 -> ... -> p-1 -> 0, tree i hanging on node i
    p = len(trees)
    succ: List[int] = [(i + 1) % p for i in range(p)]
    stack: List[Tuple[Tree, int]] = [(t, i) for i, t in enumerate(trees)]
    while stack:
        t, v = stack.pop()
        for c, m in t.kids:
            for _ in range(m):
                succ.append(v)
                stack.append((c, len(succ) - 1))
    return Fdds(succ)


def _compositions(n: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _connected_of_size(n: int, max_cycle: Optional[int]) -> Tuple[Fdds, ...]:
    seen: Dict[bytes, Fdds] = {}
    top = n if max_cycle is None else min(n, max_cycle)
    for p in range(1, top + 1):
        for sizes in _compositions(n, p):
            for trees in product(*(trees_of_size(s) for s in sizes)):
                a = _assemble(trees)
                seen.setdefault(a.canonical, a)
    return tuple(seen[k] for k in sorted(seen))


@lru_cache(maxsize=None)
def _all_of_size(n: int, max_cycle: Optional[int]) -> Tuple[Fdds, ...]:
    # multisets of connected classes, sizes non-increasing then index non-increasing
    pool = [(s, i, c) for s in range(1, n + 1) for i, c in enumerate(_connected_of_size(s, max_cycle))]
    out: List[Fdds] = []

    def grow(rest: int, limit: int, acc: List[int]) -> None:
        if rest == 0:
            succ: List[int] = []
            for j in acc:
                part = pool[j][2]
                off = len(succ)
                succ.extend(v + off for v in part.succ)
            out.append(Fdds(succ))
            return
        for j in range(min(limit, len(pool) - 1), -1, -1):
            if pool[j][0] <= rest:
                acc.append(j)
                grow(rest - pool[j][0], j, acc)
                acc.pop()

    grow(n, len(pool) - 1, [])
    return tuple(out)


def fdds_of_size(n: int, connected: bool = False, max_cycle: Optional[int] = None) -> Tuple[Fdds, ...]:
    """One representative per isomorphism class of systems with ``n`` nodes."""
    _check(n)
    if n == 0:
        return () if connected else (Fdds([]),)
    return _connected_of_size(n, max_cycle) if connected else _all_of_size(n, max_cycle)


def enumerate_fdds(budget: EnumerationBudget) -> Iterator[Fdds]:
    """All classes with ``min_nodes..max_nodes`` nodes, by increasing size."""
    for n in range(budget.min_nodes, budget.max_nodes + 1):
        yield from fdds_of_size(n, budget.connected, budget.max_cycle)


# ---------------------------------------------------------------------------
# equations


def brute_divide(a: Fdds, b: Fdds, connected: bool = False) -> List[Fdds]:
    """Every class ``X`` with ``a * X`` isomorphic to ``b``."""
    if len(a) == 0:
        return [Fdds([])] if len(b) == 0 and not connected else []
    if len(b) % len(a):
        return []
    size = len(b) // len(a)
    return [x for x in fdds_of_size(size, connected) if is_isomorphic(fdds_product(a, x), b)]


def _integer_root(n: int, k: int) -> Optional[int]:
    r = round(n ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**k == n:
            return c
    return None


def brute_root(a: Fdds, k: int, connected: bool = False) -> List[Fdds]:
    """Every class ``X`` with ``X^k`` isomorphic to ``a``."""
    if k < 1:
        raise ValueError("k must be positive")
    size = _integer_root(len(a), k)
    if size is None:
        return []
    return [x for x in fdds_of_size(size, connected) if is_isomorphic(fdds_power(x, k), a)]


def brute_forest_root(f: Mapping[Tree, int], k: int) -> List[Forest]:
    """Every forest ``R`` with ``R^k = f``.

    The level counts of ``R^k`` are the k-th powers of those of ``R``, which
    fixes the size of the candidates.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not f:
        return [{}]
    depth = max(t.depth for t in f)
    levels = [0] * (depth + 1)
    for t, m in f.items():
        for d, c in enumerate(t.level_counts()):
            levels[d] += m * c
    roots = [_integer_root(c, k) for c in levels]
    if any(r is None for r in roots):
        return []
    size = sum(roots)  # type: ignore[arg-type]
    target = dict(f)
    return [g for g in forests_of_size(size) if forest_power(g, k) == target]


def quotient_table(divisors: Sequence[Fdds], max_dividend: int, connected: bool = True) -> Dict[Tuple[bytes, bytes], List[Fdds]]:
    """``(canon(A), canon(B)) -> [X, ...]`` for all ``A * X = B`` with ``|B| <= max_dividend``.

    Same answers as :func:`brute_divide` over a whole grid, computed by
    multiplying forward once instead of searching per pair.
    """
    table: Dict[Tuple[bytes, bytes], List[Fdds]] = {}
    for a in divisors:
        if len(a) == 0:
            continue
        for size in range(1, max_dividend // len(a) + 1):
            for x in fdds_of_size(size, connected):
                key = (a.canonical, fdds_product(a, x).canonical)
                table.setdefault(key, []).append(x)
    return table


def unroll_classes(a: Fdds) -> Counter:
    """The unroll of ``a`` as a multiset of infinite trees, without cutting.

    The unroll tree of a cycle node is determined by the periodic sequence of
    trees hanging on the cycle nodes met walking backwards from it; two such
    sequences are equal exactly when their shortest repeating blocks are.
    """
    out: Counter = Counter()
    for comp in a.components:
        for start in range(comp.period):
            seq = comp.spine_sequence(start)
            p = len(seq)
            d = next(d for d in range(1, p + 1) if p % d == 0 and all(seq[i] is seq[i % d] for i in range(p)))
            out[seq[:d]] += 1  # the key keeps the interned trees alive
    return out


def brute_unroll_divide(a: Fdds, b: Fdds) -> List[Fdds]:
    """Every class ``X`` with ``|X| = |B| / |A|`` whose unroll times that of ``a`` is that of ``b``.

    Level counts of unrolls multiply and the level at ``depth(B)`` counts
    every node, so any solution can be taken with this many nodes.
    """
    if len(a) == 0:
        return [Fdds([])] if len(b) == 0 else []
    if len(b) % len(a):
        return []
    target = unroll_classes(b)
    return [x for x in fdds_of_size(len(b) // len(a)) if unroll_classes(fdds_product(a, x)) == target]
