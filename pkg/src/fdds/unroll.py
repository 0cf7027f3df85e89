"""Finite cuts of unrolls, spines, periodic patterns, shifts and rolls.

An unroll is never materialised.  It is handled as a cut at some depth ``n``
plus period information; the infinite branch of a cut tree is recovered as a
maximal-depth path, which is correct on its first ``n - depth`` nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .core import Fdds
from .trees import (
    Forest,
    Tree,
    attach_root,
    cut,
    forest_count,
    tree_key,
    tree_max,
)

__all__ = [
    "CutUnroll",
    "PeriodicPattern",
    "cut_unroll",
    "required_depth",
    "spine",
    "periodic_pattern",
    "smallest_period",
    "shift_cut",
    "shifts_class",
    "roll",
    "roll_tree",
    "unroll_periods",
    "divisors",
]


@dataclass(frozen=True)
class CutUnroll:
    """The unroll of a system cut at depth ``n``: one tree per periodic node."""

    forest: Forest
    n: int
    source: Optional[Fdds] = field(default=None, compare=False)
    roots: Tuple[Tuple[int, Tree], ...] = field(default=(), compare=False)

    @property
    def alpha(self) -> int:
        return forest_count(self.forest)

    def trees(self) -> List[Tree]:
        """All trees with multiplicity, in increasing order."""
        out: List[Tree] = []
        for t in sorted(self.forest, key=tree_key):
            out.extend([t] * self.forest[t])
        return out


@dataclass(frozen=True)
class PeriodicPattern:
    """Finite trees hooked on consecutive infinite-branch nodes, repeated cyclically."""

    trees: Tuple[Tree, ...]

    def __post_init__(self):
        if not self.trees:
            raise ValueError("a periodic pattern needs at least one tree")

    @property
    def p(self) -> int:
        return len(self.trees)

    def smallest_period(self) -> int:
        p = self.p
        for d in divisors(p):
            if all(self.trees[i] is self.trees[i % d] for i in range(d, p)):
                return d
        return p  # pragma: no cover - d = p always matches

    def reduced(self) -> "PeriodicPattern":
        return PeriodicPattern(self.trees[: self.smallest_period()])

    def repeated(self, k: int) -> "PeriodicPattern":
        return PeriodicPattern(self.trees * k)

    def roll(self) -> Fdds:
        return roll(self)


def divisors(p: int) -> List[int]:
    small = [d for d in range(1, int(p**0.5) + 1) if p % d == 0]
    return sorted(set(small + [p // d for d in small]))


def cut_unroll(a: Fdds, n: int) -> CutUnroll:
    """Cut at depth ``n`` of the unroll tree of every periodic node of ``a``."""
    if n < 0:
        raise ValueError("cut depth must be non-negative")
    periodic = a.periodic
    hanging = a.hanging
    pre = a.preimages
    cyc_nodes = [u for u in range(len(a)) if periodic[u]]
    # for each periodic u: its cycle predecessor and its transient preimages
    cyc_pred = {}
    side: Dict[int, List[Tree]] = {}
    for u in cyc_nodes:
        side[u] = []
        for w in pre[u]:
            if periodic[w]:
                cyc_pred[u] = w
            else:
                side[u].append(hanging[w])  # type: ignore[arg-type]
    leaf_tree = attach_root({})
    level = {u: leaf_tree for u in cyc_nodes}
    for h in range(1, n + 1):
        nxt = {}
        for u in cyc_nodes:
            acc: Dict[Tree, int] = {level[cyc_pred[u]]: 1}
            for t in side[u]:
                c = cut(t, h - 1)
                acc[c] = acc.get(c, 0) + 1
            nxt[u] = attach_root(acc)
        level = nxt
    f: Forest = {}
    for u in cyc_nodes:
        f[level[u]] = f.get(level[u], 0) + 1
    return CutUnroll(forest=f, n=n, source=a, roots=tuple((u, level[u]) for u in cyc_nodes))


def required_depth(b: Fdds) -> int:
    """Cut depth at which unroll divisibility is decided: 2 * alpha + depth."""
    return 2 * b.alpha + b.depth


def spine(t: Tree, reliable: int) -> List[Tree]:
    """Subtrees rooted at the first ``reliable + 1`` nodes of a maximal-depth path.

    Among children of full remaining depth the largest one in tree order is
    followed.  On a genuine cut of depth ``n`` of an unroll of depth ``d`` the
    returned nodes lie on the infinite branch whenever ``reliable <= n - d``.
    """
    if reliable < 0 or reliable > t.depth:
        raise ValueError(f"cannot follow {reliable} spine steps in a tree of depth {t.depth}")
    out = [t]
    cur = t
    for _ in range(reliable):
        want = cur.depth - 1
        deep = [c for c, _ in cur.kids if c.depth == want]
        cur = deep[0] if len(deep) == 1 else tree_max(deep)
        out.append(cur)
    return out


def _decoration(parent: Tree, child: Tree) -> Tree:
    # R(D(parent) - child)
    acc = {c: m for c, m in parent.kids}
    if acc[child] == 1:
        del acc[child]
    else:
        acc[child] -= 1
    return attach_root(acc)


def periodic_pattern(t: Tree, p: int, reliable: Optional[int] = None) -> Optional[PeriodicPattern]:
    """Extract ``(t_0, ..., t_{p-1})`` from a cut tree.

    ``t_i`` is the i-th spine subtree with the next spine subtree removed.
    When ``reliable > p`` the spine is followed that far and every later
    decoration must equal the corresponding earlier one cut to the available
    depth; otherwise None is returned.
    """
    if p < 1:
        raise ValueError("period must be positive")
    steps = max(p, reliable or 0)
    nodes = spine(t, steps)
    deco = [_decoration(nodes[i], nodes[i + 1]) for i in range(steps)]
    for i in range(p, steps):
        if deco[i] is not cut(deco[i % p], nodes[i].depth):
            return None
    return PeriodicPattern(tuple(deco[:p]))


def smallest_period(t: Tree, period: int) -> int:
    """Smallest divisor of a known valid ``period`` that is a period of ``t``."""
    pattern = periodic_pattern(t, period)
    assert pattern is not None
    return pattern.smallest_period()


def shift_cut(t: Tree, i: int) -> Tree:
    """Drop the first ``i`` spine nodes (and what hangs on them)."""
    return spine(t, i)[-1]


def shifts_class(t: Tree, p: int) -> List[Tree]:
    """The ``p`` shifts of ``t``, all cut to depth ``depth(t) - p``."""
    nodes = spine(t, p)
    d = t.depth - p
    return [cut(nodes[i], d) for i in range(p)]


def roll(pattern: PeriodicPattern | Sequence[Tree]) -> Fdds:
    """Connected system whose cycle carries the pattern's trees.

    The tree ``t_i`` is hooked on cycle node ``v_i`` and ``v_i`` maps to
    ``v_{i-1}``, as on the infinite branch of an unroll tree.
    """
    trees = tuple(pattern.trees) if isinstance(pattern, PeriodicPattern) else tuple(pattern)
    p = len(trees)
    if p == 0:
        raise ValueError("cannot roll an empty pattern")
    succ: List[int] = [(i - 1) % p for i in range(p)]
    queue: List[Tuple[Tree, int]] = [(trees[i], i) for i in range(p)]
    head = 0
    while head < len(queue):
        t, ident = queue[head]
        head += 1
        for c, m in t.kids:
            for _ in range(m):
                succ.append(ident)
                queue.append((c, len(succ) - 1))
    return Fdds(succ)


def roll_tree(t: Tree, p: int) -> Fdds:
    """Roll a cut tree at period ``p``."""
    pattern = periodic_pattern(t, p)
    assert pattern is not None
    return roll(pattern)


def unroll_periods(cu: CutUnroll) -> Dict[Tree, int]:
    """Smallest period of each tree of a cut unroll, read from its source system."""
    if cu.source is None:
        raise ValueError("cut unroll has no source system")
    a = cu.source
    by_node = dict(cu.roots)
    out: Dict[Tree, int] = {}
    for comp in a.components:
        d = PeriodicPattern(comp.spine_sequence()).smallest_period()
        for u in comp.cycle:
            t = by_node[u]
            prev = out.get(t)
            out[t] = d if prev is None else min(prev, d)
    return out
