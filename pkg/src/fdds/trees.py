"""Finite rooted in-trees and forests.

Trees are hash-consed: two isomorphic trees built anywhere in the process are
the same Python object, so isomorphism is ``is`` and forests are plain
``{Tree: multiplicity}`` dictionaries.  The interning table holds weak
references only, and every memo table lives on the tree that owns it, so
memory is released together with the trees.

The total order on trees compares in-degree codes: the in-degrees of the
nodes read in breadth-first order, where the children of every node are
visited in increasing order (recursively, for the same order).  Comparison
is lexicographic on these codes.  It is computed level by level without
materialising whole codes, skipping positions where both sides hold the same
subtree.
"""

from __future__ import annotations

import itertools
import weakref
from collections import Counter
from functools import cmp_to_key
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

__all__ = [
    "Tree",
    "Forest",
    "leaf",
    "path",
    "attach_root",
    "children_forest",
    "compare",
    "tree_product",
    "tree_power",
    "cut",
    "cut_forest",
    "forest",
    "forest_product",
    "forest_power",
    "forest_subtract",
    "forest_contains",
    "forest_sum",
    "forest_depth",
    "forest_size",
    "forest_count",
    "forest_is_path",
    "select_min_deepest",
    "sorted_forest",
    "tree_key",
    "tree_min",
    "tree_max",
    "tree_from_code",
    "tree_from_parents",
    "bracket",
]

Forest = Dict["Tree", int]

_uids = itertools.count()
_table: "weakref.WeakValueDictionary[Tuple[int, ...], Tree]" = weakref.WeakValueDictionary()


class Tree:
    """A canonical (interned) finite rooted in-tree.

    ``kids`` holds ``(child, multiplicity)`` pairs sorted by child uid.  Do not
    instantiate directly; use :func:`attach_root` or the other builders.
    """

    __slots__ = (
        "uid",
        "kids",
        "depth",
        "size",
        "degree",
        "_ordered",
        "_cmp",
        "_prod",
        "_cut",
        "_div",
        "_levels",
        "__weakref__",
    )

    def __init__(self, kids: Tuple[Tuple["Tree", int], ...]):
        self.uid = next(_uids)
        self.kids = kids
        self.degree = sum(m for _, m in kids)
        self.depth = 1 + max(c.depth for c, _ in kids) if kids else 0
        self.size = 1 + sum(c.size * m for c, m in kids)
        self._ordered: Optional[Tuple[Tree, ...]] = None
        self._cmp: Optional[Dict[int, int]] = None
        self._prod: Optional[Dict[int, Tree]] = None
        self._cut: Optional[Dict[int, Tree]] = None
        self._div: Optional[Dict[int, Optional[Tree]]] = None
        self._levels: Optional[Tuple[int, ...]] = None

    # -- order ------------------------------------------------------------
    def __lt__(self, other: "Tree") -> bool:
        return compare(self, other) < 0

    def __le__(self, other: "Tree") -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: "Tree") -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: "Tree") -> bool:
        return compare(self, other) >= 0

    # identity equality and hashing are inherited from object

    def __repr__(self) -> str:
        if self.size <= 40:
            return f"Tree({bracket(self)})"
        return f"Tree(size={self.size}, depth={self.depth})"

    # -- structure --------------------------------------------------------
    @property
    def is_leaf(self) -> bool:
        return not self.kids

    def ordered_children(self) -> Tuple["Tree", ...]:
        """Children with multiplicity, in increasing tree order."""
        if self._ordered is None:
            _order_subtree(self)
        return self._ordered  # type: ignore[return-value]

    def level_counts(self) -> Tuple[int, ...]:
        """Number of nodes at each depth ``0..depth``."""
        if self._levels is None:
            counts = [1] + [0] * self.depth
            for c, m in self.kids:
                for d, k in enumerate(c.level_counts()):
                    counts[d + 1] += m * k
            self._levels = tuple(counts)
        return self._levels

    def code(self) -> List[int]:
        """Breadth-first in-degree code (length = node count)."""
        out: List[int] = []
        level: List[Tree] = [self]
        while level:
            out.extend(t.degree for t in level)
            level = [c for t in level for c in t.ordered_children()]
        return out

    def is_path(self) -> bool:
        return self.size == self.depth + 1


def _intern(counts: Mapping[Tree, int]) -> Tree:
    items = sorted(((c.uid, c, m) for c, m in counts.items() if m), key=lambda e: e[0])
    key = tuple(itertools.chain.from_iterable((u, m) for u, _, m in items))
    t = _table.get(key)
    if t is None:
        t = Tree(tuple((c, m) for _, c, m in items))
        _table[key] = t
    return t


def leaf() -> Tree:
    return _intern({})


def attach_root(f: Mapping[Tree, int]) -> Tree:
    """The operator R: join the trees of ``f`` under a new common root."""
    return _intern(f)


def children_forest(t: Tree) -> Forest:
    """The operator D: the multiset of subtrees rooted at the root's children."""
    return {c: m for c, m in t.kids}


def path(depth: int) -> Tree:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    t = leaf()
    for _ in range(depth):
        t = _intern({t: 1})
    return t


# ---------------------------------------------------------------------------
# order


def _order_subtree(root: Tree) -> None:
    # post-order so that every comparison only touches already ordered nodes
    stack = [root]
    while stack:
        t = stack[-1]
        if t._ordered is not None:
            stack.pop()
            continue
        pending = [c for c, _ in t.kids if c._ordered is None]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        distinct = sorted((c for c, _ in t.kids), key=cmp_to_key(_compare_ordered))
        mult = dict(t.kids)
        t._ordered = tuple(itertools.chain.from_iterable([c] * mult[c] for c in distinct))


def _compare_ordered(t1: Tree, t2: Tree) -> int:
    if t1 is t2:
        return 0
    memo = t1._cmp
    if memo is not None:
        hit = memo.get(t2.uid)
        if hit is not None:
            return hit
    chain = [(t1, t2)]
    left: List[Tree] = [t1]
    right: List[Tree] = [t2]
    result = 0
    while True:
        dl = [t.degree for t in left]
        dr = [t.degree for t in right]
        if dl != dr:
            result = -1 if dl < dr else 1
            break
        # positions holding the same subtree never decide the comparison
        pairs = [(a, b) for a, b in zip(left, right) if a is not b]
        if not pairs:
            break
        if len(pairs) == 1:
            a, b = pairs[0]
            memo = a._cmp
            if memo is not None:
                hit = memo.get(b.uid)
                if hit is not None:
                    result = hit
                    break
            chain.append((a, b))
        left = [c for a, _ in pairs for c in a._ordered]  # type: ignore[union-attr]
        right = [c for _, b in pairs for c in b._ordered]  # type: ignore[union-attr]
    for a, b in chain:
        if a._cmp is None:
            a._cmp = {}
        a._cmp[b.uid] = result
        if b._cmp is None:
            b._cmp = {}
        b._cmp[a.uid] = -result
    return result


def compare(t1: Tree, t2: Tree) -> int:
    """Three-way comparison in the tree order: -1, 0 or 1."""
    if t1 is t2:
        return 0
    if t1._ordered is None:
        _order_subtree(t1)
    if t2._ordered is None:
        _order_subtree(t2)
    return _compare_ordered(t1, t2)


def tree_key(t: Tree):
    """Sort key for the tree order (``sorted(ts, key=tree_key)``)."""
    if t._ordered is None:
        _order_subtree(t)
    return _KEY(t)


_KEY = cmp_to_key(_compare_ordered)


def sorted_forest(f: Mapping[Tree, int], reverse: bool = False) -> List[Tree]:
    """Distinct trees of ``f`` in increasing (or decreasing) order."""
    return sorted(f, key=tree_key, reverse=reverse)


def tree_min(ts: Iterable[Tree]) -> Tree:
    return min(ts, key=tree_key)


def tree_max(ts: Iterable[Tree]) -> Tree:
    return max(ts, key=tree_key)


# ---------------------------------------------------------------------------
# product and cut


def tree_product(t1: Tree, t2: Tree) -> Tree:
    """Layered direct product: pairs of nodes at equal depth."""
    if t1.uid > t2.uid:
        t1, t2 = t2, t1
    memo = t1._prod
    if memo is not None:
        hit = memo.get(t2.uid)
        if hit is not None:
            return hit
    stack = [(t1, t2)]
    while stack:
        a, b = stack[-1]
        if a._prod is not None and b.uid in a._prod:
            stack.pop()
            continue
        if not a.kids or not b.kids:
            res = leaf()
        else:
            missing = []
            for ca, _ in a.kids:
                for cb, _ in b.kids:
                    x, y = (ca, cb) if ca.uid <= cb.uid else (cb, ca)
                    if x._prod is None or y.uid not in x._prod:
                        missing.append((x, y))
            if missing:
                stack.extend(missing)
                continue
            acc: Dict[Tree, int] = {}
            for ca, ma in a.kids:
                for cb, mb in b.kids:
                    x, y = (ca, cb) if ca.uid <= cb.uid else (cb, ca)
                    p = x._prod[y.uid]  # type: ignore[index]
                    acc[p] = acc.get(p, 0) + ma * mb
            res = _intern(acc)
        stack.pop()
        if a._prod is None:
            a._prod = {}
        a._prod[b.uid] = res
    return t1._prod[t2.uid]  # type: ignore[index]


def tree_power(t: Tree, k: int) -> Tree:
    """``t`` multiplied by itself ``k`` times; ``k = 0`` gives the path of depth(t)."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    if k == 0:
        return path(t.depth)
    result = t
    base = t
    k -= 1
    while k:
        if k & 1:
            result = tree_product(result, base)
        base = tree_product(base, base)
        k >>= 1
    return result


def cut(t: Tree, k: int) -> Tree:
    """Induced subtree on the nodes of depth at most ``k``."""
    if k < 0:
        raise ValueError("cut depth must be non-negative")
    if t.depth <= k:
        return t
    memo = t._cut
    if memo is not None and k in memo:
        return memo[k]
    stack = [(t, k)]
    while stack:
        a, h = stack[-1]
        if a.depth <= h or (a._cut is not None and h in a._cut):
            stack.pop()
            continue
        if h == 0:
            res = leaf()
        else:
            missing = [
                (c, h - 1)
                for c, _ in a.kids
                if c.depth > h - 1 and (c._cut is None or (h - 1) not in c._cut)
            ]
            if missing:
                stack.extend(missing)
                continue
            acc: Dict[Tree, int] = {}
            for c, m in a.kids:
                cc = c if c.depth <= h - 1 else c._cut[h - 1]  # type: ignore[index]
                acc[cc] = acc.get(cc, 0) + m
            res = _intern(acc)
        stack.pop()
        if a._cut is None:
            a._cut = {}
        a._cut[h] = res
    return t._cut[k]  # type: ignore[index]


# ---------------------------------------------------------------------------
# forests


def forest(trees: Iterable[Tree]) -> Forest:
    return dict(Counter(trees))


def forest_count(f: Mapping[Tree, int]) -> int:
    """Number of trees, with multiplicity."""
    return sum(f.values())


def forest_size(f: Mapping[Tree, int]) -> int:
    """Total number of nodes."""
    return sum(t.size * m for t, m in f.items())


def forest_depth(f: Mapping[Tree, int]) -> int:
    return max((t.depth for t in f), default=0)


def forest_is_path(f: Mapping[Tree, int]) -> bool:
    """True when the forest is a single tree which is a path."""
    if len(f) != 1:
        return False
    ((t, m),) = f.items()
    return m == 1 and t.is_path()


def cut_forest(f: Mapping[Tree, int], k: int) -> Forest:
    out: Forest = {}
    for t, m in f.items():
        c = cut(t, k)
        out[c] = out.get(c, 0) + m
    return out


def forest_sum(f: Mapping[Tree, int], g: Mapping[Tree, int]) -> Forest:
    out = dict(f)
    for t, m in g.items():
        out[t] = out.get(t, 0) + m
    return out


def forest_product(f: Mapping[Tree, int], g: Mapping[Tree, int]) -> Forest:
    out: Forest = {}
    for a, ma in f.items():
        for b, mb in g.items():
            p = tree_product(a, b)
            out[p] = out.get(p, 0) + ma * mb
    return out


def forest_power(f: Mapping[Tree, int], k: int) -> Forest:
    """k-fold product; ``k = 0`` gives a single path of depth(f)."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    if k == 0:
        return {path(forest_depth(f)): 1}
    result: Forest = dict(f)
    base: Forest = dict(f)
    k -= 1
    while k:
        if k & 1:
            result = forest_product(result, base)
        base = forest_product(base, base)
        k >>= 1
    return result


def forest_contains(f: Mapping[Tree, int], g: Mapping[Tree, int]) -> bool:
    """Multiset inclusion ``g ⊆ f``."""
    return all(f.get(t, 0) >= m for t, m in g.items())


def forest_subtract(f: Mapping[Tree, int], g: Mapping[Tree, int]) -> Optional[Forest]:
    """Multiset difference ``f \\ g``, or None when ``g`` is not contained in ``f``."""
    out = dict(f)
    for t, m in g.items():
        left = out.get(t, 0) - m
        if left < 0:
            return None
        if left:
            out[t] = left
        else:
            out.pop(t, None)
    return out


def select_min_deepest(f: Mapping[Tree, int]) -> Tree:
    """The smallest tree among those of maximal depth."""
    if not f:
        raise ValueError("empty forest")
    d = forest_depth(f)
    return tree_min(t for t in f if t.depth == d)


# ---------------------------------------------------------------------------
# conversions


def tree_from_parents(parents: List[Optional[int]]) -> Tree:
    """Build a tree from a parent array; the root has parent None."""
    n = len(parents)
    kids: List[List[int]] = [[] for _ in range(n)]
    root = None
    for v, p in enumerate(parents):
        if p is None:
            if root is not None:
                raise ValueError("more than one root")
            root = v
        else:
            kids[p].append(v)
    if root is None:
        raise ValueError("no root")
    # iterative post-order
    built: List[Optional[Tree]] = [None] * n
    order: List[int] = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(kids[v])
    if len(order) != n:
        raise ValueError("parent array is not a tree")
    for v in reversed(order):
        acc: Dict[Tree, int] = {}
        for c in kids[v]:
            ct = built[c]
            acc[ct] = acc.get(ct, 0) + 1  # type: ignore[index]
        built[v] = _intern(acc)
    return built[root]  # type: ignore[return-value]


def tree_from_code(code: List[int]) -> Tree:
    """Inverse of :meth:`Tree.code` (accepts any BFS in-degree sequence)."""
    if not code:
        raise ValueError("empty code")
    parents: List[Optional[int]] = [None]
    nxt = 1
    for v, deg in enumerate(code):
        if v >= nxt:
            raise ValueError("code ends before all nodes are reached")
        for _ in range(deg):
            parents.append(v)
            nxt += 1
    if nxt != len(code):
        raise ValueError("code length does not match its degree sum")
    return tree_from_parents(parents)


def bracket(t: Tree) -> str:
    """Nested-bracket rendering with children in tree order: ``[[][]]``."""
    out: List[str] = []
    stack: List[object] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        node: Tree = item  # type: ignore[assignment]
        out.append("[")
        stack.append("]")
        stack.extend(reversed(node.ordered_children()))
    return "".join(out)
