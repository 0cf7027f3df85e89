"""Division of finite trees and forests.

``a * x = b`` with ``depth(a) >= depth(b)`` has at most one solution ``x`` of
depth ``depth(b)``.  Writing ``A = D(a)`` and ``B = D(b)``, the children of
``x`` form the forest ``X`` with ``A * X = B``.  That forest is peeled off
one depth level at a time, deepest first: the trees of ``B`` at the current
maximal depth ``d`` are exactly the products ``cut(a', d) * x'`` for ``a'`` of
depth at least ``d`` and ``x'`` of depth ``d``.  Because the tree order is
compatible with the product, the largest of them is the product of the two
largest factors, which pins down one more tree of ``X`` by a recursive
division at equal depth.
"""

from __future__ import annotations

from typing import Dict, Mapping, Optional

from ._util import deep_recursion
from .trees import (
    Forest,
    Tree,
    attach_root,
    cut,
    leaf,
    tree_key,
    tree_max,
    tree_product,
)

__all__ = ["tree_divide", "forest_divide", "divide_children"]

_MISSING = object()


def tree_divide(b: Tree, a: Tree) -> Optional[Tree]:
    """The tree ``x`` of depth ``depth(b)`` with ``a * x = b``, or None."""
    if a.depth < b.depth:
        raise ValueError("divisor must be at least as deep as the dividend")
    with deep_recursion(b.depth):
        return _tree_divide(b, a)


def _tree_divide(b: Tree, a: Tree) -> Optional[Tree]:
    memo = b._div
    if memo is not None:
        hit = memo.get(a.uid, _MISSING)
        if hit is not _MISSING:
            return hit  # type: ignore[return-value]
    if b.depth == 0:
        x: Optional[Tree] = leaf()
    else:
        kids = divide_children(dict(b.kids), dict(a.kids))
        x = None if kids is None else attach_root(kids)
        if x is not None and (x.depth != b.depth or tree_product(a, x) is not b):
            x = None
    if b._div is None:
        b._div = {}
    b._div[a.uid] = x
    return x


def divide_children(fb: Mapping[Tree, int], fa: Mapping[Tree, int]) -> Optional[Forest]:
    """Forest ``X`` with ``fa * X = fb`` whose depth is at most ``depth(fb)``.

    Requires ``depth(fa) >= depth(fb)``; returns None when no such ``X``
    exists.
    """
    remaining: Dict[Tree, int] = {t: m for t, m in fb.items() if m}
    if not remaining:
        return {}
    if not fa:
        return None
    quotient: Forest = {}
    a_items = list(fa.items())
    while remaining:
        d = max(t.depth for t in remaining)
        deep_a = [a for a, _ in a_items if a.depth >= d]
        if not deep_a:
            return None
        a_top = tree_max({cut(a, d) for a in deep_a})
        top = sorted((t for t in remaining if t.depth == d), key=tree_key, reverse=True)
        for b_top in top:
            while remaining.get(b_top, 0):
                x = _tree_divide(b_top, a_top)
                if x is None:
                    return None
                for a, ma in a_items:
                    p = tree_product(a, x)
                    left = remaining.get(p, 0) - ma
                    if left < 0:
                        return None
                    if left:
                        remaining[p] = left
                    else:
                        del remaining[p]
                quotient[x] = quotient.get(x, 0) + 1
    return quotient


def forest_divide(fb: Mapping[Tree, int], fa: Mapping[Tree, int]) -> Optional[Forest]:
    """``X`` with ``fa * X = fb`` for forests of equal-depth trees, or None.

    Computed as ``D(tree_divide(R(fb), R(fa)))``.
    """
    if not fa:
        return {} if not fb else None
    ra, rb = attach_root(fa), attach_root(fb)
    if ra.depth < rb.depth:
        return None
    x = tree_divide(rb, ra)
    return None if x is None else {c: m for c, m in x.kids}
