from __future__ import annotations

import pytest
from hypothesis import assume, given

from fdds.division import divide_children, forest_divide, tree_divide
from fdds.trees import (
    attach_root,
    cut,
    cut_forest,
    forest_depth,
    forest_product,
    leaf,
    path,
    tree_from_code,
    tree_product,
)

from conftest import forests, trees


class TestTreeDivide:
    @given(trees(12), trees(12))
    def test_recovers_quotient(self, a, x):
        assume(x.depth <= a.depth)
        assert tree_divide(tree_product(a, x), a) is x

    @given(trees(10), trees(10), trees(10))
    def test_cancellation(self, a, x, y):
        x, y = cut(x, a.depth), cut(y, a.depth)
        if tree_product(a, x) is tree_product(a, y):
            assert x is y

    def test_leaf_divides_into_leaf(self):
        assert tree_divide(leaf(), path(3)) is leaf()

    def test_not_divisible(self):
        three = tree_from_code([3, 0, 0, 0])
        two = tree_from_code([2, 0, 0])
        assert tree_divide(three, two) is None

    def test_divisor_too_shallow(self):
        with pytest.raises(ValueError):
            tree_divide(path(3), path(1))

    def test_deep_paths_do_not_hit_recursion_limit(self):
        p = path(5000)
        assert tree_divide(p, p) is p


class TestForestDivide:
    def test_mixed_depth_divisor(self):
        # the largest divisor tree is shallow; the quotient must come from the deep one
        star = tree_from_code([3, 0, 0, 0])
        fa = {path(3): 1, star: 1}
        fb = forest_product(fa, {path(2): 1})
        assert fb == {path(2): 1, star: 1}
        assert divide_children(fb, fa) == {path(2): 1}

    @given(forests(4, 7), forests(3, 7))
    def test_recovers_quotient(self, fa, fx):
        fx = cut_forest(fx, forest_depth(fa))
        fb = forest_product(fa, fx)
        assert divide_children(fb, fa) == fx

    @given(forests(3, 7), forests(3, 7))
    def test_forest_divide_roundtrip(self, fa, fx):
        d = min(forest_depth(fa), forest_depth(fx))
        fa, fx = cut_forest(fa, d), cut_forest(fx, d)
        assert forest_divide(forest_product(fa, fx), fa) == fx

    def test_empty_operands(self):
        assert forest_divide({}, {}) == {}
        assert forest_divide({}, {leaf(): 1}) == {}
        assert forest_divide({leaf(): 1}, {}) is None
        assert divide_children({leaf(): 1}, {}) is None

    def test_rejects_non_multiple(self):
        fa = {path(2): 2}
        assert forest_divide({path(2): 3}, fa) is None
        assert forest_divide({path(3): 1}, {path(1): 1}) is None

    def test_quotient_through_attach_root(self):
        fa = {tree_from_code([2, 1, 0, 0]): 1}
        fx = {path(2): 2}
        x = tree_divide(attach_root(forest_product(fa, fx)), attach_root(fa))
        assert x is attach_root(fx)
