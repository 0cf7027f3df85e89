from __future__ import annotations

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fdds.core import (
    Fdds,
    FddsError,
    canonical_form,
    cycle,
    empty,
    fdds_power,
    fixed_point,
    is_isomorphic,
    least_rotation,
    validate,
)

from conftest import brute_isomorphic, maps


def iso(a, b):
    return is_isomorphic(a, b)


class TestValidation:
    def test_out_of_range(self):
        with pytest.raises(FddsError):
            Fdds([0, 2])

    def test_mapping_input(self):
        assert validate({0: 1, 1: 0}) == cycle(2)
        with pytest.raises(FddsError, match="missing"):
            validate({0: 0, 2: 0}, 3)
        with pytest.raises(FddsError):
            validate({0: 0, 5: 0})

    def test_sequence_length_mismatch(self):
        with pytest.raises(FddsError):
            validate([0, 0], 3)

    def test_structural_equality(self):
        assert Fdds([1, 0]) == cycle(2)
        assert Fdds([0, 0]) != Fdds([1, 1])
        assert len({Fdds([1, 0]), cycle(2)}) == 1


class TestStructure:
    def test_components_of_mixed_system(self):
        # 2-cycle with a tail of length 2, plus a fixed point with one preimage
        a = Fdds([1, 0, 0, 2, 4, 4])
        assert len(a.components) == 2
        assert sorted(c.period for c in a.components) == [1, 2]
        assert a.alpha == 3
        assert a.depth == 2
        assert a.periodic == (True, True, False, False, True, False)

    def test_permutation_has_depth_zero(self):
        assert (cycle(3) + cycle(4)).depth == 0

    def test_empty(self):
        assert len(empty()) == 0 and empty().components == ()
        assert canonical_form(empty()) == b""


class TestArithmetic:
    def test_two_cycle_times_three_cycle_is_six_cycle(self):
        assert iso(cycle(2) * cycle(3), cycle(6))

    @given(st.integers(1, 8), st.integers(1, 8))
    def test_cycle_product_law(self, p, q):
        g = math.gcd(p, q)
        expected = empty()
        for _ in range(g):
            expected = expected + cycle(p * q // g)
        assert iso(cycle(p) * cycle(q), expected)

    @given(maps(0, 5), maps(0, 5))
    def test_commutative(self, a, b):
        assert iso(a + b, b + a)
        assert iso(a * b, b * a)

    @given(maps(1, 4), maps(1, 4), maps(1, 4))
    def test_associative_and_distributive(self, a, b, c):
        assert iso((a * b) * c, a * (b * c))
        assert iso((a + b) + c, a + (b + c))
        assert iso(a * (b + c), a * b + a * c)

    @given(maps(0, 6))
    def test_identities(self, a):
        assert iso(a * fixed_point(), a)
        assert iso(a + empty(), a)
        assert len(a * empty()) == 0

    @given(maps(1, 6), maps(1, 6))
    def test_counts_multiply(self, a, b):
        p = a * b
        assert len(p) == len(a) * len(b)
        assert p.alpha == a.alpha * b.alpha
        assert p.depth == max(a.depth, b.depth)

    def test_power(self):
        assert fdds_power(cycle(3), 0) == fixed_point()
        assert iso(cycle(2) ** 2, cycle(2) + cycle(2))
        with pytest.raises(ValueError):
            fdds_power(cycle(2), -1)


class TestCanonicalForm:
    @given(maps(1, 6), st.randoms(use_true_random=False))
    def test_invariant_under_relabelling(self, a, r):
        perm = list(range(len(a)))
        r.shuffle(perm)
        inv = {v: i for i, v in enumerate(perm)}
        b = Fdds([perm[a.succ[inv[i]]] for i in range(len(a))])
        assert canonical_form(a) == canonical_form(b)

    def test_agrees_with_permutation_search(self):
        r = random.Random(7)
        for _ in range(400):
            n = r.randint(1, 6)
            a = Fdds([r.randrange(n) for _ in range(n)])
            b = Fdds([r.randrange(n) for _ in range(n)])
            assert is_isomorphic(a, b) == brute_isomorphic(a, b)

    @given(maps(0, 8))
    def test_relabel_is_isomorphic_and_idempotent(self, a):
        c = a.canonical_relabel()
        assert iso(a, c)
        assert c.canonical_relabel() == c


@given(st.lists(st.integers(0, 2), max_size=12))
def test_least_rotation_matches_brute_force(seq):
    if not seq:
        assert least_rotation(seq) == 0
        return
    rots = [seq[i:] + seq[:i] for i in range(len(seq))]
    k = least_rotation(seq)
    assert rots[k] == min(rots)
