from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fdds.core import Fdds, cycle, empty, fdds_power, fdds_product, fixed_point, is_isomorphic
from fdds.oracle import brute_divide, brute_forest_root, brute_root
from fdds.sampling import random_connected, random_fdds, random_forest
from fdds.solvers import (
    Status,
    all_roots,
    check_periods,
    divide_connected,
    max_root_exponent,
    root_connected,
    root_forest,
    solve_axk,
    solve_component_extremal,
    unroll_divide,
)
from fdds.trees import forest_power, forest_product, forest_size, leaf, path, tree_from_code
from fdds.unroll import cut_unroll

from conftest import connected_maps, forests, maps

SYMMETRIC = Fdds([1, 0, 0, 1])  # 2-cycle carrying one leaf on each cycle node


def assert_sound(outcome, target, lhs):
    if outcome.found:
        assert is_isomorphic(outcome.certificate, target)
        assert is_isomorphic(lhs(outcome.result), target)


class TestDivideConnected:
    @given(connected_maps(8))
    def test_fixed_point_divisor(self, b):
        out = divide_connected(fixed_point(), b)
        assert out.found and is_isomorphic(out.result, b)

    def test_roundtrip(self):
        r = random.Random(11)
        for _ in range(60):
            a = random_fdds(r.randint(1, 15), r)
            x = random_connected(r.randint(1, 15), r)
            out = divide_connected(a, a * x)
            assert out.status is Status.FOUND
            assert is_isomorphic(out.result, x)
            assert is_isomorphic(out.certificate, a * x)

    def test_verification_rejects_unroll_only_quotient(self):
        # two fixed points and a 2-cycle have the same unroll
        a, b = Fdds([0, 1]), cycle(2)
        out = divide_connected(a, b)
        assert out.status is Status.NOT_DIVISIBLE
        assert out.info["reason"] == "verification failed"
        assert brute_divide(a, b, connected=True) == []

    def test_cycle_example(self):
        out = divide_connected(cycle(2), cycle(6))
        assert out.found and is_isomorphic(out.result, cycle(3))

    def test_degenerate_inputs(self):
        assert divide_connected(empty(), empty()).found
        assert divide_connected(empty(), cycle(1)).status is Status.NOT_DIVISIBLE
        assert divide_connected(cycle(1), empty()).status is Status.NOT_DIVISIBLE

    @given(maps(1, 4), maps(1, 8))
    def test_sound(self, a, b):
        out = divide_connected(a, b)
        assert_sound(out, b, lambda x: a * x)


class TestRootForest:
    @given(st.integers(0, 6), st.integers(1, 5))
    def test_path_is_its_own_root(self, d, k):
        assert root_forest({path(d): 1}, k) == {path(d): 1}

    def test_power_roundtrip(self):
        r = random.Random(3)
        for _ in range(80):
            f = random_forest(r.randint(1, 4), 4, r)
            if forest_size(f) > 12:
                continue
            for k in (2, 3):
                assert root_forest(forest_power(f, k), k) == f

    @given(forests(3, 4), st.sampled_from([2, 3]))
    def test_agrees_with_brute_force(self, f, k):
        a = forest_power(f, k)
        if forest_size(a) <= 40:
            brute = brute_forest_root(a, k) if sum(1 for _ in a) and forest_size(f) <= 9 else None
            if brute is not None:
                assert brute == [f]
        assert root_forest(a, k) == f

    def test_level_of_three_has_no_square_root(self):
        a = {tree_from_code([3, 0, 0, 0]): 1}
        assert root_forest(a, 2) is None
        assert brute_forest_root(a, 2) == []

    def test_exponent_bound(self):
        a = {tree_from_code([1, 2, 0, 0]): 1}  # 4 nodes, so k <= 2
        assert max_root_exponent(4) == 2
        assert root_forest(a, 3) is None
        with pytest.raises(ValueError):
            root_forest(a, 0)

    def test_k_one(self):
        f = {path(2): 1, leaf(): 2}
        assert root_forest(f, 1) == f

    def test_empty(self):
        assert root_forest({}, 2) == {}


class TestAllRoots:
    def test_fourth_power_has_square_and_fourth_roots(self):
        base = {tree_from_code([2, 1, 0, 0]): 1, path(2): 1}
        a = forest_power(base, 4)
        found = dict(all_roots(a))
        assert found[4] == base
        assert found[2] == forest_power(base, 2)

    def test_path_has_every_root(self):
        a = {path(9): 1}
        assert [k for k, _ in all_roots(a)] == list(range(2, max_root_exponent(10) + 1))

    def test_no_exponent_beyond_bound(self):
        a = forest_power({tree_from_code([2, 0, 0]): 1}, 2)
        assert all(k <= max_root_exponent(forest_size(a)) for k, _ in all_roots(a))


class TestRootConnected:
    def test_roundtrip(self):
        r = random.Random(5)
        for _ in range(25):
            x = random_connected(r.randint(1, 12), r)
            out = root_connected(x**2, 2)
            assert out.found and is_isomorphic(out.result, x)

    def test_two_cycle_has_no_square_root(self):
        assert root_connected(cycle(2), 2).status is Status.NOT_DIVISIBLE
        assert brute_root(cycle(2), 2, connected=True) == []

    @pytest.mark.parametrize("k", [1, 2, 3, 5])
    def test_fixed_point(self, k):
        out = root_connected(fixed_point(), k)
        assert out.found and out.result == fixed_point()

    def test_cube(self):
        x = Fdds([1, 2, 0, 0])
        out = root_connected(x**3, 3)
        assert out.found and is_isomorphic(out.result, x)

    def test_disconnected_k_one(self):
        assert not root_connected(cycle(2) + cycle(1), 1).found
        assert root_connected(empty(), 2).found


class TestSolveAxk:
    @given(maps(1, 4), connected_maps(5))
    def test_k_one_is_division(self, a, x):
        b = a * x
        assert solve_axk(a, b, 1).found == divide_connected(a, b).found

    def test_roundtrip(self):
        r = random.Random(8)
        done = 0
        while done < 30:
            a = random_fdds(r.randint(1, 4), r)
            x = random_connected(r.randint(1, 4), r)
            b = a * x * x
            if len(b) > 60:
                continue
            out = solve_axk(a, b, 2)
            assert out.found and is_isomorphic(out.result, x)
            done += 1

    @given(maps(1, 6), st.integers(1, 4))
    def test_equal_sides_give_fixed_point(self, a, k):
        out = solve_axk(a, a, k)
        assert out.found and is_isomorphic(out.result, fixed_point())

    def test_exponent_above_log_bound(self):
        a = cycle(1)
        b = Fdds([0, 0, 1, 2, 3])
        out = solve_axk(a, b, 3)
        assert out.status is Status.NOT_DIVISIBLE

    def test_empty(self):
        assert solve_axk(empty(), empty(), 2).found
        assert not solve_axk(empty(), cycle(1), 2).found


class TestUnrollDivide:
    def test_roundtrip_with_cut_certificate(self):
        r = random.Random(13)
        for _ in range(40):
            a = random_fdds(r.randint(1, 6), r)
            y = random_fdds(r.randint(1, 6), r)
            b = a * y
            out = unroll_divide(a, b)
            assert out.found
            n = out.info["n"]
            sol = out.result
            assert forest_product(cut_unroll(a, n).forest, cut_unroll(sol, n).forest) == cut_unroll(b, n).forest

    @given(maps(1, 6))
    def test_equal_sides(self, a):
        out = unroll_divide(a, a)
        assert out.found and is_isomorphic(out.result, fixed_point())

    def test_not_divisible(self):
        assert not unroll_divide(cycle(1) + cycle(1), cycle(3)).found
        assert not unroll_divide(empty(), cycle(1)).found
        assert unroll_divide(empty(), empty()).found

    def test_period_check(self):
        a, x = leaf(), path(1)
        assert check_periods([a], [x], {a: 2, x: 4}) is None
        assert check_periods([a], [x], {a: 2, x: 3}) == "period of a * x not a multiple of period of a"
        assert check_periods([a], [x], {a: 2}) == "a * x is not a tree of the dividend"

    def test_pieces_have_compatible_periods(self):
        a = cycle(2)
        y = cycle(3) + Fdds([1, 0, 0])
        out = unroll_divide(a, a * y)
        for piece in out.info["components"]:
            assert piece.is_connected()


class TestComponentExtremal:
    @given(maps(1, 3), connected_maps(5))
    def test_connected_quotient(self, a, x):
        b = a * x
        expected = divide_connected(a, b)
        for mode in ("minimal", "maximal"):
            out = solve_component_extremal(a, b, mode)
            if out.found:
                assert is_isomorphic(out.certificate, b)
        if expected.found:
            assert solve_component_extremal(a, b, "maximal").found or solve_component_extremal(a, b, "minimal").found

    def test_maximal_recovers_isomorphic_copies(self):
        x = Fdds([0, 0]) + Fdds([0, 0])
        a = Fdds([0, 0, 1])
        out = solve_component_extremal(a, a * x, "maximal")
        assert out.found and is_isomorphic(out.result, x)
        assert solve_component_extremal(a, a * x, "minimal").status is Status.NOT_DIVISIBLE

    def test_minimal_recovers_symmetric_component(self):
        out = solve_component_extremal(fixed_point(), SYMMETRIC, "minimal")
        assert out.found and is_isomorphic(out.result, SYMMETRIC)
        assert solve_component_extremal(fixed_point(), SYMMETRIC, "maximal").status is Status.NOT_DIVISIBLE

    def test_intermediate_multiplicity_is_not_supported(self):
        b = SYMMETRIC + SYMMETRIC
        for mode in ("minimal", "maximal"):
            assert solve_component_extremal(fixed_point(), b, mode).status is Status.NOT_SUPPORTED

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            solve_component_extremal(cycle(1), cycle(1), "median")

    def test_not_divisible_propagates(self):
        assert solve_component_extremal(cycle(1) + cycle(1), cycle(3)).status is Status.NOT_DIVISIBLE


@given(maps(1, 3), maps(1, 3), st.integers(1, 2))
def test_every_found_answer_is_verified(a, x, k):
    b = a * fdds_power(x, k)
    out = solve_axk(a, b, k)
    assert_sound(out, b, lambda r: fdds_product(a, fdds_power(r, k)))
