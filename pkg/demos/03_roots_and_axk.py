"""
Roots and the equation A X^k = B
================================

Roots are found on forests first: trees of a k-th power are peeled off from
the deepest and smallest, each one either a fresh root tree or a quotient by a
known one.
"""

import random

from fdds import all_roots, fdds_power, is_isomorphic, root_connected, root_forest, solve_axk
from fdds.sampling import random_connected, random_fdds, random_forest
from fdds.trees import bracket, forest_power, forest_size

rng = random.Random(7)

f = random_forest(3, 5, rng)
square = forest_power(f, 2)
print("forest:", sorted(bracket(t) for t in f), "->", forest_size(square), "nodes squared")
print("square root recovered:", root_forest(square, 2) == f)
print("exponents with a root of f^4:", [k for k, _ in all_roots(forest_power(f, 4))])

x = random_connected(5, rng)
out = root_connected(fdds_power(x, 3), 3)
print("cube root of X^3 is X:", is_isomorphic(out.result, x))

a = random_fdds(4, rng)
b = a * fdds_power(x, 2)
out = solve_axk(a, b, 2)
print("A X^2 = B solved:", out.status.value, is_isomorphic(out.result, x))
