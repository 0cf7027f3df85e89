"""
Division of unrolls and disconnected quotients
==============================================

When X may have several components, the cut quotient is split into pieces:
take the smallest remaining tree, read its periodic pattern, roll it, and
remove everything that roll accounts for.
"""

from fdds import Fdds, fixed_point, unroll_divide, solve_component_extremal
from fdds.unroll import cut_unroll
from fdds.trees import forest_product

a = Fdds([1, 0, 0])            # 2-cycle with one leaf
y = Fdds([1, 2, 0, 0]) + Fdds([0, 0])
b = a * y

out = unroll_divide(a, b)
n = out.info["n"]
print("pieces:", [len(p) for p in out.info["components"]], "at cut depth", n)
certified = forest_product(cut_unroll(a, n).forest, cut_unroll(out.result, n).forest) == cut_unroll(b, n).forest
print("cut certificate holds:", certified)

# A 2-cycle with a leaf on each node has the same unroll as two copies of a
# fixed point with one leaf.  The two extreme shapes tell them apart.
sym = Fdds([1, 0, 0, 1])
for mode in ("minimal", "maximal"):
    res = solve_component_extremal(fixed_point(), sym, mode)
    print(mode, "->", res.status.value)

# Two such components sit strictly between the extremes.
print("sym + sym:", solve_component_extremal(fixed_point(), sym + sym, "minimal").status.value)
