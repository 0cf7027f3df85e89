"""
Dividing by a system
====================

Given A and B, look for a connected X with A x X = B.  The search works on
finite cuts of the unrolls (the infinite trees of iterated preimages), then
rolls a candidate back into a system and checks it by multiplication.
"""

import random

from fdds import cycle, divide_connected, is_isomorphic
from fdds.core import Fdds
from fdds.sampling import random_connected, random_fdds
from fdds.unroll import cut_unroll, required_depth
from fdds.trees import bracket

rng = random.Random(1)
a = random_fdds(6, rng)
x = random_connected(8, rng)
b = a * x
print(f"|A| = {len(a)}, |X| = {len(x)}, |B| = {len(b)}")

# The cut depth that decides divisibility depends on the number of cycle
# nodes of B and on its depth.
n = required_depth(b)
print("cut depth:", n, "-- trees in the cut unroll of B:", cut_unroll(b, n).alpha)

out = divide_connected(a, b)
print("status:", out.status.value, "-- recovered X:", is_isomorphic(out.result, x))

# Unrolls cannot tell two fixed points from a 2-cycle, so the final
# multiplication check is what rejects this one.
two_points = Fdds([0, 1])
print("unroll of C2 at depth 3:", [bracket(t) for t in cut_unroll(cycle(2), 3).trees()])
print("two fixed points / C2:", divide_connected(two_points, cycle(2)).info["reason"])
