"""
Sums and products of dynamical systems
======================================

A finite dynamical system is a map from a finite set to itself.  Adding two
systems runs them side by side; multiplying runs them in lockstep.
"""

from fdds import Fdds, cycle, fixed_point, is_isomorphic
from fdds.fileformat import format_fdds, to_dot

# A system is given by its successor list: node i goes to succ[i].
c2 = cycle(2)
c3 = cycle(3)
tail = Fdds([1, 0, 0, 2])  # a 2-cycle with a path of two nodes hanging on it

print("C2 + C3 has", len(c2 + c3), "nodes and", len((c2 + c3).components), "components")

# Cycles multiply by gcd/lcm: C2 x C3 is a single 6-cycle, C2 x C2 is two 2-cycles.
print("C2 x C3 connected:", (c2 * c3).is_connected())
print("C2 x C2 components:", [c.period for c in (c2 * c2).components])

# The fixed point is the multiplicative identity (up to isomorphism).
print("tail x C1 is tail:", is_isomorphic(tail * fixed_point(), tail))

# Products distribute over sums.
lhs = tail * (c2 + c3)
rhs = tail * c2 + tail * c3
print("distributive:", is_isomorphic(lhs, rhs))

# Canonical text form: relabelled so isomorphic systems print identically.
print(format_fdds(tail * c2), end="")
print(to_dot(c3), end="")
