"""Exploring the Gaussian-integer grid  Phi = (y-x)^4 - 1.

The roots of s^4 = 1 are {1, -1, i, -i}, so from any vertex u the arcs go to
u + 1, u - 1, u + i, u - i: the digraph is the Cayley digraph of (C, +) with
those four generators, and the component of 0 is the unit grid.  Components
here are infinite, so exploration is budgeted and reports truncation.
"""

from polygraph import Budget, classify, explore_component, export, parse

phi = parse("(y-x)^4 - 1")

for depth in (1, 2, 3):
    g = explore_component(phi, 0j, Budget(max_depth=depth))
    print(f"depth {depth}: {g.order} vertices, {len(g.arcs)} arcs, "
          f"truncated={g.truncated}, shape={classify(g)}")

g = explore_component(phi, 0j, Budget(max_depth=2))
print("\nvertices at depth <= 2 (Gaussian integers with |a|+|b| <= 2):")
print(sorted((round(v.real), round(v.imag)) for _, v in g.vertices))

print("\nDOT output for the depth-1 ball:")
print(export(explore_component(phi, 0j, Budget(max_depth=1)), "dot").decode())
