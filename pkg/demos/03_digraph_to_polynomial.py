"""Realizing a target digraph as a strong component: the triangle.

Any finite strongly connected d-regular digraph embeds as a strong component
of some G(Phi): split the arcs into d spanning permutations, interpolate each
permutation on the vertex values, and multiply the factors y - L_i(x).
The weak component is usually infinite (in-neighbors proliferate), but the
strong component is exactly the digraph we asked for.
"""

from polygraph import (
    Budget,
    FiniteDigraph,
    classify,
    digraph_to_poly,
    explore_component,
    explore_strong_component,
    in_neighbors,
    interpolate_factor,
    one_factorization,
)

# the complete symmetric digraph K3 on vertex values 1, 2, 3
k3 = FiniteDigraph.on_integers(3, [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)])

factorization = one_factorization(k3)
print("1-factorization:")
for perm in factorization.factors:
    print(f"  {[(u + 1, v + 1) for u, v in enumerate(perm)]}")

for perm in factorization.factors:
    L = interpolate_factor(perm, k3.values)
    print(f"interpolant: {L}")

phi = digraph_to_poly(k3)
print(f"\nPhi = {phi}")

strong = explore_strong_component(phi, 1.0 + 0j)
print(f"strong component of 1: {strong.order} vertices, {len(strong.arcs)} arcs,"
      f" closed={not strong.truncated}, shape={classify(strong)}")

weak = explore_component(phi, 1.0 + 0j, Budget(max_depth=2, max_vertices=500))
print(f"weak component at depth 2: {weak.order} vertices,"
      f" truncated={weak.truncated} (the full component is infinite)")

print("\nfractional in-neighbors of the triangle vertices:")
for v in (1.0, 2.0, 3.0):
    ins = in_neighbors(phi, complex(v))
    print(f"  into {v:g}: {[f'{w:.6g}' for w, _ in ins]}")
