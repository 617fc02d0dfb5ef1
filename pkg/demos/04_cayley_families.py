"""Cayley digraphs on (C, +) and (C*, .) and the named families.

Additive generators S give Phi = prod (y - x - s); multiplicative generators
give the homogeneous prod (y - s x).  Complete graphs, complete bipartite
graphs, circulants, prisms and dihedral Cayley digraphs all arise this way,
and several have exact integer polynomials:

    complete(n):  x^{n-1} + x^{n-2} y + ... + y^{n-1}   (= (y^n - x^n)/(y - x))
    bipartite(d): x^d + y^d
"""

from polygraph import (
    Budget,
    bipartite_poly,
    cayley_additive,
    circulant_poly,
    classify,
    complete_graph_poly,
    dihedral_poly,
    explore_component,
    prism_poly,
    probe_conjecture,
    recognize_form,
)
from polygraph.scalars import GaussRat

budget = Budget(max_vertices=100, max_depth=25)

print("additive Cayley on S = {1, -1, i, -i}:")
phi = cayley_additive(
    [GaussRat.of(1), GaussRat.of(-1), GaussRat.of(0, 1), GaussRat.of(0, -1)]
)
print(f"  Phi = {phi}")
print(f"  recognized form: {recognize_form(phi).form.value},"
      f" profile {recognize_form(phi).profile}")

print("\nnamed families, explored from a generic seed:")
families = [
    ("complete(3)", complete_graph_poly(3)),
    ("complete(5)", complete_graph_poly(5)),
    ("bipartite(2)", bipartite_poly(2)),
    ("bipartite(3)", bipartite_poly(3)),
    ("circulant(6, {1})", circulant_poly(6, (1,))),
    ("circulant(5, {1,2})", circulant_poly(5, (1, 2))),
    ("prism(4)  [the cube]", prism_poly(4)),
    ("dihedral(3)", dihedral_poly(3)),
]
for name, phi in families:
    g = explore_component(phi, 1.1 + 0.4j, budget)
    print(f"  {name:22s} order {g.order:3d}  closed={not g.truncated}"
          f"  shape={classify(g)}")

print("\nprobing complete(4) on 8 random seeds:")
result = probe_conjecture(complete_graph_poly(4), n_seeds=8, budget=budget, rng_seed=1)
print(f"  labels: {sorted({str(l) for l in result.labels})}")
print(f"  all isomorphic: {result.all_isomorphic}")
