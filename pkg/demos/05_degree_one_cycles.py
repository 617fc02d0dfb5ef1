"""Degree-one polynomials are iterations of z -> (az+b)/(cz+d).

A standard (cx+d)y - (ax+b) walks every vertex to a single successor, so all
non-singular components are directed n-cycles (when the matrix [[a,b],[c,d]]
has finite projective order n) or infinite paths.  The symbolic n-cycle
conditions fall out of the recurrence U_1 = 1, U_2 = t, U_k = t U_{k-1} -
e U_{k-2} with t = a + d and e = ad - bc.
"""

import math

from polygraph import (
    Budget,
    Mobius,
    check_condition,
    classify,
    classify_deg1,
    cycle_condition,
    explore_component,
    mobius_inversion,
    mobius_rotation,
    cayley_mobius,
    explore_strong_component,
    parse,
    projective_order,
    reference_table_diff,
    to_poly,
)

print("cycle conditions (vanishing makes all components directed n-cycles):")
for n in range(2, 11):
    print(f"  n = {n:2d}: {cycle_condition(n)}")

print("\ndiff of the computed table against the published transcription:")
for n in range(2, 11):
    diff = reference_table_diff(n)
    if diff["matches"]:
        continue
    print(f"  n = {n}: computed {diff['computed_only']}"
          f" vs published {diff['published_only']}  (known misprint)")

print("\nthe worked six-cycle example, a = c = 1, b = -2+sqrt3, d = -1+sqrt3:")
s3 = math.sqrt(3.0)
m = Mobius(1.0, -2.0 + s3, 1.0, -1.0 + s3)
print(f"  satisfies the 6-cycle condition: {check_condition(m, 6)}")
print(f"  projective order: {projective_order(m)}")
phi = to_poly(m)
print(f"  classify_deg1: {classify_deg1(phi)}")
g = explore_component(phi, 0.8 + 0.3j, Budget(max_vertices=50, max_depth=15))
print(f"  a random component: {g.order} vertices, shape {classify(g)}")

print("\na translation never returns:")
print(f"  classify_deg1(y-x-1) = {classify_deg1(parse('y-x-1'))}")

print("\ndihedral Cayley digraph from Mobius generators f(z)=wz, t(z)=2/z:")
phi, seed = cayley_mobius([mobius_rotation(5), mobius_inversion(2)])
g = explore_strong_component(phi, seed, Budget(max_vertices=100, max_depth=30))
print(f"  Phi = {phi}")
print(f"  strong component of the sampled seed: {g.order} vertices"
      f" (= |D_10|), {len(g.arcs)} arcs, closed={not g.truncated}")
