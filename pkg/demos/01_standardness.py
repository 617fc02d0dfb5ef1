"""Standardness of a polynomial and its singular vertices.

The digraph of Phi(x,y) has an arc u -> v whenever Phi(u,v) = 0.  Before the
digraph has usable structure, Phi must be *standard*: nonconstant, without
universal vertices, radical in both variables, and not vanishing on the whole
diagonal.  This walk-through diagnoses a few polynomials and prints where
their loops, multiple arcs and defective vertices sit.
"""

from polygraph import analyze, parse, singular_inventory, standardize

examples = [
    "(y-x)^4 - 1",        # the Gaussian-integer grid: standard, no singularities
    "(y-x)^2",            # repeated factor: not radical
    "y - x",              # vanishes on the diagonal: loop at every vertex
    "(x-1)*y + x - 1",    # (x-1)(y+1): x = 1 is a universal source
    "x^2 + x*y + y^2",    # homogeneous: a double loop at the origin
    "x*y^2 - y - x",      # leading y-coefficient x drops degree at x = 0
]

for text in examples:
    phi = parse(text)
    report = analyze(phi)
    print(f"Phi = {text}")
    print(f"  standard: {report.is_standard}"
          + (f"  (failures: {', '.join(str(f) for f in report.failure_reasons)})"
             if report.failure_reasons else ""))
    print(f"  A = {report.A}   B = {report.B}")
    print(f"  D = {report.D}")
    print(f"  E = {report.E}")
    print(f"  L = {report.L}")
    if report.is_standard:
        inv = singular_inventory(phi, report)
        if inv.is_empty():
            print("  no singular vertices")
        else:
            if inv.loops:
                print(f"  loops: {[(f'{v:.4g}', m) for v, m in inv.loops]}")
            if inv.multi_arc_origins:
                print(f"  multiple-arc origins: {[f'{v:.4g}' for v in inv.multi_arc_origins]}")
            if inv.out_defective:
                print(f"  out-defective: {[f'{v:.4g}' for v in inv.out_defective]}")
    print()

# A non-standard polynomial can often be repaired: take the radical and strip
# y-x factors.  The steps come back as a machine-readable log.
phi = parse("(y-x)^2*((y-x)^2-1)")
fixed, steps = standardize(phi)
print(f"standardize({phi}):")
print(f"  -> {fixed}")
print(f"  steps: {[(s.kind.value, s.count) for s in steps]}")
