#!/usr/bin/env python3
# Which weight vectors turn a strongly stable ideal into a principal closure?
from wstable import (
    WeightVector,
    cone_rays,
    constraint_system,
    format_monomial,
    parse_ideal,
    principal_weight_vector,
    w_closure,
)

# The candidate generator is the lex-smallest one; the generator tree yields
# linear conditions on the weights: sinks must reach the candidate's degree,
# subsinks must stay below it, and branching indices must match.
ideal = parse_ideal("x^3, x^2*y, x*y^3, x*y^2*z")
system = constraint_system(ideal)
print("candidate generator:", format_monomial(system.candidate, letters=True))
for hs in system.halfspaces:
    op = ">" if hs.strict else ">="
    print(f"  {hs.normal} . w {op} 0")

# Extreme rays of the closed cone of admissible weights:
cone = cone_rays(system)
print("rays:")
for ray in cone.rays:
    print("  ", ray)

# The sum of the rays lies in the strict region whenever that region is
# nonempty; the result is verified by recomputing the closure.
found = principal_weight_vector(ideal)
print("weight vector:", tuple(found))
assert w_closure([system.candidate], found) == ideal

# Some corner cuts are not principal closures for any weights: here z^4
# cannot generate y*z^2 without also generating y^2.
blocked = parse_ideal("x^2, x*y, x*z, y^3, y^2*z, y*z^2, z^4")
print("blocked ideal:", principal_weight_vector(blocked))

# Membership in the strict region is the exact test, point by point.
grid = [(a, b, c) for a in range(1, 5) for b in range(1, a + 1) for c in range(1, b + 1)]
good = [v for v in grid if system.open_region_contains(v)]
print(f"{len(good)} of {len(grid)} small lattice weight vectors realize the ideal;"
      f" e.g. {good[:4]}")
for v in good[:4]:
    assert w_closure([system.candidate], WeightVector(v)) == ideal
