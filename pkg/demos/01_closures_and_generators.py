#!/usr/bin/env python3
# Weighted Borel closures and weighted Borel generators.
from wstable import (
    WeightVector,
    format_ideal,
    format_monomial,
    is_w_stable,
    parse_ideal,
    parse_monomial,
    w_borel_gens,
    w_closure,
)

# Work in two variables with weights (2, 1), so x1 has degree 2 and x2 degree 1.
w = WeightVector((2, 1))
ideal = parse_ideal("x1, x2^2", 2)

# The closure substitutes x_i -> y_i^{w_i}, takes the strongly stable closure
# there, and pulls back.  This ideal is already closed:
print("closure:", format_ideal(w_closure(ideal, w)))
print("stable: ", is_w_stable(ideal, w))

# Weighted Borel generators are the generators no other generator dominates.
# A single monomial can describe the whole ideal:
big = parse_ideal("x1^2, x1*x2^2, x2^4", 2)
print("weighted Borel generators:",
      [format_monomial(g) for g in w_borel_gens(big, w)])

# The same set of generators under different weights gives different closures.
m = parse_monomial("x1*x2*x3^2")
for weights in ((1, 1, 1), (3, 2, 1)):
    closed = w_closure([m], WeightVector(weights))
    print(f"closure of x1*x2*x3^2 at {weights}: {format_ideal(closed)}")

# Closures of unions are sums of closures, so everything reduces to the
# principal (single-monomial) case.
a = parse_monomial("x2^2", 3)
b = parse_monomial("x3^4", 3)
w3 = WeightVector((2, 2, 1))
assert w_closure([a], w3) + w_closure([b], w3) == w_closure([a, b], w3)
print("sum of closures equals closure of the union")
