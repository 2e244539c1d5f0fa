#!/usr/bin/env python3
# Truncation trees: the branching structure of principal closures.
from wstable import (
    WeightVector,
    format_monomial,
    parse_ideal,
    parse_monomial,
    tree_from_ideal,
    tree_from_monomial,
    w_closure,
)

# The tree of x2^2*x3 at weights (4, 2, 1) starts at 1 and appends variables;
# how far the branching reaches is controlled by truncations of the
# substituted image of the monomial.
m = parse_monomial("x2^2*x3", 3)
w = WeightVector((4, 2, 1))
tree = tree_from_monomial(m, w)
for line in tree.adjacency_lines():
    print(line)

# Sinks (no outgoing edges) are exactly the minimal generators of the closure.
sinks = {format_monomial(s) for s in tree.sinks()}
gens = {format_monomial(g) for g in w_closure([m], w).gens}
print("sinks == generators:", sinks == gens)

# A tree can also be grown from an ideal: vertices are the prefixes of the
# generators' factored forms.  Sinks recover the generators; subsinks (the
# vertices one step before a sink) matter for the principal cone.
ideal = parse_ideal("x^3, x^2*y, x*y^3, x*y^2*z")
gen_tree = tree_from_ideal(ideal)
print()
for line in gen_tree.adjacency_lines(lambda v: format_monomial(v, letters=True)):
    print(line)
print("subsinks:", sorted(format_monomial(s, True) for s in gen_tree.subsinks()))
