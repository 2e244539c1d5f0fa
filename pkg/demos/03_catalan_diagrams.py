#!/usr/bin/env python3
# Weighted Catalan diagrams: counting tree vertices and closure generators.
from wstable import (
    WeightVector,
    catalan_diagram,
    generator_stats,
    max_index,
    parse_monomial,
    w_closure,
    weighted_degree,
)

m = parse_monomial("x1*x2^3*x3^2")
w = WeightVector((3, 2, 1))

# Row a counts by weighted degree, column b by maximal variable index.
diagram = catalan_diagram(m, w)
for line in diagram.text_lines():
    print(line)

# Rows below the weighted degree of m count interior tree vertices; their row
# sums are the coefficients of the Hilbert series terms.
print("row sums:", [diagram.row_sum(s) for s in range(diagram.degree)])

# Rows at and above the weighted degree count minimal generators of the
# closure by (weighted degree, maximal index).
print("generator stats:", generator_stats(diagram))

counted = {}
for g in w_closure([m], w).gens:
    key = (weighted_degree(g, w), max_index(g))
    counted[key] = counted.get(key, 0) + 1
print("recount from the closure:", sorted(counted.items()))
