#!/usr/bin/env python3
# Stanley decompositions, Hilbert series, Poincare series, Betti numbers.
from wstable import (
    WeightVector,
    betti_numbers,
    format_betti_table,
    format_monomial,
    hilbert_series,
    parse_monomial,
    poincare_series,
    stanley_decomposition,
    w_closure,
)

w = WeightVector((3, 2, 1))
m = parse_monomial("x1*x2*x3^2")
ideal = w_closure([m], w)

# The Stanley decomposition splits the quotient into shifted free pieces:
# a coset monomial times a polynomial ring on its free variables.
decomposition = stanley_decomposition(ideal, w)
for coset, free in decomposition.pieces:
    names = ", ".join(f"x{j}" for j in sorted(free))
    print(f"{format_monomial(coset)} * K[{names}]")

# The Hilbert series comes out normalized over prod_j (1 - t^{w_j}); for a
# principal closure it also has a structured form read off the Catalan rows.
series = hilbert_series(ideal, w)
print("\nHilbert series:", series.text())
print("structured terms (count, degree, column):", series.terms)
print("first coefficients:", series.expansion(12))

# Graded Betti numbers come from one product per generator.
poincare = poincare_series(ideal, w)
print("\nPoincare series:", poincare.text())

totals, graded = betti_numbers(ideal, w)
print("total Betti numbers:", totals)
print(format_betti_table(graded, 3))

# The alternating-sign evaluation of the Poincare series recovers the
# Hilbert numerator: N(t) = 1 + P(-1, t).
signed = poincare.at_u(-1)
signed[0] = signed.get(0, 0) + 1
assert {j: c for j, c in signed.items() if c} == series.numerator
print("numerator identity verified")

# Different weights change the grading but not the total Betti numbers.
ones = WeightVector.ones(3)
totals_ones, _ = betti_numbers(w_closure([m], w), ones)
print("totals under the standard grading of the same ideal:", totals_ones)
