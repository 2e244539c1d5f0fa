"""Stanley decompositions, Hilbert series, Poincare series, and Betti numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .catalan import catalan_diagram
from .closure import _require_w_stable, w_borel_gens, w_closure, trunc_ideal
from .ideals import MonomialIdeal
from .monomials import (
    Monomial,
    WeightVector,
    max_index,
    psi,
    psi_inverse,
    truncate,
    weighted_degree,
)
from .trees import tree_from_monomial


# ---------------------------------------------------------------------------
# small sparse-polynomial helpers (dict degree -> coefficient)

def _poly_add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
        if out[k] == 0:
            del out[k]
    return out


def _poly_mul(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = ka + kb
            out[k] = out.get(k, 0) + va * vb
    return {k: v for k, v in out.items() if v}


def _poly_scale_shift(p, coeff, shift):
    return {k + shift: coeff * v for k, v in p.items()}


def format_univariate(p, var="t") -> str:
    """Render a sparse univariate polynomial, descending by degree."""
    if not p:
        return "0"
    parts = []
    for deg in sorted(p, reverse=True):
        c = p[deg]
        mag = _term_text(abs(c), ((var, deg),))
        if not parts:
            parts.append(mag if c > 0 else f"-{mag}")
        else:
            parts.append(f"+ {mag}" if c > 0 else f"- {mag}")
    return " ".join(parts)


def _term_text(coeff, powers):
    factors = []
    for var, exp in powers:
        if exp == 1:
            factors.append(var)
        elif exp != 0:
            factors.append(f"{var}^{exp}")
    if coeff != 1 or not factors:
        factors.insert(0, str(coeff))
    return "*".join(factors)


@lru_cache(maxsize=None)
def _weighted_counts(weights: tuple[int, ...], bound: int) -> tuple[int, ...]:
    """Number of exponent vectors of each weighted degree up to ``bound``."""
    counts = [0] * (bound + 1)
    counts[0] = 1
    for w in weights:
        for t in range(w, bound + 1):
            counts[t] += counts[t - w]
    return tuple(counts)


# ---------------------------------------------------------------------------
# Stanley decompositions

@dataclass(frozen=True)
class StanleyDecomposition:
    """A disjoint cover of the monomials outside an ideal.

    Each piece is a coset monomial together with the set of 1-based
    variable indices that may grow freely; the pieces partition the
    complement of the ideal.
    """

    nvars: int
    weights: WeightVector
    pieces: tuple[tuple[Monomial, frozenset[int]], ...]

    def count_monomials(self, wdeg: int) -> int:
        """Number of complement monomials of the given weighted degree."""
        total = 0
        for coset, free in self.pieces:
            rem = wdeg - weighted_degree(coset, self.weights)
            if rem < 0:
                continue
            free_weights = tuple(sorted(self.weights[j - 1] for j in free))
            total += _weighted_counts(free_weights, rem)[rem]
        return total


def stanley_decomposition(ideal: MonomialIdeal, w: WeightVector) -> StanleyDecomposition:
    """Decompose the complement of a weighted-stable ideal into free cosets.

    A principal closure is decomposed from its truncation tree: every
    interior vertex contributes a piece whose free variables are the
    branching indices it does not use.  Other ideals go through the
    truncation filtration of the substituted Borel closure.
    """
    _require_w_stable(ideal, w)
    n = ideal.nvars
    if ideal.is_zero():
        pieces = ((Monomial.unit(n), frozenset(range(1, n + 1))),)
        return StanleyDecomposition(n, w, pieces)

    bgens = w_borel_gens(ideal, w)
    if len(bgens) == 1:
        pieces = _principal_pieces(next(iter(bgens)), w)
    else:
        pieces = _filtration_pieces(ideal, w)
    return StanleyDecomposition(n, w, tuple(pieces))


def _principal_pieces(m: Monomial, w: WeightVector):
    tree = tree_from_monomial(m, w)
    bound = tree.degree_bound
    pieces = []
    for v in sorted(tree.vertices(), key=lambda u: (weighted_degree(u, w), u.exponents)):
        if weighted_degree(v, w) >= bound:
            continue
        taken = {max_index(c) for c in tree.children(v)}
        free = frozenset(j for j in range(max_index(v), m.nvars + 1) if j not in taken)
        pieces.append((v, free))
    return pieces


def _filtration_pieces(ideal: MonomialIdeal, w: WeightVector):
    n = ideal.nvars
    closed_image = w_closure([psi(g, w) for g in ideal.gens], WeightVector.ones(n))
    d = max(g.degree() for g in closed_image.gens)
    truncations = [trunc_ideal(closed_image, s) for s in range(d + 1)]
    pieces = []
    for s in range(d):
        for g in sorted(truncations[s].gens, key=lambda m: m.exponents):
            if g.degree() != s or closed_image.contains(g):
                continue
            u = psi_inverse(g, w)
            if u is None:
                continue
            free = frozenset(
                j for j in range(1, n + 1)
                if not truncations[s + 1].contains(g.times_variable(j)))
            pieces.append((u, free))
    return pieces


# ---------------------------------------------------------------------------
# Hilbert series

@dataclass(frozen=True, eq=False)
class HilbertSeries:
    """Hilbert series of the quotient by a weighted-stable ideal.

    ``numerator`` is a sparse polynomial over the common denominator
    ``prod_j (1 - t^{w_j})``.  For principal closures ``terms`` also
    records the structured form: triples (count, degree, column) meaning
    ``count * t^degree / prod_{j>column} (1 - t^{w_j})``.
    """

    weights: WeightVector
    numerator: dict
    terms: tuple[tuple[int, int, int], ...] | None = None

    @property
    def nvars(self) -> int:
        return self.weights.nvars

    def expansion(self, bound: int) -> list[int]:
        """Power-series coefficients of the normalized form up to ``bound``."""
        return self._expand(self.numerator, tuple(self.weights), bound)

    def expansion_from_terms(self, bound: int) -> list[int]:
        """Power-series coefficients computed from the structured terms."""
        if self.terms is None:
            raise ValueError("no structured term form is recorded")
        coeffs = [0] * (bound + 1)
        for c, s, k in self.terms:
            tail = tuple(self.weights[k:])
            piece = self._expand({s: c}, tail, bound)
            for t in range(bound + 1):
                coeffs[t] += piece[t]
        return coeffs

    @staticmethod
    def _expand(numerator, denom_weights, bound):
        counts = _weighted_counts(tuple(sorted(denom_weights)), bound)
        out = [0] * (bound + 1)
        for deg, c in numerator.items():
            if deg > bound:
                continue
            for t in range(deg, bound + 1):
                out[t] += c * counts[t - deg]
        return out

    def text(self) -> str:
        num = format_univariate(self.numerator)
        den = "*".join(f"(1 - t^{wj})" if wj != 1 else "(1 - t)" for wj in self.weights)
        return f"({num}) / ({den})"


def hilbert_series(ideal: MonomialIdeal, w: WeightVector) -> HilbertSeries:
    """Hilbert series of the quotient, graded by the weight vector.

    Principal closures use the Catalan diagram: row sums below the weighted
    degree give the term counts and the truncation indices give the free
    denominator blocks.  Other weighted-stable ideals sum the Stanley
    decomposition over the common denominator.
    """
    _require_w_stable(ideal, w)
    bgens = None if ideal.is_zero() else w_borel_gens(ideal, w)
    if bgens is not None and len(bgens) == 1:
        m = next(iter(bgens))
        diagram = catalan_diagram(m, w)
        image = psi(m, w)
        terms = []
        for s in range(diagram.degree):
            c = diagram.row_sum(s)
            if c:
                terms.append((c, s, max_index(truncate(image, s + 1))))
        numerator = {}
        for c, s, k in terms:
            block = {0: c}
            for j in range(k):
                block = _poly_mul(block, {0: 1, w[j]: -1})
            numerator = _poly_add(numerator, _poly_scale_shift(block, 1, s))
        return HilbertSeries(w, numerator, tuple(terms))

    decomposition = stanley_decomposition(ideal, w)
    numerator = {}
    for coset, free in decomposition.pieces:
        block = {0: 1}
        for j in range(1, w.nvars + 1):
            if j not in free:
                block = _poly_mul(block, {0: 1, w[j - 1]: -1})
        numerator = _poly_add(
            numerator, _poly_scale_shift(block, 1, weighted_degree(coset, w)))
    return HilbertSeries(w, numerator, None)


# ---------------------------------------------------------------------------
# Poincare series and Betti numbers

@dataclass(frozen=True, eq=False)
class PoincarePolynomial:
    """Graded Betti numbers as a sparse bivariate polynomial.

    ``coefficients`` maps (homological index i, internal degree j) to
    beta_{i,j}; index 1 corresponds to the minimal generators of the
    ideal.
    """

    coefficients: dict

    def beta(self, i: int, j: int) -> int:
        return self.coefficients.get((i, j), 0)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """Triples (i, j, coefficient), descending by degree then index."""
        return [(i, j, self.coefficients[(i, j)])
                for i, j in sorted(self.coefficients, key=lambda ij: (-ij[1], -ij[0]))]

    def at_u(self, value: int) -> dict:
        """Evaluate the homological variable, leaving a polynomial in t."""
        out = {}
        for (i, j), c in self.coefficients.items():
            out[j] = out.get(j, 0) + c * value ** i
        return {j: c for j, c in out.items() if c}

    def total(self, i: int) -> int:
        return sum(c for (k, _), c in self.coefficients.items() if k == i)

    def text(self) -> str:
        if not self.coefficients:
            return "0"
        parts = [_term_text(c, (("t", j), ("u", i))) for i, j, c in self.sorted_terms()]
        return " + ".join(parts)


def poincare_series(ideal: MonomialIdeal, w: WeightVector) -> PoincarePolynomial:
    """Generating function of the graded Betti numbers of a stable ideal.

    Each minimal generator of weighted degree d and maximal index q
    contributes ``u t^d`` times the product of ``1 + u t^{w_k}`` over
    k < q.  For principal closures the same polynomial is recomputed from
    the generator rows of the Catalan diagram as a consistency check.
    """
    _require_w_stable(ideal, w)
    coeffs = {}
    for g in ideal.gens:
        coeffs = _biv_add(coeffs, _generator_contribution(
            weighted_degree(g, w), max_index(g), w))
    result = PoincarePolynomial(coeffs)

    bgens = None if ideal.is_zero() else w_borel_gens(ideal, w)
    if bgens is not None and len(bgens) == 1:
        diagram = catalan_diagram(next(iter(bgens)), w)
        alt = {}
        for a in range(diagram.degree, len(diagram.rows)):
            for b in range(1, diagram.nvars + 1):
                q = diagram.entry(a, b)
                if q:
                    alt = _biv_add(alt, _generator_contribution(a, b, w, count=q))
        if alt != coeffs:
            raise AssertionError(
                "generator-sum and diagram forms of the Poincare series disagree")
    return result


def _generator_contribution(degree, maxidx, w, count=1):
    term = {(1, degree): count}
    for k in range(maxidx - 1):
        term = _biv_mul(term, {(0, 0): 1, (1, w[k]): 1})
    return term


def _biv_add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
        if out[k] == 0:
            del out[k]
    return out


def _biv_mul(a, b):
    out = {}
    for (ia, ja), va in a.items():
        for (ib, jb), vb in b.items():
            key = (ia + ib, ja + jb)
            out[key] = out.get(key, 0) + va * vb
    return {k: v for k, v in out.items() if v}


def betti_numbers(ideal: MonomialIdeal, w: WeightVector):
    """Total and graded Betti numbers of a weighted-stable ideal.

    Totals come from the binomial formula over generator maximal indices
    (independent of the weights); the graded table is the Poincare
    polynomial.  Returns ``(totals, graded)`` with ``totals[i-1]`` the
    rank of the i-th step, i = 1 corresponding to minimal generators.
    """
    _require_w_stable(ideal, w)
    n = ideal.nvars
    totals = tuple(
        sum(math.comb(max_index(g) - 1, i - 1) for g in ideal.gens)
        for i in range(1, n + 1))
    return totals, poincare_series(ideal, w)


def format_betti_table(poincare: PoincarePolynomial, nvars: int) -> str:
    """Betti table with rows indexed by j - i and a leading rank-one column.

    Column i >= 1 lists the ideal's i-th Betti numbers with i = 1 counting
    minimal generators; column 0 is the free cover of the quotient.  These
    columns coincide with the homological degrees of the quotient's
    resolution and sit one above the ideal-as-module convention.
    """
    entries = {(0, 0): 1}
    for (i, j), c in poincare.coefficients.items():
        entries[(j - i, i)] = c
    ncols = nvars + 1
    row_range = range(min(r for r, _ in entries), max(r for r, _ in entries) + 1)
    totals = [sum(c for (_, i), c in entries.items() if i == col) for col in range(ncols)]
    grid = {r: [entries.get((r, i), 0) for i in range(ncols)] for r in row_range}
    widths = [max(len(str(totals[i])), len(str(i)),
                  max(len(str(grid[r][i])) for r in row_range))
              for i in range(ncols)]
    label = max(max(len(str(r)) for r in row_range) + 1, len("total:"))
    lines = [" " * label + " " + " ".join(str(i).rjust(widths[i]) for i in range(ncols))]
    lines.append("total:".rjust(label) + " "
                 + " ".join(str(totals[i]).rjust(widths[i]) for i in range(ncols)))
    for r in row_range:
        cells = [str(grid[r][i]) if grid[r][i] else "." for i in range(ncols)]
        lines.append(f"{r}:".rjust(label) + " "
                     + " ".join(cells[i].rjust(widths[i]) for i in range(ncols)))
    return "\n".join(lines)
