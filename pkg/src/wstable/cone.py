"""Weight-vector cones deciding when a strongly stable ideal is a principal closure."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .closure import _require_w_stable, w_closure
from .ideals import MonomialIdeal
from .monomials import Monomial, WeightVector, max_index
from .trees import tree_from_ideal


@dataclass(frozen=True)
class HalfSpace:
    """A homogeneous linear condition ``normal . w >= 0`` (``> 0`` if strict)."""

    normal: tuple[int, ...]
    strict: bool = False

    def value(self, w) -> int:
        return sum(a * b for a, b in zip(self.normal, w))

    def holds(self, w, closed: bool = False) -> bool:
        v = self.value(w)
        return v >= 0 if (closed or not self.strict) else v > 0


@dataclass(frozen=True)
class ConstraintSystem:
    """Half-space description of the weight vectors realizing a principal closure.

    Contains the degree comparisons against sinks and subsinks of the
    generator tree, the branching conditions at interior vertices, and the
    monotonicity/positivity constraints that every weight vector satisfies.
    ``candidate`` is the lexicographically smallest generator, the only
    possible single closure generator.  ``trivially_empty`` marks a strict
    condition that degenerated to ``0 > 0``.
    """

    nvars: int
    halfspaces: tuple[HalfSpace, ...]
    candidate: Monomial
    trivially_empty: bool = False

    def open_region_contains(self, w) -> bool:
        """Membership with strict constraints honored."""
        if self.trivially_empty:
            return False
        return all(h.holds(w) for h in self.halfspaces)

    def closed_cone_contains(self, w) -> bool:
        """Membership in the closure (all constraints relaxed to non-strict)."""
        return all(h.holds(w, closed=True) for h in self.halfspaces)


@dataclass(frozen=True)
class Cone:
    """Extreme rays (primitive integer vectors) of a pointed rational cone."""

    rays: tuple[tuple[int, ...], ...]
    lineality: tuple[tuple[int, ...], ...] = ()


def constraint_system(ideal: MonomialIdeal) -> ConstraintSystem:
    """Half-space system for the weights making ``ideal`` a principal closure.

    Requires a strongly stable ideal with at least one generator.  Sinks of
    the generator tree must reach at least the weighted degree of the
    candidate, subsinks must stay strictly below it, and at every interior
    vertex the largest branching variable must match the truncation of the
    candidate's substituted image.  Vacuously true conditions are dropped.
    """
    n = ideal.nvars
    _require_w_stable(ideal, WeightVector.ones(n))
    if ideal.is_zero():
        raise ValueError("the zero ideal has no candidate generator")
    m = ideal.lex_smallest_gen()
    a = m.exponents
    tree = tree_from_ideal(ideal)
    sinks = tree.sinks()

    halfspaces: list[HalfSpace] = []
    trivially_empty = False

    def add(normal, strict):
        nonlocal trivially_empty
        normal = tuple(normal)
        if not any(normal):
            if strict:
                trivially_empty = True
            return
        hs = HalfSpace(normal, strict)
        if hs not in seen:
            seen.add(hs)
            halfspaces.append(hs)

    seen: set[HalfSpace] = set()
    by_exponents = lambda vs: sorted(vs, key=lambda v: v.exponents)

    for v in by_exponents(sinks):
        b = v.exponents
        add((bi - ai for ai, bi in zip(a, b)), strict=False)
    for u in by_exponents(tree.subsinks()):
        b = u.exponents
        add((ai - bi for ai, bi in zip(a, b)), strict=True)
    for u in by_exponents(tree.vertices() - sinks):
        b = u.exponents
        k = max(max_index(c) for c in tree.children(u))
        add((b[p] - a[p] if p < k - 1 else b[p] for p in range(n)), strict=False)
        add((a[p] - b[p] if p < k else -b[p] for p in range(n)), strict=True)
    for p in range(n - 1):
        add((1 if q == p else -1 if q == p + 1 else 0 for q in range(n)), strict=False)
    add((1 if q == n - 1 else 0 for q in range(n)), strict=True)

    return ConstraintSystem(n, tuple(halfspaces), m, trivially_empty)


# ---------------------------------------------------------------------------
# exact linear algebra helpers

def _primitive(vec) -> tuple[int, ...]:
    vec = tuple(vec)
    g = 0
    for v in vec:
        g = gcd(g, v)
    return tuple(v // g for v in vec) if g else vec


def _rank(rows) -> int:
    mat = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [v - factor * p for v, p in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _kernel_basis(rows, n):
    """Integer basis of the common kernel of the given row vectors."""
    mat = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [v - factor * p for v, p in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    basis = []
    free_cols = [c for c in range(n) if c not in pivots]
    for fc in free_cols:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][fc]
        lcm = 1
        for v in vec:
            lcm = lcm * v.denominator // gcd(lcm, v.denominator)
        basis.append(_primitive(int(v * lcm) for v in vec))
    return basis


def _monotone_seed(n):
    """Rays and normals of the cone of non-increasing non-negative vectors."""
    rays = [tuple(1 if q <= p else 0 for q in range(n)) for p in range(n)]
    normals = [tuple(1 if q == p else -1 if q == p + 1 else 0 for q in range(n))
               for p in range(n - 1)]
    normals.append(tuple(1 if q == n - 1 else 0 for q in range(n)))
    return rays, normals


def cone_rays(system: ConstraintSystem) -> Cone:
    """Extreme rays of the closed cone of a constraint system.

    Double description with exact integer arithmetic: the monotone
    non-negative cone seeds the ray set and each half-space is processed in
    turn, keeping non-negative rays and adding combinations of adjacent
    positive/negative pairs.  Adjacency is decided by the rank of the
    common tight constraints.  Rays come back primitive, deduplicated, in
    lexicographic descending order.
    """
    n = system.nvars
    rays, processed = _monotone_seed(n)
    for hs in system.halfspaces:
        a = hs.normal
        values = {r: hs.value(r) for r in rays}
        if all(v >= 0 for v in values.values()):
            processed.append(a)
            continue
        kept = [r for r in rays if values[r] >= 0]
        new = {r for r in kept}
        pos = [r for r in rays if values[r] > 0]
        neg = [r for r in rays if values[r] < 0]
        for rp in pos:
            for rn in neg:
                if not _adjacent(rp, rn, processed, n):
                    continue
                combo = _primitive(
                    values[rp] * x - values[rn] * y for x, y in zip(rn, rp))
                if any(combo):
                    new.add(combo)
        rays = sorted(new, reverse=True)
        processed.append(a)

    lineality = _kernel_basis([hs.normal for hs in system.halfspaces] + processed, n)
    return Cone(tuple(sorted(rays, reverse=True)), tuple(lineality))


def _adjacent(rp, rn, processed, n) -> bool:
    tight = [c for c in processed
             if sum(x * y for x, y in zip(c, rp)) == 0
             and sum(x * y for x, y in zip(c, rn)) == 0]
    return _rank(tight) == n - 2 if tight else n <= 2


def open_region_is_empty(system: ConstraintSystem) -> bool:
    """Decide emptiness of the strict region by Fourier-Motzkin elimination.

    Strictness is tracked through every combination step, so the answer is
    exact over the rationals; homogeneity then transfers it to lattice
    points.
    """
    if system.trivially_empty:
        return True
    constraints = {(hs.normal, hs.strict) for hs in system.halfspaces}
    # a strict and a non-strict copy of the same normal: the strict one wins
    constraints = {(nrm, st) for nrm, st in constraints
                   if st or (nrm, True) not in constraints}
    for pos_index in range(system.nvars):
        nxt = set()
        pos, neg = [], []
        for nrm, st in constraints:
            if nrm[pos_index] > 0:
                pos.append((nrm, st))
            elif nrm[pos_index] < 0:
                neg.append((nrm, st))
            else:
                nxt.add((nrm, st))
        for (np_, sp) in pos:
            for (nn, sn) in neg:
                combo = tuple(np_[pos_index] * b - nn[pos_index] * a
                              for a, b in zip(np_, nn))
                st = sp or sn
                if not any(combo):
                    if st:
                        return True
                    continue
                nxt.add((_primitive(combo), st))
        constraints = {(nrm, st) for nrm, st in nxt
                       if st or (nrm, True) not in nxt}
    return any(st for _, st in constraints)


def principal_weight_vector(ideal: MonomialIdeal, search_budget: int = 2000):
    """A verified weight vector realizing ``ideal`` as a principal closure.

    Returns ``None`` when no weight vector exists (the strict region is
    empty).  Otherwise the sum of the extreme rays of the closed cone is
    tried first, followed by a breadth-first search over further
    non-negative ray combinations; every candidate is verified by
    recomputing the closure of the candidate generator before being
    returned.
    """
    system = constraint_system(ideal)
    if open_region_is_empty(system):
        return None
    rays = cone_rays(system).rays
    if not rays:
        raise RuntimeError("strict region nonempty but the closed cone has no rays")

    base = tuple(sum(col) for col in zip(*rays))
    seen = set()
    frontier = [base]
    for _ in range(search_budget):
        if not frontier:
            break
        vec = frontier.pop(0)
        if vec in seen:
            continue
        seen.add(vec)
        frontier.extend(tuple(a + b for a, b in zip(vec, r)) for r in rays)
        if not system.open_region_contains(vec):
            continue
        w = WeightVector(vec)
        if w_closure([system.candidate], w) == ideal:
            return w
    raise RuntimeError(
        "strict region nonempty but no verified weight vector found "
        f"within the search budget ({search_budget} candidates)")
