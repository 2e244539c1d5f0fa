"""Truncation trees of monomials and generator trees of ideals."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .ideals import MonomialIdeal
from .monomials import (
    Monomial,
    WeightVector,
    _check_nvars,
    factored_indices,
    max_index,
    psi,
    truncate,
    weighted_degree,
)


@dataclass(frozen=True)
class TruncationTree:
    """A rooted tree of monomials with edges that append one variable.

    Every non-root vertex has exactly one parent, and an edge from ``v``
    appends a variable of index at least ``max_index(v)``, so each vertex's
    factored form is the path from the root.  ``degree_bound`` records the
    weighted-degree bound used during construction (None for generator
    trees of ideals, which are not degree-bounded).
    """

    root: Monomial
    edges: frozenset[tuple[Monomial, Monomial]]
    degree_bound: int | None = None
    _children: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        children: dict[Monomial, list[Monomial]] = {self.root: []}
        for parent, child in self.edges:
            children.setdefault(parent, []).append(child)
            children.setdefault(child, [])
        for kids in children.values():
            kids.sort(key=lambda m: m.exponents, reverse=True)
        object.__setattr__(self, "_children", children)

    @property
    def nvars(self) -> int:
        return self.root.nvars

    def vertices(self) -> set[Monomial]:
        return set(self._children)

    def children(self, v: Monomial) -> list[Monomial]:
        """Children of ``v``, ordered by the index of the appended variable."""
        return list(self._children[v])

    def sinks(self) -> set[Monomial]:
        """Vertices with no outgoing edges."""
        return {v for v, kids in self._children.items() if not kids}

    def subsinks(self) -> set[Monomial]:
        """Vertices with an edge into a sink."""
        sinks = self.sinks()
        return {v for v, kids in self._children.items() if any(c in sinks for c in kids)}

    def bfs_vertices(self) -> list[Monomial]:
        """All vertices in breadth-first order starting at the root."""
        order = []
        queue = deque([self.root])
        while queue:
            v = queue.popleft()
            order.append(v)
            queue.extend(self._children[v])
        return order

    def adjacency_lines(self, fmt=None) -> list[str]:
        """One ``vertex: child child ...`` line per vertex, breadth first."""
        if fmt is None:
            from .parsing import format_monomial
            fmt = format_monomial
        lines = []
        for v in self.bfs_vertices():
            kids = " ".join(fmt(c) for c in self._children[v])
            lines.append(f"{fmt(v)}: {kids}".rstrip())
        return lines


def tree_from_monomial(m: Monomial, w: WeightVector, bound: int | None = None) -> TruncationTree:
    """The branching tree of the principal weighted closure of ``m``.

    Starting at the unit monomial, a vertex ``v`` below the weighted-degree
    bound branches to ``v * x_j`` for every ``j`` from ``max_index(v)`` up
    to the maximal index of the appropriate truncation of the substituted
    image of ``m``.  With the default bound (the weighted degree of ``m``)
    the sinks are exactly the minimal generators of the closure.
    """
    _check_nvars(m, w)
    if bound is None:
        bound = weighted_degree(m, w)
    image = psi(m, w)
    root = Monomial.unit(m.nvars)
    edges = set()
    queue = deque([root])
    while queue:
        v = queue.popleft()
        dv = weighted_degree(v, w)
        if dv >= bound:
            continue
        jmax = max_index(truncate(image, dv + 1))
        for j in range(max_index(v), jmax + 1):
            child = v.times_variable(j)
            edges.add((v, child))
            queue.append(child)
    return TruncationTree(root, frozenset(edges), bound)


def iter_tree_sinks(m: Monomial, w: WeightVector, bound: int | None = None):
    """Stream the sinks of :func:`tree_from_monomial` without storing edges."""
    _check_nvars(m, w)
    if bound is None:
        bound = weighted_degree(m, w)
    image = psi(m, w)
    queue = deque([Monomial.unit(m.nvars)])
    while queue:
        v = queue.popleft()
        dv = weighted_degree(v, w)
        if dv >= bound:
            yield v
            continue
        jmax = max_index(truncate(image, dv + 1))
        for j in range(max_index(v), jmax + 1):
            queue.append(v.times_variable(j))


def tree_from_ideal(ideal: MonomialIdeal) -> TruncationTree:
    """The tree of truncations of the minimal generators of ``ideal``.

    There is an edge ``(v, v*x_j)`` exactly when ``v*x_j`` is the
    truncation of some minimal generator at the degree of ``v*x_j``;
    equivalently the vertices are the factored-form prefixes of the
    generators.  For a strongly stable ideal the sinks are the minimal
    generators.
    """
    root = Monomial.unit(ideal.nvars)
    edges = set()
    for g in ideal.gens:
        prefix = root
        for j in factored_indices(g):
            child = prefix.times_variable(j)
            edges.add((prefix, child))
            prefix = child
    return TruncationTree(root, frozenset(edges), None)
