"""Monomial ideals presented by minimal generating sets."""

from __future__ import annotations

from .monomials import DimensionMismatch, Monomial


def minimalize(monomials) -> list[Monomial]:
    """The divisibility-minimal subset of a collection of monomials.

    Idempotent; duplicates collapse.  All inputs must share one variable
    count.
    """
    minimal: list[Monomial] = []
    for m in sorted(set(monomials), key=lambda m: (m.degree(), m.exponents)):
        if not any(g.divides(m) for g in minimal):
            minimal.append(m)
    return minimal


class MonomialIdeal:
    """An ideal generated by monomials, stored minimalized.

    The zero ideal has no generators and the unit ideal is generated by the
    unit monomial.  Generators are exposed in graded-lexicographic
    descending order (first variable largest) for deterministic printing.
    Instances are immutable values.
    """

    __slots__ = ("nvars", "gens")

    def __init__(self, nvars: int, gens=()):
        gens = tuple(gens)
        for g in gens:
            if g.nvars != nvars:
                raise DimensionMismatch(
                    f"generator {g} has {g.nvars} variables, expected {nvars}")
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "gens", frozenset(minimalize(gens)))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars)

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, (Monomial.unit(nvars),))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return Monomial.unit(self.nvars) in self.gens

    def contains(self, m: Monomial) -> bool:
        """Ideal membership: some generator divides ``m``."""
        if m.nvars != self.nvars:
            raise DimensionMismatch(
                f"monomial has {m.nvars} variables, expected {self.nvars}")
        return any(g.divides(m) for g in self.gens)

    def sorted_gens(self) -> list[Monomial]:
        """Generators in graded-lex descending order."""
        return sorted(self.gens, key=lambda m: (m.degree(), m.exponents), reverse=True)

    def lex_smallest_gen(self) -> Monomial:
        """The lexicographically smallest generator (first variable dominant)."""
        if self.is_zero():
            raise ValueError("the zero ideal has no generators")
        return min(self.gens, key=lambda m: m.exponents)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.nvars, tuple(self.gens) + tuple(other.gens))

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.nvars, (a * b for a in self.gens for b in other.gens))

    def intersection(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection via pairwise least common multiples of generators."""
        self._check(other)
        return MonomialIdeal(self.nvars, (a.lcm(b) for a in self.gens for b in other.gens))

    def _check(self, other):
        if self.nvars != other.nvars:
            raise DimensionMismatch(
                f"variable counts differ: {self.nvars} vs {other.nvars}")

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.nvars == other.nvars and self.gens == other.gens

    def __hash__(self):
        return hash((self.nvars, self.gens))

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        exps = ", ".join(str(m.exponents) for m in self.sorted_gens())
        return f"MonomialIdeal(n={self.nvars}, gens=[{exps}])"
