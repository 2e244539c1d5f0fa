"""Monomials, weight vectors, and the weighted Borel order."""

from __future__ import annotations

from dataclasses import dataclass


class DimensionMismatch(ValueError):
    """Raised when monomials or weight vectors disagree on the variable count."""


@dataclass(frozen=True)
class Monomial:
    """A monomial in a fixed number of variables, stored as an exponent vector.

    ``exponents[i]`` holds the exponent of the (i+1)-st variable; variable
    indices are 1-based throughout the public API.  The unit monomial is the
    all-zero vector.  Instances are immutable and hashable.
    """

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def unit(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Monomial":
        """The monomial consisting of the single variable with 1-based ``index``."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} out of range 1..{nvars}")
        return cls(tuple(1 if i == index - 1 else 0 for i in range(nvars)))

    @classmethod
    def from_factors(cls, indices, nvars: int) -> "Monomial":
        """Build a monomial from a sequence of 1-based variable indices."""
        exps = [0] * nvars
        for i in indices:
            if not 1 <= i <= nvars:
                raise ValueError(f"variable index {i} out of range 1..{nvars}")
            exps[i - 1] += 1
        return cls(tuple(exps))

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def degree(self) -> int:
        return sum(self.exponents)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        _check_nvars(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_nvars(self, other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def times_variable(self, index: int) -> "Monomial":
        """Multiply by the variable with 1-based ``index``."""
        exps = list(self.exponents)
        exps[index - 1] += 1
        return Monomial(tuple(exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_nvars(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __repr__(self):
        return f"Monomial({self.exponents})"


@dataclass(frozen=True)
class WeightVector:
    """A monotone non-increasing tuple of positive integer variable degrees."""

    weights: tuple[int, ...]

    def __post_init__(self):
        ws = tuple(int(w) for w in self.weights)
        if not ws:
            raise ValueError("weight vector must not be empty")
        if ws[-1] < 1:
            raise ValueError(f"weights must be positive, got {ws}")
        if any(ws[i] < ws[i + 1] for i in range(len(ws) - 1)):
            raise ValueError(f"weights must be non-increasing, got {ws}")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def ones(cls, nvars: int) -> "WeightVector":
        return cls((1,) * nvars)

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def max_weight(self) -> int:
        # weights are non-increasing, so the first entry is the largest
        return self.weights[0]

    def __iter__(self):
        return iter(self.weights)

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, pos):
        return self.weights[pos]


def _check_nvars(a, b):
    na = a.nvars if hasattr(a, "nvars") else len(a)
    nb = b.nvars if hasattr(b, "nvars") else len(b)
    if na != nb:
        raise DimensionMismatch(f"variable counts differ: {na} vs {nb}")


def factored_indices(m: Monomial) -> tuple[int, ...]:
    """The non-decreasing sequence of 1-based variable indices whose product is ``m``.

    The length of the sequence equals the total degree of ``m``; the unit
    monomial factors into the empty sequence.
    """
    out = []
    for i, e in enumerate(m.exponents, start=1):
        out.extend([i] * e)
    return tuple(out)


def weighted_degree(m: Monomial, w: WeightVector) -> int:
    """Degree of ``m`` when variable i has degree ``w[i]``."""
    _check_nvars(m, w)
    return sum(wi * ei for wi, ei in zip(w, m.exponents))


def psi(m: Monomial, w: WeightVector) -> Monomial:
    """Substitute each variable by the corresponding power prescribed by ``w``.

    The image of ``x_i`` is ``y_i^{w_i}``, so exponents are scaled
    componentwise and the standard degree of the image equals the weighted
    degree of ``m``.
    """
    _check_nvars(m, w)
    return Monomial(tuple(wi * ei for wi, ei in zip(w, m.exponents)))

def psi_inverse(u: Monomial, w: WeightVector):
    """Partial inverse of :func:`psi`.

    Returns the preimage monomial when every exponent of ``u`` is divisible
    by the matching weight, and ``None`` when ``u`` is not in the image.
    A ``None`` result is a normal outcome, not an error.
    """
    _check_nvars(u, w)
    exps = []
    for wi, ei in zip(w, u.exponents):
        q, r = divmod(ei, wi)
        if r:
            return None
        exps.append(q)
    return Monomial(tuple(exps))


def truncate(u: Monomial, d: int) -> Monomial:
    """Product of the ``d`` smallest-index variable factors of ``u``.

    For ``d`` at least the degree of ``u`` the result is ``u`` itself, and
    ``d = 0`` gives the unit monomial.
    """
    if d < 0:
        raise ValueError("truncation length must be non-negative")
    if d >= u.degree():
        return u
    return Monomial.from_factors(factored_indices(u)[:d], u.nvars)


def max_index(u: Monomial) -> int:
    """Largest 1-based index of a variable dividing ``u``.

    By convention the unit monomial has maximal index 1.
    """
    for i in range(u.nvars, 0, -1):
        if u.exponents[i - 1] > 0:
            return i
    return 1


def w_borel_below(m: Monomial, u: Monomial, w: WeightVector) -> bool:
    """Whether ``u`` lies above ``m`` in the weighted Borel order.

    Compares the factored forms of the substituted images: ``u`` dominates
    ``m`` when its image has at least the degree of the image of ``m`` and
    its k-th factor index is no larger, position by position.  Equal
    monomials compare True.
    """
    _check_nvars(m, u)
    fm = factored_indices(psi(m, w))
    fu = factored_indices(psi(u, w))
    if len(fu) < len(fm):
        return False
    return all(fu[k] <= fm[k] for k in range(len(fm)))


def meet_w(u: Monomial, v: Monomial, w: WeightVector):
    """Meet of ``u`` and ``v`` in the weighted Borel order.

    Computed on the factored forms of the substituted images: positionwise
    minima over the shorter factor list, tail taken from the longer one.
    When the result lies in the substitution's image its principal closure
    is the intersection of the two principal closures.  Returns ``None``
    when the factored meet has no preimage; the intersection ideal is still
    available through ``MonomialIdeal.intersection`` in that case.
    """
    _check_nvars(u, v)
    fu = factored_indices(psi(u, w))
    fv = factored_indices(psi(v, w))
    if len(fu) < len(fv):
        fu, fv = fv, fu
    merged = tuple(min(a, b) for a, b in zip(fu, fv)) + fu[len(fv):]
    return psi_inverse(Monomial.from_factors(merged, u.nvars), w)
