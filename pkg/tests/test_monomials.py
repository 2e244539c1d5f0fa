"""Monomial arithmetic, the substitution map, and the weighted Borel order."""

import pytest

from oracles import all_monomials, borel_closure_by_moves
from wstable import (
    DimensionMismatch,
    Monomial,
    WeightVector,
    factored_indices,
    max_index,
    meet_w,
    psi,
    psi_inverse,
    truncate,
    w_borel_below,
    weighted_degree,
)

W21 = WeightVector((2, 1))
W321 = WeightVector((3, 2, 1))
W421 = WeightVector((4, 2, 1))


def test_weight_vector_validation():
    with pytest.raises(ValueError):
        WeightVector((1, 2))
    with pytest.raises(ValueError):
        WeightVector((2, 0))
    with pytest.raises(ValueError):
        WeightVector(())
    assert WeightVector.ones(3).weights == (1, 1, 1)
    assert W321.max_weight == 3


def test_weighted_degree_known_values():
    assert weighted_degree(Monomial((1, 3, 2)), W321) == 11
    assert weighted_degree(Monomial.unit(3), W321) == 0
    assert weighted_degree(Monomial((1, 1, 2)), W321) == 7


def test_weighted_degree_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        weighted_degree(Monomial((1, 0)), W321)


def test_psi_known_values():
    assert psi(Monomial((1, 0)), W21) == Monomial((2, 0))
    assert psi(Monomial.unit(2), W21) == Monomial.unit(2)
    assert psi(Monomial((0, 2, 1)), W421) == Monomial((0, 4, 1))


def test_psi_inverse_known_values():
    assert psi_inverse(Monomial((2, 2)), W21) == Monomial((1, 2))
    # an image-ring monomial with no preimage is a normal outcome
    assert psi_inverse(Monomial((1, 1)), W21) is None
    assert psi_inverse(Monomial.unit(2), W21) == Monomial.unit(2)


def test_psi_inverse_is_left_inverse_of_psi():
    for w in (W21, WeightVector((3, 1)), WeightVector((2, 2))):
        for m in all_monomials(2, 4):
            assert psi_inverse(psi(m, w), w) == m


def test_weighted_degree_equals_degree_of_image():
    for w in (W321, W421, WeightVector((2, 2, 1))):
        for m in all_monomials(3, 3):
            assert weighted_degree(m, w) == psi(m, w).degree()


def test_factored_indices():
    assert factored_indices(Monomial((1, 3, 2))) == (1, 2, 2, 2, 3, 3)
    assert factored_indices(Monomial.unit(2)) == ()


def test_truncate_known_values():
    m = Monomial((1, 3, 2))  # factors (1, 2, 2, 2, 3, 3)
    assert truncate(m, 4) == Monomial((1, 3, 0))
    assert truncate(Monomial((0, 2)), 5) == Monomial((0, 2))
    assert truncate(Monomial((1, 1)), 0) == Monomial.unit(2)


def test_truncate_at_full_degree_is_identity():
    for m in all_monomials(3, 4):
        assert truncate(m, m.degree()) == m


def test_truncate_monotone_under_divisibility():
    for m in all_monomials(2, 5):
        for d in range(m.degree()):
            assert truncate(m, d).divides(truncate(m, d + 1))


def test_max_index():
    assert max_index(Monomial((1, 3, 2))) == 3
    assert max_index(Monomial.unit(3)) == 1  # convention for the unit
    assert max_index(Monomial((0, 4))) == 2


def test_w_borel_below_known_values():
    # x1*x2^2 lies in the (2,1)-closure of x2^4
    assert w_borel_below(Monomial((0, 4)), Monomial((1, 2)), W21)
    m = Monomial((1, 2))
    assert w_borel_below(m, m, W21)
    ones = WeightVector.ones(2)
    assert not w_borel_below(Monomial((1, 0)), Monomial((0, 1)), ones)


def test_w_borel_below_matches_move_oracle():
    """Dominance agrees with reachability inside the substituted closure."""
    for w in (W21, WeightVector((3, 2))):
        for m in all_monomials(2, 3):
            closure = borel_closure_by_moves([psi(m, w)], 2)
            for u in all_monomials(2, 4):
                assert w_borel_below(m, u, w) == closure.contains(psi(u, w))


def _relation(monomials, w):
    return {(m, u) for m in monomials for u in monomials if w_borel_below(m, u, w)}


@pytest.mark.parametrize("nvars,max_deg,weights", [
    (2, 6, (2, 1)),
    (2, 6, (1, 1)),
    (3, 4, (3, 2, 1)),
    (3, 4, (1, 1, 1)),
])
def test_w_borel_below_is_partial_order(nvars, max_deg, weights):
    w = WeightVector(weights)
    monomials = list(all_monomials(nvars, max_deg))
    rel = _relation(monomials, w)
    for m in monomials:
        assert (m, m) in rel
    for m, u in rel:
        if (u, m) in rel:
            assert m == u
    below = {}
    for m, u in rel:
        below.setdefault(m, set()).add(u)
    for m, mid in rel:
        for u in below.get(mid, ()):
            assert (m, u) in rel


def test_unweighted_dominance_implies_weighted():
    ones = WeightVector.ones(2)
    weighted = [W21, WeightVector((3, 2)), WeightVector((4, 1))]
    monomials = list(all_monomials(2, 5))
    for m in monomials:
        for u in monomials:
            if w_borel_below(m, u, ones):
                for w in weighted:
                    assert w_borel_below(m, u, w)


def test_meet_known_values():
    assert meet_w(Monomial((0, 4)), Monomial((1, 1)), W21) == Monomial((1, 2))
    u = Monomial((2, 1))
    assert meet_w(u, u, W21) == u


def test_meet_outside_image():
    # factored meet of y2^6 and y1^3 is y1^3*y2^3; 3 is not a multiple of w2=2
    assert meet_w(Monomial((0, 3)), Monomial((1, 0)), WeightVector((3, 2))) is None
    assert meet_w(Monomial((0, 2, 0)), Monomial((1, 0, 0)), W321) is None


def test_meet_in_image_for_unit_second_weight():
    """With the last weight 1 and two variables, the meet never leaves the image.

    The count of first-variable factors of the meet is the larger of two
    multiples of the first weight, so it is always divisible.
    """
    for u in all_monomials(2, 4):
        for v in all_monomials(2, 4):
            assert meet_w(u, v, W21) is not None


def test_meet_is_least_common_dominator():
    """The meet lies in both closures and every common member dominates it.

    Equivalently the principal closure of the meet is the intersection of
    the two principal closures.
    """
    monomials = list(all_monomials(2, 4))
    for w in (W21, WeightVector((3, 2))):
        for u in monomials:
            for v in monomials:
                q = meet_w(u, v, w)
                if q is None:
                    continue
                assert w_borel_below(u, q, w)
                assert w_borel_below(v, q, w)
                for p in monomials:
                    if w_borel_below(u, p, w) and w_borel_below(v, p, w):
                        assert w_borel_below(q, p, w)


def test_monomial_validation_and_ops():
    with pytest.raises(ValueError):
        Monomial((-1, 0))
    m = Monomial.from_factors((1, 2, 2, 2, 3, 3), 3)
    assert m == Monomial((1, 3, 2))
    assert Monomial.variable(2, 3) == Monomial((0, 1, 0))
    assert Monomial((1, 0)).lcm(Monomial((0, 2))) == Monomial((1, 2))
    assert Monomial((1, 0)) * Monomial((0, 2)) == Monomial((1, 2))
    assert Monomial((1, 0)).divides(Monomial((1, 2)))
    assert not Monomial((2, 0)).divides(Monomial((1, 2)))
