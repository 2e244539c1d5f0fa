"""Weighted closures, stability, weighted Borel generators, and truncations."""

import random

import pytest

import golden
from oracles import (
    all_monomials,
    borel_closure_by_moves,
    ideal_monomials_up_to_degree,
    in_w_closure_oracle,
    random_monomial,
    random_weight_vector,
)
from wstable import (
    Monomial,
    MonomialIdeal,
    NotWStableError,
    WeightVector,
    is_w_stable,
    parse_ideal,
    trunc_ideal,
    truncate,
    w_borel_gens,
    w_closure,
)


def test_closure_golden_stable_pair():
    gens = golden.monomials(golden.CLOSURE_STABLE_PAIR["gens"], 2)
    closed = w_closure(gens, golden.CLOSURE_STABLE_PAIR["weights"])
    assert closed.gens == set(golden.monomials(golden.CLOSURE_STABLE_PAIR["closure"], 2))


def test_closure_golden_ones():
    closed = w_closure([golden.monomial("x1*x2*x3^2")], golden.ONES3)
    assert closed.gens == set(golden.monomials(golden.CLOSURE_ONES, 3))


def test_closure_golden_321():
    closed = w_closure([golden.monomial("x1*x2*x3^2")], golden.W321)
    assert closed.gens == set(golden.monomials(golden.CLOSURE_321, 3))


def test_closure_matches_move_oracle_exhaustively():
    """Standard-graded closure equals the single-move fixpoint, n<=3, deg<=5."""
    for n in (1, 2, 3):
        ones = WeightVector.ones(n)
        for m in all_monomials(n, 5):
            assert w_closure([m], ones) == borel_closure_by_moves([m], n)


def test_closure_membership_matches_definition_for_general_weights():
    rng = random.Random(23)
    for _ in range(20):
        w = random_weight_vector(rng, 3)
        gens = [random_monomial(rng, 3, 2) for _ in range(2)]
        closed = w_closure(gens, w)
        for u in all_monomials(3, 4):
            assert closed.contains(u) == in_w_closure_oracle(u, gens, w)


def test_closure_operator_properties():
    """Extensive, monotone, and idempotent on random inputs."""
    rng = random.Random(29)
    for _ in range(60):
        n = rng.choice((2, 3))
        w = random_weight_vector(rng, n)
        gens = [random_monomial(rng, n) for _ in range(rng.randint(1, 3))]
        closed = w_closure(gens, w)
        for g in gens:
            assert closed.contains(g)
        bigger = w_closure(gens + [random_monomial(rng, n)], w)
        assert all(bigger.contains(g) for g in closed.gens)
        assert w_closure(closed, w) == closed


def test_is_w_stable_golden():
    assert is_w_stable(parse_ideal("x1, x2^2", 2), golden.W21)
    assert not is_w_stable(parse_ideal("x1^2, x2^2", 2), golden.ONES2)
    assert is_w_stable(MonomialIdeal.unit(3), golden.W321)
    assert is_w_stable(MonomialIdeal.zero(3), golden.W321)


def test_not_strongly_stable_for_any_weights_when_not_borel():
    ideal = parse_ideal("x1^2, x2^2", 2)
    for w1 in range(1, 5):
        for w2 in range(1, w1 + 1):
            assert not is_w_stable(ideal, WeightVector((w1, w2)))


def test_w_stable_implies_strongly_stable():
    rng = random.Random(31)
    for _ in range(30):
        w = random_weight_vector(rng, 3)
        ideal = w_closure([random_monomial(rng, 3, 2) for _ in range(2)], w)
        assert is_w_stable(ideal, w)
        assert is_w_stable(ideal, WeightVector.ones(3))


def test_w_borel_gens_golden():
    ideal = parse_ideal("x1^2, x1*x2^2, x2^4", 2)
    assert w_borel_gens(ideal, golden.W21) == {golden.monomial("x2^4", 2)}


@pytest.mark.parametrize("row", sorted(golden.CORNER_CUT_TABLE))
def test_corner_cut_table_row(row):
    weights_text, ideal_text, bgens_text, wbgens_text = golden.CORNER_CUT_TABLE[row]
    from wstable import parse_weights
    w = parse_weights(weights_text)
    ideal = parse_ideal(ideal_text, 3)
    assert is_w_stable(ideal, w)
    assert w_borel_gens(ideal, WeightVector.ones(3)) == set(golden.monomials(bgens_text, 3))
    assert w_borel_gens(ideal, w) == set(golden.monomials(wbgens_text, 3))


def test_w_borel_gens_rejects_unstable_input():
    ideal = parse_ideal("x2^2", 2)  # not stable: closure adds x1-divisible gens
    with pytest.raises(NotWStableError) as info:
        w_borel_gens(ideal, golden.ONES2)
    assert info.value.witness.nvars == 2
    assert not ideal.contains(info.value.witness)


def test_bgens_nested_in_generators():
    rng = random.Random(37)
    for _ in range(30):
        w = random_weight_vector(rng, 3)
        ideal = w_closure([random_monomial(rng, 3, 2) for _ in range(2)], w)
        weighted = w_borel_gens(ideal, w)
        unweighted = w_borel_gens(ideal, WeightVector.ones(3))
        assert weighted <= unweighted <= ideal.gens
        assert w_closure(weighted, w) == ideal


def test_trunc_ideal_known_values():
    borel_y2sq = w_closure([Monomial((0, 2))], golden.ONES2)
    assert trunc_ideal(borel_y2sq, 1) == MonomialIdeal(2, [Monomial((1, 0)), Monomial((0, 1))])
    assert trunc_ideal(borel_y2sq, 5) == borel_y2sq
    assert trunc_ideal(borel_y2sq, 0) == MonomialIdeal.unit(2)


def test_trunc_ideal_matches_elementwise_oracle():
    """Truncating the Borel generators agrees with truncating every member."""
    cases = [
        (w_closure([Monomial((1, 3))], golden.ONES2), 2),
        (w_closure([Monomial((1, 1, 2))], golden.ONES3), 2),
        (w_closure([Monomial((0, 2, 1))], golden.ONES3), 1),
        (w_closure([Monomial((0, 0, 3))], golden.ONES3), 2),
    ]
    for ideal, d in cases:
        maxdeg = max(g.degree() for g in ideal.gens)
        members = ideal_monomials_up_to_degree(ideal, maxdeg + d)
        expected = MonomialIdeal(ideal.nvars, (truncate(m, d) for m in members))
        assert trunc_ideal(ideal, d) == expected


def test_trunc_ideal_golden_derived():
    ideal = w_closure([Monomial((1, 3))], golden.ONES2)
    assert trunc_ideal(ideal, 2) == w_closure([Monomial((1, 1))], golden.ONES2)
