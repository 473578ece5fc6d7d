"""Tests for the derangement sum, the diagram sum and exact point evaluation."""

import random
from collections import Counter

import pytest
from sympy.polys.domains import QQ

from algebra_layer import BilinearSpace, CentralPoly, DimensionMismatchError, Vector, pairing
from combinatorics_layer import all_signs, class_fibre, enumerate_derangements, fibre, inverse_classes, parse_cycle_notation
from correlator_layer import (
    CorrelatorLayerError,
    PairSequence,
    PoleError,
    diagonal_collapse,
    diagram_gamma,
    evaluate_terms,
    fibre_gamma_sum,
    gamma_sigma_T,
    lemma2_terms,
    merge_inverse_pairs,
    prop2_terms,
    theorem1_symbolic,
    theorem1_terms,
)

from conftest import random_rational, random_sequence


def distinct_points(rng, names):
    values = set()
    while len(values) < len(names):
        values.add(random_rational(rng, span=20, denominators=5))
    return dict(zip(names, values))


def z_points(rng, n):
    return distinct_points(rng, [f"z{i}" for i in range(1, n + 1)])


def on_diagonal(points):
    doubled = dict(points)
    for name, value in points.items():
        doubled["w" + name[1:]] = value
    return doubled


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_virasoro_coefficients_are_powers_of_half_r(n):
    terms = theorem1_terms(PairSequence.virasoro(n))
    assert len(terms) == len(enumerate_derangements(n))
    for term, sigma in zip(terms, enumerate_derangements(n)):
        assert term.label == sigma.notation
        assert term.coefficient == CentralPoly.monomial(QQ(1, 2 ** sigma.cycle_count), sigma.cycle_count)
        assert len(term.denominator) == n


def test_empty_and_single_pair_sequences():
    assert [t.coefficient for t in theorem1_terms(PairSequence.virasoro(0))] == [CentralPoly.one()]
    assert theorem1_terms(PairSequence.virasoro(1)) == []
    assert evaluate_terms(theorem1_terms(PairSequence.virasoro(1)), {"z1": 0}, 2) == QQ.zero


def test_two_pair_coefficient_is_a_sum_of_pairings(generic_sequence):
    T = PairSequence(generic_sequence.space, (generic_sequence.pairs[0], generic_sequence.pairs[2]))
    (a1, b1), (a2, b2) = T.pairs
    p = lambda x, y: pairing(x, y, T.space)
    expected = QQ(1, 4) * (p(a1, a2) * p(b1, b2) + p(a1, b2) * p(b1, a2))
    assert expected == QQ(5, 2)
    (term,) = theorem1_terms(T)
    assert term.label == "(12)"
    assert term.coefficient == CentralPoly.monomial(expected, 1)
    assert gamma_sigma_T(enumerate_derangements(2)[0], T) == expected


def test_cancelling_two_pair_coefficient_drops_the_term(generic_sequence):
    # (a1,a2)(b1,b2) = 9/8 = -(a1,b2)(b1,a2)
    T = PairSequence(generic_sequence.space, generic_sequence.pairs[:2])
    assert gamma_sigma_T(enumerate_derangements(2)[0], T) == QQ.zero
    assert theorem1_terms(T) == []
    assert diagonal_collapse(prop2_terms(T)) == []


def test_symbolic_four_pair_display():
    terms = theorem1_symbolic(4)
    assert len(terms) == 9
    counts = Counter((term.r_power, term.prefactor) for term in terms)
    assert counts == {(2, QQ(1, 64)): 3, (1, QQ(1, 32)): 6}
    by_cycles = {term.derangement.notation: term for term in terms}
    assert by_cycles["(12)(34)"].trace_text() == "Tr(L1L2)Tr(L3L4)"
    assert by_cycles["(1342)"].trace_text() == "Tr(L1L3L4L2)"
    assert [f.to_json() for f in by_cycles["(12)(34)"].denominator()] == [["z1", "z2", 4], ["z3", "z4", 4]]


def test_symbolic_terms_match_evaluated_virasoro_terms():
    evaluated = theorem1_terms(PairSequence.virasoro(4))
    for symbolic, term in zip(theorem1_symbolic(4), evaluated):
        # Tr(L^t) = 2^t in dimension one
        value = symbolic.prefactor * 2 ** 4
        assert term.coefficient == CentralPoly.monomial(value, symbolic.r_power)


def test_evaluation_of_two_virasoro_fields():
    terms = theorem1_terms(PairSequence.virasoro(2))
    assert evaluate_terms(terms, {"z1": 1, "z2": 0}, 2) == QQ.one
    assert evaluate_terms(terms, {"z1": "1/2", "z2": "-1/2"}) == CentralPoly.monomial(QQ(1, 2), 1)


def test_evaluation_at_a_pole():
    terms = theorem1_terms(PairSequence.virasoro(2))
    with pytest.raises(PoleError, match="pole at evaluation point"):
        evaluate_terms(terms, {"z1": "1/2", "z2": "2/4"}, 2)


def test_evaluation_needs_every_variable():
    terms = theorem1_terms(PairSequence.virasoro(3))
    with pytest.raises(CorrelatorLayerError):
        evaluate_terms(terms, {"z1": 1, "z2": 2}, 1)


def test_diagonal_collapse_reproduces_the_derangement_sum(rng):
    for n in (2, 3, 4):
        T = random_sequence(rng, n, 2)
        assert diagonal_collapse(prop2_terms(T)) == merge_inverse_pairs(theorem1_terms(T), n)


def test_diagonal_collapse_merges_a_three_cycle_with_its_inverse(generic_sequence):
    (term,) = diagonal_collapse(prop2_terms(generic_sequence))
    assert term.label == "(123)"
    assert term.coefficient == CentralPoly.monomial(QQ(-51, 32), 1)
    assert [t.label for t in theorem1_terms(generic_sequence)] == ["(123)", "(132)"]


def test_merge_inverse_pairs_on_virasoro_terms():
    merged = merge_inverse_pairs(theorem1_terms(PairSequence.virasoro(4)), 4)
    assert len(merged) == len(inverse_classes(4)) == 6
    for term in merged:
        sigma = parse_cycle_notation(term.label, 4)
        size = 1 if sigma.is_involution else 2
        assert term.coefficient == CentralPoly.monomial(size * QQ(1, 2 ** sigma.cycle_count), sigma.cycle_count)


def test_diagonal_collapse_rejects_derangement_terms():
    with pytest.raises(CorrelatorLayerError):
        diagonal_collapse(theorem1_terms(PairSequence.virasoro(2)))


def test_diagram_sum_on_the_diagonal_at_random_points(rng):
    for n in (2, 3, 4):
        T = random_sequence(rng, n, 2)
        closed = theorem1_terms(T)
        diagram_sum = prop2_terms(T)
        for _ in range(5):
            points = z_points(rng, n)
            assert evaluate_terms(diagram_sum, on_diagonal(points)) == evaluate_terms(closed, points)


def test_diagram_sum_of_empty_sequence_is_one():
    (term,) = prop2_terms(PairSequence.virasoro(0))
    assert term.coefficient == CentralPoly.one()
    assert term.denominator == ()


def test_signed_correlators_add_up_to_the_diagram_sum(rng):
    T = random_sequence(rng, 3, 2)
    key = lambda term: str(term.diagram)
    signed = [term for sign in all_signs(3) for term in lemma2_terms(T, sign)]
    assert sorted(signed, key=key) == sorted(prop2_terms(T), key=key)


def test_class_fibre_sums_give_the_derangement_coefficients(rng):
    for n in (2, 3, 4):
        T = random_sequence(rng, n, 2)
        for members in inverse_classes(n):
            gammas = [gamma_sigma_T(sigma, T) for sigma in members]
            assert fibre_gamma_sum(class_fibre(members[0], n), T) == sum(gammas, QQ.zero)
            assert len(set(gammas)) == 1


def test_single_fibre_of_a_three_cycle_is_not_symmetric(generic_sequence):
    forward, backward = inverse_classes(3)[0]
    assert (forward.notation, backward.notation) == ("(123)", "(132)")
    assert fibre_gamma_sum(fibre(forward, 3), generic_sequence) == QQ(33, 64)
    assert fibre_gamma_sum(fibre(backward, 3), generic_sequence) == QQ(-135, 64)
    assert gamma_sigma_T(forward, generic_sequence) == gamma_sigma_T(backward, generic_sequence) == QQ(-51, 64)


def test_two_cycle_fibres_match_on_their_own(rng):
    T = random_sequence(rng, 4, 2)
    for sigma in enumerate_derangements(4):
        if sigma.is_involution:
            assert fibre_gamma_sum(fibre(sigma, 4), T) == gamma_sigma_T(sigma, T)


def test_diagram_gamma_vanishes_with_an_orthogonal_edge():
    space = BilinearSpace.identity(2)
    e1, e2 = Vector.basis(2, 0), Vector.basis(2, 1)
    T = PairSequence(space, ((e1, e2), (e1, e2)))
    diagrams = fibre(enumerate_derangements(2)[0], 2)
    assert sorted(diagram_gamma(d, T) for d in diagrams) == [QQ.zero, QQ.one]
    assert len(prop2_terms(T)) == 1


def test_derangement_sum_is_symmetric_under_permuting_pairs(rng):
    for n in (2, 3, 4):
        T = random_sequence(rng, n, 2)
        order = list(range(1, n + 1))
        random.Random(n).shuffle(order)
        points = z_points(rng, n)
        moved = {f"z{k}": points[f"z{label}"] for k, label in enumerate(order, start=1)}
        assert evaluate_terms(theorem1_terms(T.permuted(order)), moved) == evaluate_terms(theorem1_terms(T), points)


def test_vectors_must_live_in_the_space(plane):
    with pytest.raises(DimensionMismatchError):
        PairSequence(plane, ((Vector.of([1]), Vector.of([1, 0])),))
