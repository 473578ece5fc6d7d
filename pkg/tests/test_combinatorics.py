"""Tests for derangements, diagrams, signs and the contraction map."""

from math import comb, prod

import pytest

from combinatorics_layer import (
    Derangement,
    Diagram,
    Endpoint,
    InvalidDerangementError,
    InvalidDiagramError,
    SignAssignment,
    UndefinedContractionError,
    all_signs,
    class_fibre,
    class_representative,
    cycle_count,
    delete_edge,
    delete_edge_pair,
    diagram_to_derangement,
    diagrams_for_sign,
    enumerate_derangements,
    enumerate_diagrams,
    fibre,
    induced_sign,
    inverse_classes,
    parse_cycle_notation,
)


def double_factorial(k):
    return prod(range(k, 0, -2)) if k > 0 else 1


def matchings_avoiding_pairs(n):
    """Perfect matchings of 2n points avoiding n fixed disjoint edges, by inclusion-exclusion."""
    return sum((-1) ** k * comb(n, k) * double_factorial(2 * (n - k) - 1) for k in range(n + 1))


@pytest.mark.parametrize("n, count", [(0, 1), (1, 0), (2, 1), (3, 2), (4, 9), (5, 44), (6, 265)])
def test_derangement_counts(n, count):
    assert len(enumerate_derangements(n)) == count


def test_derangements_have_no_fixed_points_and_are_sorted():
    found = enumerate_derangements(5)
    assert [sigma.image for sigma in found] == sorted(sigma.image for sigma in found)
    for sigma in found:
        assert all(sigma(i) != i for i in range(1, 6))


def test_n4_derangements_in_cycle_notation():
    notations = sorted(sigma.notation for sigma in enumerate_derangements(4))
    assert notations == sorted([
        "(12)(34)", "(13)(24)", "(14)(23)",
        "(1234)", "(1243)", "(1324)", "(1342)", "(1423)", "(1432)",
    ])


def test_cycle_count():
    assert cycle_count(parse_cycle_notation("(12)(34)", 4)) == 2
    assert cycle_count(parse_cycle_notation("(1342)", 4)) == 1


def test_cycle_notation_round_trip():
    for sigma in enumerate_derangements(5):
        assert parse_cycle_notation(sigma.notation, 5) == sigma


def test_labels_from_ten_are_comma_separated():
    sigma = Derangement.from_cycles([[1, 10], [2, 3, 4, 5, 6, 7, 8, 9]], 10)
    assert sigma.notation == "(1,10)(2,3,4,5,6,7,8,9)"
    assert parse_cycle_notation(sigma.notation, 10) == sigma


@pytest.mark.parametrize("text, n", [("(11)", 2), ("(12", 2), ("(12)", 3), ("(13)", 2)])
def test_invalid_cycle_notation(text, n):
    with pytest.raises(InvalidDerangementError):
        parse_cycle_notation(text, n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_diagram_counts_match_inclusion_exclusion(n):
    assert len(enumerate_diagrams(n)) == matchings_avoiding_pairs(n)


def test_diagram_counts_for_small_n():
    assert [len(enumerate_diagrams(n)) for n in range(1, 5)] == [0, 2, 8, 60]
    assert enumerate_diagrams(0) == [Diagram(0, ())]


def test_diagram_validation():
    with pytest.raises(InvalidDiagramError):
        Diagram.from_labels(2, [["a1", "b1"], ["a2", "b2"]])
    with pytest.raises(InvalidDiagramError):
        Diagram.from_labels(2, [["a1", "a2"], ["a1", "b2"]])
    with pytest.raises(InvalidDiagramError):
        Diagram.from_labels(2, [["a1", "a2"]])


def test_contraction_of_two_pairs():
    parallel = Diagram.from_labels(2, [["a1", "a2"], ["b1", "b2"]])
    crossed = Diagram.from_labels(2, [["a1", "b2"], ["b1", "a2"]])
    assert diagram_to_derangement(parallel).notation == "(12)"
    assert diagram_to_derangement(crossed).notation == "(12)"


def test_contraction_needs_two_pairs():
    with pytest.raises(UndefinedContractionError):
        diagram_to_derangement(Diagram(0, ()))


def test_contraction_is_surjective_with_fibres_of_size_two_to_the_n_minus_c():
    for n in range(2, 7):
        images = {}
        for diagram in enumerate_diagrams(n):
            sigma = diagram_to_derangement(diagram)
            images.setdefault(sigma, []).append(diagram)
        assert set(images) == set(enumerate_derangements(n))
        for sigma, diagrams in images.items():
            assert len(diagrams) == 2 ** (n - sigma.cycle_count)
            assert sorted(fibre(sigma, n), key=str) == sorted(diagrams, key=str)


def test_inverse_of_a_derangement():
    sigma = parse_cycle_notation("(1243)", 4)
    assert sigma.inverse.notation == "(1342)"
    assert sigma.inverse.inverse == sigma
    assert not sigma.is_involution
    assert parse_cycle_notation("(13)(24)", 4).inverse == parse_cycle_notation("(13)(24)", 4)


def test_inverse_classes_of_four_labels():
    assert [[sigma.notation for sigma in members] for members in inverse_classes(4)] == [
        ["(12)(34)"], ["(1234)", "(1432)"], ["(1243)", "(1342)"],
        ["(13)(24)"], ["(1324)", "(1423)"], ["(14)(23)"],
    ]


def test_inverse_classes_cover_every_derangement_once():
    for n in range(2, 7):
        classes = inverse_classes(n)
        flat = sorted(sigma.image for members in classes for sigma in members)
        assert flat == [sigma.image for sigma in enumerate_derangements(n)]
        for members in classes:
            assert class_representative(members[-1]) == members[0]
            assert len(members) == (1 if members[0].is_involution else 2)


def test_class_fibres_partition_the_diagrams():
    for n in range(2, 6):
        covered = [diagram for members in inverse_classes(n) for diagram in class_fibre(members[0], n)]
        assert sorted(covered, key=str) == sorted(enumerate_diagrams(n), key=str)


def test_n4_fibre_sizes():
    sizes = sorted(len(fibre(sigma, 4)) for sigma in enumerate_derangements(4))
    assert sizes == [4, 4, 4, 8, 8, 8, 8, 8, 8]


def test_all_signs_are_lexicographic():
    signs = list(all_signs(2))
    assert len(signs) == 16
    assert signs[0].notation == "(++)(++)"
    assert signs[-1].notation == "(--)(--)"
    assert [s.notation for s in signs] == sorted(s.notation for s in signs)


def test_sign_parse_accepts_typographic_minus():
    assert SignAssignment.parse("(+−)(−+)").notation == "(+-)(-+)"
    with pytest.raises(InvalidDiagramError):
        SignAssignment.parse("(+)")


def test_signs_partition_the_diagrams():
    for n in range(1, 6):
        total = 0
        for sign in all_signs(n):
            compatible = diagrams_for_sign(n, sign)
            if sign.plus_count() != n:
                assert compatible == []
            for diagram in compatible:
                assert induced_sign(diagram) == sign
            total += len(compatible)
        assert total == len(enumerate_diagrams(n))


def test_induced_sign_marks_the_earlier_endpoint_plus():
    diagram = Diagram.from_labels(2, [["a1", "b2"], ["b1", "a2"]])
    assert induced_sign(diagram).notation == "(++)(--)"


def test_delete_edge_keeps_the_cycle_count():
    checked = 0
    for n in (3, 4, 5):
        for diagram in enumerate_diagrams(n):
            for i in range(1, n):
                if len(diagram.edges_between(i, i + 1)) != 1:
                    continue
                smaller = delete_edge(diagram, i)
                assert smaller.n == n - 1
                assert diagram_to_derangement(smaller).cycle_count == diagram_to_derangement(diagram).cycle_count
                checked += 1
    assert checked > 0


def test_delete_edge_merges_the_surviving_endpoints():
    diagram = Diagram.from_labels(3, [["a1", "b2"], ["b1", "a3"], ["a2", "b3"]])
    smaller = delete_edge(diagram, 1)
    # survivors b1 and a2 become the new pair 1 as (a2, b1): a3 -> a2, b3 -> b2
    assert smaller == Diagram.from_labels(2, [["b1", "a2"], ["a1", "b2"]])


def test_delete_edge_needs_exactly_one_edge():
    diagram = Diagram.from_labels(2, [["a1", "a2"], ["b1", "b2"]])
    with pytest.raises(InvalidDiagramError):
        delete_edge(diagram, 1)
    with pytest.raises(InvalidDiagramError):
        delete_edge_pair(Diagram.from_labels(3, [["a1", "b2"], ["b1", "a3"], ["a2", "b3"]]), 1)


def test_delete_edge_pair_removes_one_cycle():
    for n in (2, 4, 5):
        for diagram in enumerate_diagrams(n):
            for i in range(1, n):
                if len(diagram.edges_between(i, i + 1)) != 2:
                    continue
                smaller = delete_edge_pair(diagram, i)
                before = diagram_to_derangement(diagram).cycle_count
                after = diagram_to_derangement(smaller).cycle_count if smaller.n >= 2 else 0
                assert after == before - 1


def test_endpoint_labels():
    endpoint = Endpoint.parse("b12")
    assert endpoint.pair == 12
    assert endpoint.mate.label == "a12"
    with pytest.raises(InvalidDiagramError):
        Endpoint.parse("c1")
