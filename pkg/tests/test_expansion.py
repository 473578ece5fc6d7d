"""Tests for ι-expansion into truncated Laurent series."""

import pytest
from sympy.polys.domains import QQ

from algebra_layer import CentralPoly, pairing
from correlator_layer import (
    CorrelatorTerm,
    ExpansionDomainError,
    PairSequence,
    SqDiffFactor,
    TruncationError,
    VariableTag,
    cut_degree,
    iota_expand,
    prop2_domain,
    prop2_terms,
    theorem1_domain,
    theorem1_terms,
)

z1, z2, z3 = (VariableTag.z(i) for i in (1, 2, 3))


def single_factor(left=z1, right=z2, multiplicity=1):
    return CorrelatorTerm(CentralPoly.one(), (SqDiffFactor(left, right, multiplicity),))


def test_inverse_square_coefficients():
    series = iota_expand([single_factor()], (z1, z2), 3)
    for j in range(3):
        assert series.coefficient((-2 - j, j)) == CentralPoly.constant(j + 1)
    assert series.coefficient((-3, 2)) == CentralPoly.zero()
    with pytest.raises(TruncationError):
        series.coefficient((-5, 3))


def test_orientation_follows_the_domain_not_the_factor():
    forward = iota_expand([single_factor(z1, z2)], (z1, z2), 4)
    backward = iota_expand([single_factor(z2, z1)], (z1, z2), 4)
    assert forward.coeffs == backward.coeffs
    swapped = iota_expand([single_factor(z1, z2)], (z2, z1), 4)
    assert swapped.coefficient((-2, 0)) == CentralPoly.one()
    assert swapped.coefficient((-3, 1)) == CentralPoly.constant(2)


def test_inverse_fourth_power():
    # 1/(z - w)^4 = Σ_k C(k + 2, 3) z^{-k-3} w^{k-1}
    series = iota_expand([single_factor(multiplicity=2)], (z1, z2), 6)
    for k in range(1, 5):
        assert series.coefficient((-k - 3, k - 1)) == CentralPoly.constant((k + 2) * (k + 1) * k // 6)


def test_cut_degree():
    assert cut_degree((-4, 0), (2, 2)) == 2
    assert cut_degree((0, 0), (1, 1)) == 2
    assert cut_degree((), ()) == 0
    assert cut_degree((-3, -3), (1, 1)) == 0


def test_two_pair_leading_coefficient(generic_sequence):
    T = PairSequence(generic_sequence.space, generic_sequence.pairs[:2])
    (a1, b1), (a2, b2) = T.pairs
    p = lambda x, y: pairing(x, y, T.space)
    gamma = QQ(1, 4) * (p(a1, a2) * p(b1, b2) + p(a1, b2) * p(b1, a2))
    series = iota_expand(theorem1_terms(T), theorem1_domain(2), 4)
    assert series.coefficient((-4, 0)) == CentralPoly.monomial(gamma, 1)
    two_variable = iota_expand(prop2_terms(T), prop2_domain(2), 4)
    assert two_variable.coefficient((-2, -2, 0, 0)) == CentralPoly.monomial(gamma, 1)


def test_series_of_an_empty_term_list_is_zero():
    series = iota_expand([], (z1, z2), 3)
    assert len(series) == 0
    assert series.coefficient((0, 0)) == CentralPoly.zero()


def test_coefficients_are_polynomials_in_r():
    terms = [
        CorrelatorTerm(CentralPoly.monomial(QQ(1, 2), 1), (SqDiffFactor(z1, z2),)),
        CorrelatorTerm(CentralPoly.constant(3), (SqDiffFactor(z2, z1),)),
    ]
    series = iota_expand(terms, (z1, z2), 2)
    assert series.coefficient((-3, 1)) == CentralPoly.from_coefficients([6, 1])


def test_missing_variable():
    with pytest.raises(ExpansionDomainError):
        iota_expand([single_factor(z1, z3)], (z1, z2), 3)


def test_variable_listed_twice():
    with pytest.raises(ExpansionDomainError):
        iota_expand([single_factor()], (z1, z2, z1), 3)


def test_terms_must_agree_on_multiplicities():
    terms = [single_factor(z1, z2), single_factor(z1, z3)]
    with pytest.raises(ExpansionDomainError, match=r"Term 1 .*z2:0, z3:1.*first term has z1:1, z2:1, z3:0"):
        iota_expand(terms, (z1, z2, z3), 3)


def test_wrong_tuple_length():
    series = iota_expand([single_factor()], (z1, z2), 3)
    with pytest.raises(ExpansionDomainError):
        series.coefficient((-2,))


def test_negative_bound():
    with pytest.raises(TruncationError):
        iota_expand([single_factor()], (z1, z2), -1)


def test_series_json():
    data = iota_expand([single_factor()], (z1, z2), 1).to_json()
    assert data == {
        "variables": ["z1", "z2"],
        "bound": 1,
        "terms": [{"exponents": [-2, 0], "coeff": ["1"]}],
    }
