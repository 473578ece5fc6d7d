"""
Coefficient-level check of the closed commutation formulas for two-variable series.

For L^{++}_{a,b}(x,y) against L^{--}_{u,v}(z,w), L^{-+}_{u,v}(z,w) or L^{++}_{u,v}(z,w),
the right-hand sides are sums of ι-expanded factors (s - t)^{-2} times a signed series
or a multiple of r. Each sampled coefficient of x^{-m-1} y^{-n-1} z^{-p-1} w^{-q-1}
is read off those right-hand sides and compared with [L_{a,b}(m,n), L_{u,v}(p,q)]_new.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from algebra_layer import BilinearSpace, CentralPoly, Rational
from correlator_layer import CorrelatorTerm, LaurentSeries, SqDiffFactor, VariableTag, iota_expand, prop2_domain
from ..models.fock_types import Prop1Report, QuadElement, QuadGenerator
from ..exceptions import ModeWindowError
from .quadratic_algebra import bracket_new

logger = logging.getLogger(__name__)

HALF = QQ(1, 2)
QUARTER = QQ(1, 4)

# positions of x, y, z, w in the operator-order domain (z1, w1, z2, w2)
X, Y, Z, W = range(4)
DOMAIN = prop2_domain(2)

ModeQuad = Tuple[int, int, int, int]


@dataclass(frozen=True)
class _RhsTerm:
    """weight · ∏ ι(s - t)^{-2} · (series L^{signs}_{α,β}(var1, var2), or r when absent)."""
    weight: Rational
    factors: Tuple[Tuple[int, int], ...]
    operator: Optional[Tuple[int, int, int, int]] = None
    signs: Tuple[bool, bool] = (False, True)


def _rhs_terms(a: int, b: int, u: int, v: int, second: str, space: BilinearSpace) -> List[_RhsTerm]:
    gram = space.gram
    if second == "--":
        return [
            _RhsTerm(HALF * gram[b][v], ((Y, W),), (u, Z, a, X)),
            _RhsTerm(HALF * gram[a][v], ((X, W),), (u, Z, b, Y)),
            _RhsTerm(HALF * gram[a][u], ((X, Z),), (v, W, b, Y)),
            _RhsTerm(HALF * gram[b][u], ((Y, Z),), (v, W, a, X)),
            _RhsTerm(QUARTER * gram[a][u] * gram[b][v], ((X, Z), (Y, W))),
            _RhsTerm(QUARTER * gram[a][v] * gram[b][u], ((X, W), (Y, Z))),
        ]
    if second == "-+":
        return [
            _RhsTerm(HALF * gram[a][u], ((X, Z),), (b, Y, v, W), (True, True)),
            _RhsTerm(HALF * gram[b][u], ((Y, Z),), (a, X, v, W), (True, True)),
        ]
    return []


def _sign_class(p: int, q: int) -> str:
    return ("+" if p >= 0 else "-") + ("+" if q >= 0 else "-")


def default_sample_modes(window: int) -> List[ModeQuad]:
    """All (m, n, p, q) with m, n in [0, window] and p, q in [-window, window], skipping the +- class."""
    sample = []
    for m, n in product(range(window + 1), repeat=2):
        for p, q in product(range(-window, window + 1), repeat=2):
            if _sign_class(p, q) != "+-":
                sample.append((m, n, p, q))
    return sample


class _SeriesBook:
    """ι-expansions of the products of cross factors, computed once per bound."""

    def __init__(self, bound: int):
        self.bound = bound
        self._series: Dict[Tuple[Tuple[int, int], ...], LaurentSeries] = {}

    def coefficient(self, factors: Tuple[Tuple[int, int], ...], exponents: Sequence[int]) -> CentralPoly:
        if factors not in self._series:
            term = CorrelatorTerm(
                CentralPoly.one(),
                tuple(SqDiffFactor(DOMAIN[s], DOMAIN[t]) for s, t in factors),
            )
            self._series[factors] = iota_expand([term], DOMAIN, self.bound)
        used = {position for pair in factors for position in pair}
        restricted = tuple(e if k in used else 0 for k, e in enumerate(exponents))
        return self._series[factors].coefficient(restricted)


def _rhs_coefficient(terms: List[_RhsTerm], modes: ModeQuad, book: _SeriesBook) -> QuadElement:
    exponents = tuple(-mode - 1 for mode in modes)
    quad: Dict[QuadGenerator, CentralPoly] = {}
    central = CentralPoly.zero()
    for term in terms:
        if not term.weight:
            continue
        scalar = book.coefficient(term.factors, exponents)
        if not scalar:
            continue
        if term.operator is None:
            central = central + scalar * term.weight
            continue
        alpha, first, beta, second = term.operator
        mode_first, mode_second = modes[first], modes[second]
        if (mode_first >= 0) != term.signs[0] or (mode_second >= 0) != term.signs[1]:
            continue
        gen = QuadGenerator.make(alpha, mode_first, beta, mode_second)
        quad[gen] = quad.get(gen, CentralPoly.zero()) + scalar * term.weight
    return QuadElement.from_parts(quad, central)


def check_prop1(space: BilinearSpace, sample_modes: Optional[Sequence[ModeQuad]] = None,
                window: int = 3) -> Prop1Report:
    """
    Compare exact commutators with the closed formulas on sampled mode quadruples.

    Every basis quadruple (a, b, u, v) is combined with every sampled (m, n, p, q);
    the first operator must have m, n ≥ 0. A +- second operator is rewritten as
    L_{v,u}(q, p), which lies in the -+ class.

    Args:
        space: Space whose basis supplies a, b, u, v
        sample_modes: Mode quadruples; defaults to the full window
        window: Largest absolute mode used by the default sample

    Returns:
        Prop1Report with the number of checks and the first discrepancy

    Raises:
        ModeWindowError: If a sampled first operator has a negative mode
    """
    sample = list(sample_modes) if sample_modes is not None else default_sample_modes(window)
    largest = max((abs(mode) for quad in sample for mode in quad), default=0)
    book = _SeriesBook(2 * largest + 2)
    report = Prop1Report()
    indices = range(space.dim)
    for m, n, p, q in sample:
        if m < 0 or n < 0:
            raise ModeWindowError(f"First operator must have non-negative modes, got ({m}, {n})")
        for a, b, u, v in product(indices, repeat=4):
            second_u, second_p, second_v, second_q = u, p, v, q
            if _sign_class(p, q) == "+-":
                second_u, second_p, second_v, second_q = v, q, u, p
            modes = (m, n, second_p, second_q)
            expected = _rhs_coefficient(
                _rhs_terms(a, b, second_u, second_v, _sign_class(second_p, second_q), space), modes, book
            )
            actual = bracket_new(
                QuadGenerator.make(a, m, b, n),
                QuadGenerator.make(second_u, second_p, second_v, second_q),
                space,
            )
            report.checked += 1
            if actual != expected:
                report.mismatches += 1
                if report.first_discrepancy is None:
                    report.first_discrepancy = {
                        "basis": [a, b, u, v],
                        "modes": [m, n, p, q],
                        "commutator": actual.to_json(),
                        "closed_form": expected.to_json(),
                    }
    logger.info("Commutation check: %d cases, %d mismatches", report.checked, report.mismatches)
    return report
