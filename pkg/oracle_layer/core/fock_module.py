"""
Main Oracle Layer orchestrator: the induced module M_r and brute-force correlators.

M_r is spanned by PBW monomials of creation generators on the vacuum 1, with
𝔅₊·1 = 0 and c·1 = r·1. A generator with a non-negative mode is commuted through a
monomial X_1 X_2 ... X_k one factor at a time:

    g · X_1 (X_2 ... X_k 1) = [g, X_1]_new (X_2 ... X_k 1) + X_1 (g · X_2 ... X_k 1).
"""

import logging
from typing import Any, Dict, List, Sequence, Tuple

from sympy.polys.domains import QQ

from algebra_layer import BilinearSpace, CentralPoly, Rational, TensorElement, TensorTerm, Vector
from combinatorics_layer import Sign, SignAssignment
from correlator_layer import PairSequence
from ..config import OracleConfigManager
from ..models.fock_types import FockState, Monomial, QuadElement, QuadGenerator, insert_generator, monomial_degree
from ..exceptions import OracleError, RecursionDepthError
from .quadratic_algebra import bracket_new

logger = logging.getLogger(__name__)

HALF = QQ(1, 2)


class FockModule:
    """
    Brute-force evaluation of correlators in M_r over one bilinear space.

    Brackets, generator actions on monomials and the states of operator suffixes are
    memoized; the caches are only valid for the space the module was built with.
    """

    def __init__(self, space: BilinearSpace, config: Dict[str, Any] = None):
        """
        Initialize the module.

        Args:
            space: The space (h, (.,.)) providing basis indices and pairings
            config: Oracle settings (max_depth, cache_monomials, cache_suffix_states)
        """
        self.space = space
        self.config = OracleConfigManager.merge_configs(OracleConfigManager.get_default_config(), config or {})
        OracleConfigManager.validate_config(self.config)
        self.max_depth = self.get_config_value("max_depth", 256)

        self._brackets: Dict[Tuple[QuadGenerator, QuadGenerator], QuadElement] = {}
        self._actions: Dict[Tuple[QuadGenerator, Monomial], Dict[Monomial, CentralPoly]] = {}
        self._suffixes: Dict[Tuple[Any, ...], FockState] = {}

        self.stats = {
            "generators_applied": 0,
            "action_cache_hits": 0,
            "action_cache_misses": 0,
            "suffix_cache_hits": 0,
            "correlators_computed": 0,
        }

    # -- algebra ------------------------------------------------------------

    def bracket(self, g: QuadGenerator, h: QuadGenerator) -> QuadElement:
        key = (g, h)
        if key not in self._brackets:
            self._brackets[key] = bracket_new(g, h, self.space)
        return self._brackets[key]

    def _act(self, g: QuadGenerator, monomial: Monomial, depth: int) -> Dict[Monomial, CentralPoly]:
        """Action of a 𝔅₊ generator on a PBW monomial."""
        if depth > self.max_depth:
            raise RecursionDepthError(f"Commutation depth exceeded {self.max_depth} while applying {g}")
        if not monomial or g.shift > monomial_degree(monomial):
            return {}
        key = (g, monomial)
        if self.get_config_value("cache_monomials", True) and key in self._actions:
            self.stats["action_cache_hits"] += 1
            return self._actions[key]
        self.stats["action_cache_misses"] += 1

        first, rest = monomial[0], monomial[1:]
        result: Dict[Monomial, CentralPoly] = {}
        commutator = self.bracket(g, first)
        if commutator.central:
            result[rest] = commutator.central * CentralPoly.r()
        for h, coeff in commutator.quad:
            for mono, value in self._apply_to_monomial(h, rest, depth + 1).items():
                result[mono] = result.get(mono, CentralPoly.zero()) + coeff * value
        for mono, value in self._act(g, rest, depth + 1).items():
            extended = insert_generator(mono, first)
            result[extended] = result.get(extended, CentralPoly.zero()) + value
        result = {mono: value for mono, value in result.items() if value}

        if self.get_config_value("cache_monomials", True):
            self._actions[key] = result
        return result

    def _apply_to_monomial(self, g: QuadGenerator, monomial: Monomial, depth: int) -> Dict[Monomial, CentralPoly]:
        if g.is_creation:
            return {insert_generator(monomial, g): CentralPoly.one()}
        return self._act(g, monomial, depth)

    def apply_generator(self, g: QuadGenerator, state: FockState) -> FockState:
        """
        Apply one generator to a state.

        Creation generators multiply into every monomial; all others are commuted
        through and annihilate the vacuum.

        Raises:
            RecursionDepthError: If the depth guard trips
        """
        self.stats["generators_applied"] += 1
        result: Dict[Monomial, CentralPoly] = {}
        for monomial, coeff in state.terms.items():
            for mono, value in self._apply_to_monomial(g, monomial, 0).items():
                result[mono] = result.get(mono, CentralPoly.zero()) + coeff * value
        return FockState.from_terms(result)

    def _basis_pairs(self, a: Vector, b: Vector) -> List[Tuple[Rational, int, int]]:
        self.space.check_vector(a)
        self.space.check_vector(b)
        return [(alpha * beta, i, j) for i, alpha in a.support() for j, beta in b.support()]

    def apply_pair_mode(self, a: Vector, b: Vector, m: int, n: int, state: FockState) -> FockState:
        """Apply L_{a,b}(m,n), expanded bilinearly over the basis of h."""
        result = FockState.zero()
        for weight, i, j in self._basis_pairs(a, b):
            result = result + self.apply_generator(QuadGenerator.make(i, m, j, n), state).scale(weight)
        return result

    def apply_field_mode(self, a: Vector, b: Vector, l: int, state: FockState) -> FockState:
        """
        Apply L_{a,b}(l) = Σ_k L_{a,b}(-k+l-1, k) to a state of degree N.

        Only k in [l-1-N, N] can act nonzero: outside that window the larger mode
        exceeds N and the generator annihilates every state of degree at most N.
        """
        top = state.degree()
        if top < 0:
            return FockState.zero()
        result = FockState.zero()
        for k in range(l - 1 - top, top + 1):
            result = result + self.apply_pair_mode(a, b, l - 1 - k, k, state)
        return result

    # -- correlators --------------------------------------------------------

    @staticmethod
    def vacuum_coeff(state: FockState) -> CentralPoly:
        """⟨1′, ψ⟩: the coefficient of the empty monomial."""
        return state.vacuum_coeff

    def _suffix_state(self, key: Tuple[Any, ...], compute) -> FockState:
        if self.get_config_value("cache_suffix_states", True) and key in self._suffixes:
            self.stats["suffix_cache_hits"] += 1
            return self._suffixes[key]
        state = compute()
        if self.get_config_value("cache_suffix_states", True):
            self._suffixes[key] = state
        return state

    def _check_sequence(self, T: PairSequence) -> None:
        if T.space != self.space:
            raise OracleError("Pair sequence lives in a different space than the module")

    def mode_correlator(self, T: PairSequence, modes: Sequence[Tuple[int, int]]) -> CentralPoly:
        """
        ⟨1′, L_{a_1,b_1}(m_1,n_1) ... L_{a_n,b_n}(m_n,n_n) 1⟩ as a polynomial in r.

        Raises:
            OracleError: If the number of modes differs from the number of pairs
        """
        modes = tuple((int(m), int(n)) for m, n in modes)
        self._check_sequence(T)
        if len(modes) != T.n:
            raise OracleError(f"{len(modes)} mode pairs given for {T.n} pairs")
        self.stats["correlators_computed"] += 1
        if sum(m + n for m, n in modes) != 0:
            return CentralPoly.zero()
        state = FockState.vacuum()
        for index in range(T.n - 1, -1, -1):
            a, b = T.pairs[index]
            m, n = modes[index]
            previous = state
            state = self._suffix_state(
                ("modes", T.pairs[index:], modes[index:]),
                lambda: self.apply_pair_mode(a, b, m, n, previous),
            )
            if state.is_zero():
                return CentralPoly.zero()
        return self.vacuum_coeff(state)

    def signed_mode_correlator(self, T: PairSequence, modes: Sequence[Tuple[int, int]],
                               sign: SignAssignment) -> CentralPoly:
        """The mode correlator when the modes follow the sign (mode ≥ 0 is +), else 0."""
        if sign.n != len(modes):
            raise OracleError(f"Sign of length {sign.n} used with {len(modes)} mode pairs")
        for (m, n), (epsilon, delta) in zip(modes, sign.signs):
            if (m >= 0) != (epsilon is Sign.PLUS) or (n >= 0) != (delta is Sign.PLUS):
                return CentralPoly.zero()
        return self.mode_correlator(T, modes)

    def field_correlator_coeff(self, T: PairSequence, ls: Sequence[int]) -> CentralPoly:
        """
        Coefficient of ∏ z_i^{-l_i-1} in ⟨1′, L_{a_1,b_1}(z_1) ... L_{a_n,b_n}(z_n) 1⟩.

        Raises:
            OracleError: If the number of modes differs from the number of pairs
        """
        ls = tuple(int(l) for l in ls)
        self._check_sequence(T)
        if len(ls) != T.n:
            raise OracleError(f"{len(ls)} field modes given for {T.n} pairs")
        self.stats["correlators_computed"] += 1
        if sum(ls) != T.n:
            return CentralPoly.zero()
        state = FockState.vacuum()
        for index in range(T.n - 1, -1, -1):
            a, b = T.pairs[index]
            l = ls[index]
            previous = state
            state = self._suffix_state(
                ("fields", T.pairs[index:], ls[index:]),
                lambda: self.apply_field_mode(a, b, l, previous),
            )
            if state.is_zero():
                return CentralPoly.zero()
        return self.vacuum_coeff(state)

    # -- Virasoro element and Griess algebra --------------------------------

    def virasoro_state(self) -> FockState:
        """ω = Σ_{k,l} (G^-1)_{kl} L_{e_k,e_l}(-1,-1)·1."""
        terms: Dict[Monomial, CentralPoly] = {}
        inverse = self.space.inverse_gram
        for k in range(self.space.dim):
            for l in range(self.space.dim):
                if inverse[k][l]:
                    mono = (QuadGenerator.make(k, -1, l, -1),)
                    terms[mono] = terms.get(mono, CentralPoly.zero()) + CentralPoly.constant(inverse[k][l])
        return FockState.from_terms(terms)

    def weight(self, state: FockState) -> FockState:
        """ω(1) = Σ_{k,l} (G^-1)_{kl} L_{e_k,e_l}(1), the grading operator."""
        inverse = self.space.inverse_gram
        result = FockState.zero()
        for k in range(self.space.dim):
            for l in range(self.space.dim):
                if inverse[k][l]:
                    e_k, e_l = self.space.basis_vector(k), self.space.basis_vector(l)
                    result = result + self.apply_field_mode(e_k, e_l, 1, state).scale(inverse[k][l])
        return result

    def griess_state(self, x: TensorElement) -> FockState:
        """Linear map a⊗b ↦ ½ L_{a,b}(-1,-1)·1, so L_{a,b} ↦ L_{a,b}(-1,-1)·1."""
        terms: Dict[Monomial, CentralPoly] = {}
        for term in x.terms:
            for weight, i, j in self._basis_pairs(term.left, term.right):
                mono = (QuadGenerator.make(i, -1, j, -1),)
                terms[mono] = terms.get(mono, CentralPoly.zero()) + CentralPoly.constant(HALF * term.coeff * weight)
        return FockState.from_terms(terms)

    def state_to_tensor(self, state: FockState) -> TensorElement:
        """
        Inverse of ``griess_state`` on degree-2 states: L_{e_i,e_j}(-1,-1)·1 ↦ e_i⊗e_j + e_j⊗e_i.

        Raises:
            OracleError: If the state is not a combination of L(-1,-1)·1 with rational coefficients
        """
        terms = []
        for mono, coeff in sorted(state.terms.items()):
            if len(mono) != 1 or (mono[0].m, mono[0].n) != (-1, -1):
                raise OracleError(f"State term {[str(g) for g in mono]} is not in the Griess algebra")
            if coeff.degree > 0:
                raise OracleError("Griess algebra coefficients must not depend on r")
            value = coeff.coefficients[0]
            g = mono[0]
            e_i, e_j = self.space.basis_vector(g.i), self.space.basis_vector(g.j)
            terms.append(TensorTerm(value, e_i, e_j))
            terms.append(TensorTerm(value, e_j, e_i))
        return TensorElement(tuple(terms))

    def griess_product(self, x: TensorElement, y: TensorElement) -> TensorElement:
        """x(1)y read back as a tensor; for symmetric x, y it equals the Jordan product x∘y."""
        target = self.griess_state(y)
        result = FockState.zero()
        for term in x.terms:
            result = result + self.apply_field_mode(term.left, term.right, 1, target).scale(HALF * term.coeff)
        return self.state_to_tensor(result)

    # -- bookkeeping --------------------------------------------------------

    def get_config_value(self, key: str, default: Any = None) -> Any:
        """Oracle setting with a fallback for keys missing from the merged config."""
        return self.config.get(key, default)

    def get_statistics(self) -> Dict[str, Any]:
        return {
            "statistics": self.stats.copy(),
            "cached_actions": len(self._actions),
            "cached_suffix_states": len(self._suffixes),
        }

    def clear_caches(self) -> None:
        self._brackets.clear()
        self._actions.clear()
        self._suffixes.clear()
        logger.debug("Cleared oracle caches")
