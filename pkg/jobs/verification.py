"""
Seeded verification suite: closed forms against the brute-force Fock module.

Every check compares exact polynomials in r. A series coefficient is compared on every
exponent tuple whose suffix sums of e_v + μ_v lie in [0, bound]; the correlators vanish
on tuples with a negative suffix sum because the intermediate states would have
negative degree.
"""

import logging
import random
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from algebra_layer import (
    BilinearSpace,
    CentralPoly,
    DegenerateFormError,
    Rational,
    TensorElement,
    Vector,
    expand_coordinates,
    format_rational,
    jordan_generator,
    jordan_product,
)
from combinatorics_layer import (
    Sign,
    SignAssignment,
    diagram_to_derangement,
    enumerate_derangements,
    enumerate_diagrams,
    class_fibre,
    fibre,
    inverse_classes,
)
from correlator_layer import (
    CorrelatorTerm,
    LaurentSeries,
    PairSequence,
    diagonal_collapse,
    evaluate_terms,
    fibre_gamma_sum,
    gamma_sigma_T,
    iota_expand,
    lemma2_terms,
    merge_inverse_pairs,
    prop2_domain,
    prop2_terms,
    theorem1_domain,
    theorem1_terms,
)
from oracle_layer import FockModule, check_prop1

logger = logging.getLogger(__name__)

ExponentTuple = Tuple[int, ...]


@dataclass
class CheckResult:
    """Outcome of one named check on one dataset (None for data-independent checks)."""
    name: str
    dataset: Optional[int] = None
    cases: int = 0
    mismatches: int = 0
    first_mismatch: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.mismatches == 0

    def compare(self, expected: Any, actual: Any, where: Dict[str, Any]) -> None:
        self.cases += 1
        if expected == actual:
            return
        self.mismatches += 1
        if self.first_mismatch is None:
            self.first_mismatch = dict(where, expected=_encode(expected), actual=_encode(actual))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "dataset": self.dataset,
            "passed": self.passed,
            "cases": self.cases,
            "mismatches": self.mismatches,
            "first_mismatch": self.first_mismatch,
        }


def _encode(value: Any) -> Any:
    if isinstance(value, CentralPoly):
        return value.to_json()
    if isinstance(value, Rational):
        return format_rational(value)
    return value


def bounded_exponents(multiplicities: Sequence[int], bound: int) -> Iterator[ExponentTuple]:
    """
    Exponent tuples of total Σ e_v = -Σ μ_v whose proper suffix sums of e_v + μ_v lie in [0, bound].

    Writing s_t for the suffix sum starting at position t, the tuple is
    e_t = s_t - s_{t+1} - μ_t with s_1 = s_{k+1} = 0.
    """
    k = len(multiplicities)
    if k == 0:
        yield ()
        return
    for middle in product(range(bound + 1), repeat=k - 1):
        suffix = (0,) + middle + (0,)
        yield tuple(suffix[t] - suffix[t + 1] - multiplicities[t] for t in range(k))


def _series_coefficient(series: Optional[LaurentSeries], exponents: ExponentTuple) -> CentralPoly:
    """Closed-form coefficient; an empty term list is the zero series."""
    if series is None:
        return CentralPoly.zero()
    return series.coefficient(exponents)


def _expand(terms: Sequence[CorrelatorTerm], domain, bound: int) -> Optional[LaurentSeries]:
    return iota_expand(terms, domain, bound) if terms else None


def _sign_of_modes(modes: Sequence[Tuple[int, int]]) -> SignAssignment:
    return SignAssignment(tuple(
        (Sign.PLUS if m >= 0 else Sign.MINUS, Sign.PLUS if n >= 0 else Sign.MINUS)
        for m, n in modes
    ))


def _modes_from_exponents(exponents: ExponentTuple) -> Tuple[Tuple[int, int], ...]:
    """(z_1, w_1, z_2, w_2, ...) exponents to the modes (m_i, n_i) with e = -mode - 1."""
    return tuple(
        (-exponents[2 * i] - 1, -exponents[2 * i + 1] - 1) for i in range(len(exponents) // 2)
    )


def is_vacuous(T: PairSequence) -> bool:
    """True when n ≥ 2 and every derangement-sum coefficient vanishes, so the checks compare zeros."""
    return T.n >= 2 and not theorem1_terms(T)


def corrupt_terms(terms: List[CorrelatorTerm]) -> List[CorrelatorTerm]:
    """Negative control: add r^{c(σ)} to the first coefficient Γ(σ,T) r^{c(σ)}."""
    if not terms:
        logger.warning("No nonzero term to corrupt; the corrupted run is unchanged")
        return terms
    first = terms[0]
    power = first.r_power or 0
    perturbed = CorrelatorTerm(
        first.coefficient + CentralPoly.monomial(1, power), first.denominator, first.label, first.diagram
    )
    return [perturbed] + terms[1:]


class VerificationSuite:
    """
    Runs every check on a list of datasets with one seeded generator.

    All randomness (datasets, evaluation points, Griess samples) is drawn from
    ``random.Random(seed)`` in a fixed order, so a seed determines the whole report.
    """

    def __init__(self, settings: Dict[str, Any], seed: int, bound: int, corrupt: bool = False):
        """
        Initialize the suite.

        Args:
            settings: Merged job configuration (sections verification and oracle are used)
            seed: Seed of the single random generator
            bound: Cut-degree bound of the series comparisons
            corrupt: Perturb one derangement-sum coefficient before comparing
        """
        self.settings = settings
        self.verification = settings["verification"]
        self.seed = seed
        self.bound = bound
        self.corrupt = corrupt
        self.rng = random.Random(seed)
        self.stats = {
            "datasets": 0,
            "checks_run": 0,
            "cases_compared": 0,
            "oracle_correlators": 0,
            "vacuous_datasets": [],
        }

    # -- data ---------------------------------------------------------------

    def _random_rational(self, span: int = 3, denominators: int = 2) -> Rational:
        return QQ(self.rng.randint(-span, span), self.rng.randint(1, denominators))

    def random_space(self, dim: int) -> BilinearSpace:
        """A random symmetric non-degenerate Gram matrix with small rational entries."""
        while True:
            rows = [[QQ.zero] * dim for _ in range(dim)]
            for i in range(dim):
                for j in range(i, dim):
                    rows[i][j] = rows[j][i] = self._random_rational()
            try:
                return BilinearSpace.from_rows(rows)
            except DegenerateFormError:
                continue

    def random_vector(self, dim: int) -> Vector:
        """A nonzero vector with small rational coordinates."""
        while True:
            coordinates = [self._random_rational() for _ in range(dim)]
            if any(coordinates):
                return Vector.of(coordinates)

    def random_pair_sequence(self, n: int, dim: int) -> PairSequence:
        """A random sequence whose derangement sum does not vanish (redrawn otherwise)."""
        while True:
            space = self.random_space(dim)
            T = PairSequence(space, tuple(
                (self.random_vector(dim), self.random_vector(dim)) for _ in range(n)
            ))
            if not is_vacuous(T):
                return T

    def random_datasets(self, n: int, dim: int, count: int) -> List[PairSequence]:
        return [self.random_pair_sequence(n, dim) for _ in range(count)]

    def random_points(self, n: int) -> List[Rational]:
        """n pairwise distinct rationals."""
        values: List[Rational] = []
        while len(values) < n:
            candidate = QQ(self.rng.randint(-20, 20), self.rng.randint(1, 5))
            if candidate not in values:
                values.append(candidate)
        return values

    def random_symmetric_tensor(self, space: BilinearSpace) -> TensorElement:
        total = TensorElement(())
        for i in range(space.dim):
            for j in range(i, space.dim):
                coeff = self._random_rational()
                if coeff:
                    generator = jordan_generator(space.basis_vector(i), space.basis_vector(j))
                    total = total + generator.scale(coeff)
        return total

    # -- checks -------------------------------------------------------------

    def check_fibres(self, n: int) -> CheckResult:
        """Every fibre of D -> σ_D has 2^{n-c(σ)} diagrams, all mapping to σ, and they cover all diagrams."""
        result = CheckResult("fibre_sizes")
        if n == 1:
            result.compare(0, len(enumerate_derangements(n)), {"n": n, "quantity": "derangements"})
            result.compare(0, len(enumerate_diagrams(n)), {"n": n, "quantity": "total diagrams"})
        if n < 2:
            return result
        total = 0
        for sigma in enumerate_derangements(n):
            diagrams = fibre(sigma, n)
            total += len(diagrams)
            result.compare(2 ** (n - sigma.cycle_count), len(diagrams),
                           {"cycles": sigma.notation, "quantity": "fibre size"})
            for diagram in diagrams:
                result.compare(sigma.notation, diagram_to_derangement(diagram).notation,
                               {"cycles": sigma.notation, "diagram": diagram.to_json()})
        result.compare(len(enumerate_diagrams(n)), total, {"n": n, "quantity": "total diagrams"})
        return result

    def check_theorem1_oracle(self, index: int, T: PairSequence, module: FockModule) -> CheckResult:
        """Single-variable series coefficients against the field-mode correlators."""
        result = CheckResult("theorem1_oracle", index)
        terms = theorem1_terms(T)
        if self.corrupt:
            terms = corrupt_terms(terms)
        domain = theorem1_domain(T.n)
        series = _expand(terms, domain, self.bound)
        for exponents in bounded_exponents([2] * T.n, self.bound):
            ls = tuple(-e - 1 for e in exponents)
            result.compare(
                _series_coefficient(series, exponents),
                module.field_correlator_coeff(T, ls),
                {"variables": [v.name for v in domain], "exponents": list(exponents), "modes": list(ls)},
            )
        return result

    def check_prop2_oracle(self, index: int, T: PairSequence, module: FockModule) -> CheckResult:
        """Two-variable series coefficients against the mode correlators."""
        result = CheckResult("prop2_oracle", index)
        domain = prop2_domain(T.n)
        series = _expand(prop2_terms(T), domain, self.bound)
        for exponents in bounded_exponents([1] * (2 * T.n), self.bound):
            modes = _modes_from_exponents(exponents)
            result.compare(
                _series_coefficient(series, exponents),
                module.mode_correlator(T, modes),
                {"variables": [v.name for v in domain], "exponents": list(exponents),
                 "modes": [list(pair) for pair in modes]},
            )
        return result

    def check_signed(self, index: int, T: PairSequence, module: FockModule) -> CheckResult:
        """
        Signed series against signed correlators.

        A tuple can only be seen by the sign of its own modes, so each tuple is compared
        with that sign; each signed series must also vanish off its sign.
        """
        result = CheckResult("signed_oracle", index)
        domain = prop2_domain(T.n)
        series_by_sign: Dict[SignAssignment, Optional[LaurentSeries]] = {}
        for exponents in bounded_exponents([1] * (2 * T.n), self.bound):
            modes = _modes_from_exponents(exponents)
            sign = _sign_of_modes(modes)
            if sign not in series_by_sign:
                series_by_sign[sign] = _expand(lemma2_terms(T, sign), domain, self.bound)
            result.compare(
                _series_coefficient(series_by_sign[sign], exponents),
                module.signed_mode_correlator(T, modes, sign),
                {"sign": sign.notation, "exponents": list(exponents)},
            )
        for sign, series in series_by_sign.items():
            if series is None:
                continue
            for exponents, _ in series.items():
                result.compare(sign.notation, _sign_of_modes(_modes_from_exponents(exponents)).notation,
                               {"sign": sign.notation, "exponents": list(exponents), "quantity": "support"})
        return result

    def check_fibre_sums(self, index: int, T: PairSequence) -> CheckResult:
        """
        Σ Γ(D) 2^{-n} over fibre(σ) ∪ fibre(σ⁻¹) equals Γ(σ,T) + Γ(σ⁻¹,T), and Γ(σ,T) = Γ(σ⁻¹,T).

        A single fibre is not compared: for a cycle of length t ≥ 3 its sum depends on
        which endpoint of the starting pair is left first.
        """
        result = CheckResult("fibre_sum", index)
        if T.n < 2:
            return result
        for members in inverse_classes(T.n):
            representative = members[0]
            gammas = [gamma_sigma_T(sigma, T) for sigma in members]
            result.compare(sum(gammas, QQ.zero), fibre_gamma_sum(class_fibre(representative, T.n), T),
                           {"cycles": representative.notation, "quantity": "class fibre sum"})
            if len(gammas) == 2:
                result.compare(gammas[0], gammas[1],
                               {"cycles": representative.notation, "quantity": "inverse symmetry"})
        return result

    def check_diagonal(self, index: int, T: PairSequence) -> CheckResult:
        """
        w_i := z_i in the diagram sum gives the derangement sum.

        Symbolically the terms are compared per class {σ, σ⁻¹}; at random points the
        full sums are compared.
        """
        result = CheckResult("diagonal", index)
        two_variable = prop2_terms(T)
        one_variable = theorem1_terms(T)
        result.compare(
            [term.to_json() for term in merge_inverse_pairs(one_variable, T.n)],
            [term.to_json() for term in diagonal_collapse(two_variable)],
            {"quantity": "collapsed term list"},
        )
        for _ in range(self.verification["diagonal_points"]):
            values = self.random_points(T.n)
            z_points = {f"z{i}": v for i, v in enumerate(values, start=1)}
            zw_points = dict(z_points)
            zw_points.update({f"w{i}": v for i, v in enumerate(values, start=1)})
            result.compare(
                evaluate_terms(one_variable, z_points),
                evaluate_terms(two_variable, zw_points),
                {"points": {name: format_rational(v) for name, v in z_points.items()}},
            )
        return result

    def check_griess(self, index: int, T: PairSequence, module: FockModule) -> CheckResult:
        """x(1)y computed in the Fock module equals the Jordan product x∘y."""
        result = CheckResult("griess_product", index)
        space = T.space
        for _ in range(self.verification["griess_samples"]):
            x = self.random_symmetric_tensor(space)
            y = self.random_symmetric_tensor(space)
            expected = expand_coordinates(jordan_product(x, y, space), space.dim)
            actual = expand_coordinates(module.griess_product(x, y), space.dim)
            result.compare(
                [[format_rational(v) for v in row] for row in expected],
                [[format_rational(v) for v in row] for row in actual],
                {"x": [[format_rational(v) for v in row] for row in expand_coordinates(x, space.dim)],
                 "y": [[format_rational(v) for v in row] for row in expand_coordinates(y, space.dim)]},
            )
        return result

    @staticmethod
    def is_virasoro_data(T: PairSequence) -> bool:
        unit = Vector.of([1])
        return T.space.gram == ((QQ.one,),) and all(a == unit and b == unit for a, b in T.pairs)

    def check_virasoro(self, index: int, T: PairSequence) -> CheckResult:
        """Each coefficient equals (r/2)^{c(σ)}."""
        result = CheckResult("virasoro_coefficients", index)
        for term in theorem1_terms(T):
            sigma_count = term.r_power or 0
            result.compare(CentralPoly.monomial(QQ(1, 2 ** sigma_count), sigma_count), term.coefficient,
                           {"cycles": term.label})
        return result

    def check_commutators(self, space: BilinearSpace, index: int) -> CheckResult:
        window = self.settings["oracle"]["prop1_window"]
        report = check_prop1(space, window=window)
        result = CheckResult("prop1_commutators", index, report.checked, report.mismatches,
                             report.first_discrepancy)
        return result

    # -- driver -------------------------------------------------------------

    def run(self, datasets: Sequence[PairSequence], n: int) -> List[CheckResult]:
        """
        Run all checks in a fixed order.

        Args:
            datasets: Pair sequences, all with n pairs
            n: Number of pairs

        Returns:
            Check results in execution order
        """
        if self.bound < 2 * n:
            logger.warning("Truncation bound %d is below 2n = %d; few coefficients are compared",
                           self.bound, 2 * n)
        results = [self.check_fibres(n)]
        seen_spaces: List[BilinearSpace] = []
        for index, T in enumerate(datasets):
            self.stats["datasets"] += 1
            if is_vacuous(T):
                logger.warning("Dataset %d has a vanishing derangement sum; its comparisons are all zero", index)
                self.stats["vacuous_datasets"].append(index)
            module = FockModule(T.space, self.settings["oracle"])
            results.append(self.check_theorem1_oracle(index, T, module))
            results.append(self.check_prop2_oracle(index, T, module))
            results.append(self.check_signed(index, T, module))
            results.append(self.check_fibre_sums(index, T))
            results.append(self.check_diagonal(index, T))
            results.append(self.check_griess(index, T, module))
            if self.is_virasoro_data(T):
                results.append(self.check_virasoro(index, T))
            if self.verification["check_prop1"] and T.space not in seen_spaces:
                seen_spaces.append(T.space)
                results.append(self.check_commutators(T.space, index))
            module_stats = module.get_statistics()
            self.stats["oracle_correlators"] += module_stats["statistics"]["correlators_computed"]
            logger.debug("Dataset %d oracle statistics: %s", index, module_stats)
        self.stats["checks_run"] = len(results)
        self.stats["cases_compared"] = sum(result.cases for result in results)
        failed = [result for result in results if not result.passed]
        logger.info("Verification: %d checks, %d cases, %d failed",
                    len(results), self.stats["cases_compared"], len(failed))
        return results

    def get_statistics(self) -> Dict[str, Any]:
        stats = self.stats.copy()
        stats["vacuous_datasets"] = list(self.stats["vacuous_datasets"])
        return stats
