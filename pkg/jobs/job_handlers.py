"""
Job handlers for the correlator, diagram, verification and Virasoro commands.

Each handler takes a JobConfig and returns (exit code, report). Exit codes: 0 success,
1 verification failure, 2 input error, 3 pole at an evaluation point.
"""
import sys
import logging
from functools import wraps
from pathlib import Path
from typing import Any, Callable, Dict, List, Sequence, Tuple

logger = logging.getLogger(__name__)

# Add parent directory to path
sys.path.append(str(Path(__file__).parent.parent))

from algebra_layer import AlgebraLayerError, CentralPoly, format_rational
from combinatorics_layer import (
    CombinatoricsError,
    diagram_to_derangement,
    enumerate_derangements,
    enumerate_diagrams,
    fibre,
    induced_sign,
)
from correlator_layer import (
    CorrelatorLayerError,
    CorrelatorTerm,
    PairSequence,
    PoleError,
    evaluate_terms,
    iota_expand,
    prop2_domain,
    prop2_terms,
    theorem1_domain,
    theorem1_symbolic,
    theorem1_terms,
)
from oracle_layer import OracleError
from .config import JobConfig
from .exceptions import InputFormatError, JobError
from .input_loader import load_pair_sequence
from .verification import VerificationSuite

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_POLE = 3

JobResult = Tuple[int, Dict[str, Any]]

INPUT_ERRORS = (JobError, AlgebraLayerError, CombinatoricsError, CorrelatorLayerError, OracleError)


def exit_code_for(error: Exception) -> int:
    """Exit code of a failure raised while configuring or running a job."""
    if isinstance(error, PoleError):
        return EXIT_POLE
    return EXIT_INPUT_ERROR


def error_report(header: Dict[str, Any], error: Exception) -> Dict[str, Any]:
    return {"header": header, "status": "ERROR", "error": str(error)}


def _reported(handler: Callable[[JobConfig], JobResult]) -> Callable[[JobConfig], JobResult]:
    """Turn library failures into an exit code and an error report."""
    @wraps(handler)
    def run(cfg: JobConfig) -> JobResult:
        try:
            return handler(cfg)
        except INPUT_ERRORS as e:
            logger.error("%s job failed: %s", cfg.command, e)
            return exit_code_for(e), error_report(cfg.header(), e)
    return run


def _has_input(cfg: JobConfig) -> bool:
    return cfg.input_path is not None or cfg.input_data is not None


def _pair_sequence(cfg: JobConfig) -> PairSequence:
    return load_pair_sequence(cfg.input_path, cfg.input_data)


def _effective_bound(cfg: JobConfig, n: int) -> int:
    return cfg.bound if cfg.bound is not None else 2 * n + 2


def _encode_value(value: Any) -> Any:
    if isinstance(value, CentralPoly):
        return value.to_json()
    return format_rational(value)


def _term_dicts(terms: Sequence[CorrelatorTerm], cfg: JobConfig) -> List[Dict[str, Any]]:
    encoded = []
    for term in terms:
        data = term.to_json()
        if not cfg.symbolic_r:
            data["value_at_r"] = format_rational(term.coefficient.evaluate(cfg.r))
        encoded.append(data)
    return encoded


def _evaluate(terms: Sequence[CorrelatorTerm], cfg: JobConfig) -> Any:
    return _encode_value(evaluate_terms(terms, cfg.points, None if cfg.symbolic_r else cfg.r))


def _symbolic_report(cfg: JobConfig, n: int) -> Dict[str, Any]:
    """The derangement sum with unevaluated traces, for runs without input data."""
    if cfg.points or cfg.prop2 or cfg.expand:
        raise InputFormatError("Evaluation, expansion and the two-variable form need an input file")
    terms = []
    for term in theorem1_symbolic(n):
        data = term.to_json()
        if not cfg.symbolic_r:
            value = CentralPoly.monomial(term.prefactor, term.r_power).evaluate(cfg.r)
            data["value_at_r"] = format_rational(value)
        terms.append(data)
    return {"header": cfg.header(), "status": "OK", "n": n, "symbolic": True, "terms": terms}


def _correlator_report(cfg: JobConfig, T: PairSequence) -> Dict[str, Any]:
    bound = _effective_bound(cfg, T.n) if cfg.expand else cfg.bound
    report: Dict[str, Any] = {"header": cfg.header(bound), "status": "OK", "n": T.n}
    terms = theorem1_terms(T)
    report["terms"] = _term_dicts(terms, cfg)
    if cfg.points:
        report["value"] = _evaluate(terms, cfg)
    if cfg.expand:
        report["series"] = iota_expand(terms, theorem1_domain(T.n), bound).to_json()
    if cfg.prop2:
        two_variable = prop2_terms(T)
        report["prop2_terms"] = _term_dicts(two_variable, cfg)
        if cfg.points:
            report["prop2_value"] = _evaluate(two_variable, cfg)
        if cfg.expand:
            report["prop2_series"] = iota_expand(two_variable, prop2_domain(T.n), bound).to_json()
    return report


@_reported
def run_correlator(cfg: JobConfig) -> JobResult:
    """
    Emit the derangement sum of the input (and the diagram sum with --prop2).

    Without an input file, --n N gives the symbolic display with traces kept as words.
    """
    if _has_input(cfg):
        T = _pair_sequence(cfg)
        logger.info("Computing correlator terms for %d pairs", T.n)
        return EXIT_OK, _correlator_report(cfg, T)
    if cfg.n is not None:
        logger.info("Computing symbolic correlator terms for n = %d", cfg.n)
        return EXIT_OK, _symbolic_report(cfg, cfg.n)
    raise InputFormatError("No input given: pass --input FILE or --n N")


@_reported
def run_virasoro(cfg: JobConfig) -> JobResult:
    """The d = 1 specialization with (e, e) = 1, whose coefficients are (r/2)^{c(σ)}."""
    if cfg.n is not None:
        n = cfg.n
    elif _has_input(cfg):
        n = _pair_sequence(cfg).n
    else:
        raise InputFormatError("No size given: pass --n N or --input FILE")
    logger.info("Computing Virasoro correlator for n = %d", n)
    report = _correlator_report(cfg, PairSequence.virasoro(n))
    report["virasoro"] = True
    return EXIT_OK, report


@_reported
def run_diagrams(cfg: JobConfig) -> JobResult:
    """Derangements with cycle counts and fibre sizes, and diagrams with their signs and σ_D."""
    if cfg.n is not None:
        n = cfg.n
    elif _has_input(cfg):
        n = _pair_sequence(cfg).n
    else:
        raise InputFormatError("No size given: pass --n N or --input FILE")
    derangements = []
    for sigma in enumerate_derangements(n):
        entry = sigma.to_dict()
        entry["cycle_count"] = sigma.cycle_count
        entry["fibre_size"] = len(fibre(sigma, n)) if n >= 2 else 1
        derangements.append(entry)
    diagrams = []
    for diagram in enumerate_diagrams(n):
        diagrams.append({
            "edges": diagram.to_json(),
            "sign": induced_sign(diagram).notation,
            "cycles": diagram_to_derangement(diagram).notation if n >= 2 else "",
        })
    logger.info("Enumerated %d derangements and %d diagrams for n = %d", len(derangements), len(diagrams), n)
    return EXIT_OK, {
        "header": cfg.header(),
        "status": "OK",
        "n": n,
        "derangement_count": len(derangements),
        "diagram_count": len(diagrams),
        "derangements": derangements,
        "diagrams": diagrams,
    }


@_reported
def run_verify(cfg: JobConfig) -> JobResult:
    """
    Run the seeded verification suite on the input data or on random datasets.

    Returns exit code 1 with the first failing coefficient when any comparison differs.
    """
    datasets_setting = cfg.settings["verification"]["datasets"]
    if _has_input(cfg):
        datasets = [_pair_sequence(cfg)]
        n = datasets[0].n
        bound = _effective_bound(cfg, n)
        suite = VerificationSuite(cfg.settings, cfg.seed, bound, cfg.corrupt)
    elif cfg.n is not None:
        n = cfg.n
        bound = _effective_bound(cfg, n)
        suite = VerificationSuite(cfg.settings, cfg.seed, bound, cfg.corrupt)
        datasets = suite.random_datasets(n, cfg.dim, datasets_setting)
    else:
        raise InputFormatError("No data given: pass --input FILE or --n N for random datasets")
    logger.info("Verifying %d dataset(s) with n = %d, bound %d, seed %d", len(datasets), n, bound, cfg.seed)

    results = suite.run(datasets, n)
    failed = next((result for result in results if not result.passed), None)
    report: Dict[str, Any] = {
        "header": cfg.header(bound),
        "status": "PASS" if failed is None else "FAIL",
        "n": n,
        "datasets": len(datasets),
        "data": [T.to_json() for T in datasets],
        "checks": [result.to_dict() for result in results],
        "vacuous_datasets": suite.get_statistics()["vacuous_datasets"],
        "first_failure": None,
    }
    if failed is not None:
        report["first_failure"] = dict(failed.first_mismatch or {}, check=failed.name, dataset=failed.dataset)
        logger.error("Verification failed in %s: %s", failed.name, report["first_failure"])
        return EXIT_VERIFICATION_FAILED, report
    return EXIT_OK, report


JOB_HANDLERS: Dict[str, Callable[[JobConfig], JobResult]] = {
    "correlator": run_correlator,
    "diagrams": run_diagrams,
    "verify": run_verify,
    "virasoro": run_virasoro,
}


def execute_job(cfg: JobConfig) -> JobResult:
    """Dispatch a validated JobConfig to its handler."""
    return JOB_HANDLERS[cfg.command](cfg)
