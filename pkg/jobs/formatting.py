"""
Rendering of job reports as JSON or as plain text.

Reports are plain dictionaries of JSON values; rendering never reads the clock or any
other run-dependent state, so equal reports give byte-identical output.
"""

import json
from typing import Any, Dict, List, Sequence

from algebra_layer import CentralPoly


def _power_text(base: str, power: int) -> str:
    if power == 1:
        return base
    return f"{base}^{power}"


def coefficient_text(term: Dict[str, Any]) -> str:
    """"1/64 r^2", "1/2 r" or a full polynomial for non-monomial coefficients."""
    if term.get("r_power") is None:
        return str(CentralPoly.from_json(term["coefficient"]))
    power = term["r_power"]
    coefficient = term["coefficient"]
    if power == 0:
        return coefficient
    r_part = _power_text("r", power)
    return r_part if coefficient == "1" else f"{coefficient} {r_part}"


def denominator_text(factors: Sequence[Sequence[Any]]) -> str:
    return " ".join(f"({left}-{right})^{power}" for left, right, power in factors)


def monomial_text(variables: Sequence[str], exponents: Sequence[int]) -> str:
    parts = [f"{name}^{e}" for name, e in zip(variables, exponents) if e]
    return " ".join(parts) if parts else "1"


def poly_text(encoded: Any) -> str:
    """Text of a JSON-encoded polynomial in r, or of a plain rational string."""
    if isinstance(encoded, list):
        return str(CentralPoly.from_json(encoded))
    return str(encoded)


def _term_sort_key(term: Dict[str, Any]):
    power = term.get("r_power")
    return (-(power if power is not None else -1), term.get("cycles", ""), term.get("diagram", []))


def term_lines(terms: List[Dict[str, Any]]) -> List[str]:
    """One line per term, by decreasing r-power and then cycle notation."""
    lines = []
    for term in sorted(terms, key=_term_sort_key):
        numerator = coefficient_text(term)
        if term.get("traces"):
            numerator += " " + "".join(
                "Tr(" + "".join(f"L{i}" for i in word) + ")" for word in term["traces"]
            )
        denominator = denominator_text(term.get("denominator", []))
        line = f"{term.get('cycles') or '()':<14} {numerator}"
        if denominator:
            line += f" / {denominator}"
        if "diagram" in term:
            line += "   D = {" + ", ".join("{" + ",".join(edge) + "}" for edge in term["diagram"]) + "}"
        if "value_at_r" in term:
            line += f"   [= {term['value_at_r']}]"
        lines.append(line)
    return lines


def series_lines(series: Dict[str, Any]) -> List[str]:
    variables = series["variables"]
    lines = [f"series in {', '.join(variables) or '()'} up to cut degree {series['bound']}:"]
    for entry in series["terms"]:
        lines.append(f"  {monomial_text(variables, entry['exponents'])}: {poly_text(entry['coeff'])}")
    return lines


def _header_lines(header: Dict[str, Any]) -> List[str]:
    return [f"# {key}: {'-' if value is None else value}" for key, value in header.items()]


def _correlator_text(report: Dict[str, Any]) -> List[str]:
    lines = [f"n = {report['n']}, {len(report['terms'])} terms"]
    lines.extend(term_lines(report["terms"]))
    if "value" in report:
        lines.append(f"value = {poly_text(report['value'])}")
    if "series" in report:
        lines.extend(series_lines(report["series"]))
    if "prop2_terms" in report:
        lines.append(f"two-variable form, {len(report['prop2_terms'])} terms")
        lines.extend(term_lines(report["prop2_terms"]))
    if "prop2_value" in report:
        lines.append(f"two-variable value = {poly_text(report['prop2_value'])}")
    if "prop2_series" in report:
        lines.extend(series_lines(report["prop2_series"]))
    return lines


def _diagrams_text(report: Dict[str, Any]) -> List[str]:
    lines = [
        f"n = {report['n']}",
        f"derangements: {report['derangement_count']}",
        f"diagrams: {report['diagram_count']}",
    ]
    for entry in report["derangements"]:
        fibre_size = entry.get("fibre_size")
        lines.append(f"  {entry['cycles'] or '()':<14} c = {entry['cycle_count']}"
                     + ("" if fibre_size is None else f"   fibre = {fibre_size}"))
    for entry in report["diagrams"]:
        edges = ", ".join("{" + ",".join(edge) + "}" for edge in entry["edges"])
        lines.append(f"  {{{edges}}}   sign {entry['sign'] or '()'}   sigma {entry.get('cycles') or '-'}")
    return lines


def _verify_text(report: Dict[str, Any]) -> List[str]:
    lines = [f"n = {report['n']}, {report['datasets']} dataset(s)"]
    for check in report["checks"]:
        where = "" if check["dataset"] is None else f"[dataset {check['dataset']}]"
        verdict = "PASS" if check["passed"] else "FAIL"
        lines.append(f"{verdict}  {check['name']}{where}  {check['cases']} cases, {check['mismatches']} mismatches")
    if report.get("vacuous_datasets"):
        lines.append("vacuous datasets (all coefficients zero): " + ", ".join(str(i) for i in report["vacuous_datasets"]))
    if report.get("first_failure"):
        lines.append("first failure: " + json.dumps(report["first_failure"], sort_keys=True))
    lines.append(f"RESULT: {report['status']}")
    return lines


TEXT_RENDERERS = {
    "correlator": _correlator_text,
    "virasoro": _correlator_text,
    "diagrams": _diagrams_text,
    "verify": _verify_text,
}


def render_text(report: Dict[str, Any]) -> str:
    lines = _header_lines(report.get("header", {}))
    if report.get("status") == "ERROR":
        lines.append(f"ERROR: {report.get('error', '')}")
    else:
        lines.extend(TEXT_RENDERERS[report["header"]["command"]](report))
    return "\n".join(lines) + "\n"


def render_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def render_report(report: Dict[str, Any], output_format: str) -> str:
    """Render a report in the requested format ("json" or "text")."""
    if output_format == "json":
        return render_json(report)
    return render_text(report)
