"""
Exact scalars: rationals over QQ and polynomials in the central parameter r.

The central element c acts on the vacuum of M_r as the scalar r. Every coefficient
computed by the correlator and oracle layers is a polynomial in r, so r stays symbolic
until output and is specialized only by ``CentralPoly.evaluate``.
"""

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Tuple

import sympy
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from ..exceptions import ScalarParseError


CENTRAL_RING, R_GENERATOR = ring("r", QQ)

# "p" or "p/q"; decimal and exponent forms are not exact encodings
RATIONAL_PATTERN = re.compile(r"[+-]?\d+(/\d+)?")

# Domain element type of QQ (gmpy2.mpq when available, PythonMPQ otherwise)
Rational = QQ.dtype


class PolyOp(Enum):
    """Ring operations accepted by ``cpoly_arith``."""
    ADD = "add"
    MUL = "mul"


def to_rational(value: Any) -> Rational:
    """
    Coerce a value to an exact rational.

    Args:
        value: int, "p/q" or "p" string, sympy Rational, Fraction or QQ element

    Returns:
        The value as an element of QQ

    Raises:
        ScalarParseError: If the value is a float, a bool or not a rational
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise ScalarParseError(f"Inexact or boolean value is not a rational: {value!r}")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, sympy.Rational):
        return QQ.from_sympy(value)
    raise ScalarParseError(f"Unsupported rational value: {value!r}")


def parse_rational(text: str) -> Rational:
    """
    Parse the "p/q" (or "p") encoding used by every JSON interface.

    Raises:
        ScalarParseError: If the text is not an exact rational
    """
    cleaned = text.strip()
    if not cleaned:
        raise ScalarParseError("Empty string is not a rational")
    if not RATIONAL_PATTERN.fullmatch(cleaned):
        raise ScalarParseError(f"Invalid rational (expected \"p\" or \"p/q\"): {text!r}")
    try:
        parsed = sympy.Rational(cleaned)
    except (TypeError, ValueError, ZeroDivisionError, sympy.SympifyError) as e:
        raise ScalarParseError(f"Invalid rational: {text!r}") from e
    return QQ.from_sympy(parsed)


def format_rational(value: Rational) -> str:
    """Encode a rational as "p/q", or "p" when q = 1."""
    value = to_rational(value)
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


@dataclass(frozen=True)
class CentralPoly:
    """Univariate polynomial with rational coefficients in the central parameter r."""
    element: PolyElement

    @classmethod
    def zero(cls) -> "CentralPoly":
        return cls(CENTRAL_RING.zero)

    @classmethod
    def one(cls) -> "CentralPoly":
        return cls(CENTRAL_RING.one)

    @classmethod
    def r(cls) -> "CentralPoly":
        """The polynomial r itself."""
        return cls(R_GENERATOR)

    @classmethod
    def constant(cls, value: Any) -> "CentralPoly":
        return cls(CENTRAL_RING(to_rational(value)))

    @classmethod
    def monomial(cls, coefficient: Any, power: int) -> "CentralPoly":
        """Return coefficient * r**power."""
        if power < 0:
            raise ValueError("Powers of r must be non-negative")
        return cls(CENTRAL_RING({(power,): to_rational(coefficient)}))

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[Any]) -> "CentralPoly":
        """Build from coefficients listed lowest power first."""
        terms = {}
        for power, value in enumerate(coefficients):
            coefficient = to_rational(value)
            if coefficient:
                terms[(power,)] = coefficient
        return cls(CENTRAL_RING(terms))

    @classmethod
    def from_json(cls, encoded: List[str]) -> "CentralPoly":
        if not isinstance(encoded, list):
            raise ScalarParseError("A polynomial in r is encoded as a list of rationals")
        return cls.from_coefficients(encoded)

    @property
    def coefficients(self) -> List[Rational]:
        """Coefficients lowest power first, without trailing zeros ([] for zero)."""
        if not self.element:
            return []
        top = self.degree
        return [self.element.get((power,), QQ.zero) for power in range(top + 1)]

    @property
    def degree(self) -> int:
        """Degree in r; -1 for the zero polynomial."""
        if not self.element:
            return -1
        return max(monom[0] for monom in self.element.keys())

    def as_monomial(self) -> Optional[Tuple[Rational, int]]:
        """Return (coefficient, power) when the polynomial is a single nonzero term."""
        if len(self.element) != 1:
            return None
        (monom, coefficient), = self.element.items()
        return coefficient, monom[0]

    def evaluate(self, r0: Any) -> Rational:
        """Specialize r to an exact rational (Horner scheme)."""
        point = to_rational(r0)
        result = QQ.zero
        for coefficient in reversed(self.coefficients):
            result = result * point + coefficient
        return result

    def to_json(self) -> List[str]:
        return [format_rational(c) for c in self.coefficients]

    def _coerce(self, other: Any) -> Optional[PolyElement]:
        if isinstance(other, CentralPoly):
            return other.element
        try:
            return CENTRAL_RING(to_rational(other))
        except ScalarParseError:
            return None

    def __add__(self, other: Any) -> "CentralPoly":
        element = self._coerce(other)
        if element is None:
            return NotImplemented
        return CentralPoly(self.element + element)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "CentralPoly":
        element = self._coerce(other)
        if element is None:
            return NotImplemented
        return CentralPoly(self.element - element)

    def __rsub__(self, other: Any) -> "CentralPoly":
        element = self._coerce(other)
        if element is None:
            return NotImplemented
        return CentralPoly(element - self.element)

    def __neg__(self) -> "CentralPoly":
        return CentralPoly(-self.element)

    def __mul__(self, other: Any) -> "CentralPoly":
        element = self._coerce(other)
        if element is None:
            return NotImplemented
        return CentralPoly(self.element * element)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.element)

    def __str__(self) -> str:
        return sympy.sstr(self.element.as_expr())


def cpoly_arith(p: CentralPoly, q: CentralPoly, op: PolyOp) -> CentralPoly:
    """
    Exact ring arithmetic on polynomials in r.

    Args:
        p: Left operand
        q: Right operand
        op: PolyOp.ADD or PolyOp.MUL (or their string values)

    Returns:
        Normalized result
    """
    op = PolyOp(op) if isinstance(op, str) else op
    if op is PolyOp.ADD:
        return p + q
    return p * q


def cpoly_eval(p: CentralPoly, r0: Any) -> Rational:
    """Evaluate p at r = r0 exactly."""
    return p.evaluate(r0)
