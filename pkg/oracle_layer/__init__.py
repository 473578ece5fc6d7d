"""
Oracle Layer Module

Brute-force reference for the closed forms:
- The quadratic Lie algebra with the rescaled bracket and its normal ordering
- The induced module M_r with memoized generator actions
- Mode and field correlators, the Virasoro element, the grading and the Griess product
- The coefficient check of the closed commutation formulas
"""

from .models.fock_types import FockState, Monomial, Prop1Report, QuadElement, QuadGenerator
from .core.quadratic_algebra import bracket_elements, bracket_new, normal_order_pair
from .core.fock_module import FockModule
from .core.commutation_check import check_prop1, default_sample_modes
from .config import OracleConfigManager
from .exceptions import OracleError, RecursionDepthError, ModeWindowError

__version__ = "1.0.0"
__all__ = [
    "FockState",
    "Monomial",
    "Prop1Report",
    "QuadElement",
    "QuadGenerator",
    "bracket_elements",
    "bracket_new",
    "normal_order_pair",
    "FockModule",
    "check_prop1",
    "default_sample_modes",
    "OracleConfigManager",
    "OracleError",
    "RecursionDepthError",
    "ModeWindowError",
]
