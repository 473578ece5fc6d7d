"""
Core algebra, module action and checks of the Oracle Layer.
"""

from .quadratic_algebra import bracket_elements, bracket_new, normal_order_pair
from .fock_module import FockModule
from .commutation_check import check_prop1, default_sample_modes
