"""Exact Pell-family sequences, their ring extensions, and an identity checker."""

__version__ = "0.1.0"

from genpell.errors import IntegrityError, QuarantinedIdentityError
from genpell.gen_pell import PellParams, e_p, gen_pell
from genpell.hypercomplex import Complex, Dual, complex_pell, dual_pell
from genpell.pell_core import pell, pell_lucas
from genpell.silver_ring import QuadInt

__all__ = [
    "Complex",
    "Dual",
    "IntegrityError",
    "PellParams",
    "QuadInt",
    "QuarantinedIdentityError",
    "complex_pell",
    "dual_pell",
    "e_p",
    "gen_pell",
    "pell",
    "pell_lucas",
    "__version__",
]
