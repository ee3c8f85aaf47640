"""Identity catalog and grid verifier."""

from genpell.harness.catalog import CONJECTURED_COUNT, PRINTED_COUNT, catalog, get
from genpell.harness.model import PROFILES, GridProfile, IdentityResult, IdentitySpec, grid
from genpell.harness.verify import VerificationReport, evaluate, verify, verify_all

__all__ = [
    "CONJECTURED_COUNT",
    "PRINTED_COUNT",
    "PROFILES",
    "GridProfile",
    "IdentityResult",
    "IdentitySpec",
    "VerificationReport",
    "catalog",
    "evaluate",
    "get",
    "grid",
    "verify",
    "verify_all",
]
