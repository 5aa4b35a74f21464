"""xilab: numerical verification workbench for integral identities of the
completed Riemann xi function and the digamma function, with printed-vs-
corrected misprint adjudication and Hardy-integral bounds."""

__version__ = "0.1.0"

from .bounds import BoundsRow, PaperConstants, hardy_integral, \
    lower_bound, recompute_constants, scan_bounds, upper_bound
from .errors import DomainError, HintViolationError, NonConvergenceError, \
    OverflowGuardError, PoleError, XilabError
from .identities import IdentityCase, VariantTag, verify
from .quadrature import DecayHint, QuadResult, integrate_finite, \
    integrate_log_singular, integrate_semi_infinite
from .report import RunReport, ToleranceProfile, build_report, run_selftest

__all__ = [
    "__version__",
    "BoundsRow", "PaperConstants", "hardy_integral", "lower_bound",
    "recompute_constants", "scan_bounds", "upper_bound",
    "DomainError", "HintViolationError", "NonConvergenceError",
    "OverflowGuardError", "PoleError", "XilabError",
    "IdentityCase", "VariantTag", "verify",
    "DecayHint", "QuadResult", "integrate_finite", "integrate_log_singular",
    "integrate_semi_infinite",
    "RunReport", "ToleranceProfile", "build_report", "run_selftest",
]
