"""Exception taxonomy shared by all xilab modules.

Kernels are total over their stated domains and never return NaN; out of
domain arguments raise DomainError, a pole raises PoleError, and an
iteration or tolerance failure raises NonConvergenceError.  The CLI maps
NonConvergenceError to exit code 3 and usage problems to exit code 2.
"""


class XilabError(Exception):
    """Base class for all xilab errors."""


class DomainError(XilabError, ValueError):
    """Argument outside the stated domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested at a pole."""


class OverflowGuardError(DomainError):
    """Argument beyond a growth guard (for example erfi past its cap)."""


class NonConvergenceError(XilabError, ArithmeticError):
    """A series, sum or quadrature failed to meet its tail bound."""


class HintViolationError(NonConvergenceError):
    """An integrand exceeded its declared decay envelope (diagnostic)."""
