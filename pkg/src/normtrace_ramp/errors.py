"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so raise the most specific
class that applies.
"""


class NormTraceError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(NormTraceError):
    """Malformed or out-of-contract input: bad parameters, bad files."""


class InfeasibleError(NormTraceError):
    """Well-formed input asking for something that cannot exist."""


class BudgetExceededError(NormTraceError):
    """An exhaustive enumeration would exceed its configured budget."""


class HypothesisError(InfeasibleError):
    """A closed form was applied outside its hypotheses.

    The message names the clause that failed.
    """


class InconsistentSharesError(InfeasibleError):
    """Share values that no codeword of the scheme can explain."""
