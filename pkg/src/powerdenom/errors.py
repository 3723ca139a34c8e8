"""Error types shared across the package.

Plain ``ValueError`` is used for bad input (out-of-domain arguments, wrong
parity, unknown identifiers).  The classes below mark conditions that are
*not* input errors.
"""


class TheoremViolationError(Exception):
    """A proven identity failed to hold for a concrete input.

    This always indicates a bug in the implementation, never bad input: the
    quantities involved (integrality of scaled Bernoulli values, divisibility
    of denominator quotients, formula/oracle agreement) are theorems.  The
    test harness and the CLI treat it as a hard failure distinct from usage
    errors.
    """


class SearchCapExceeded(Exception):
    """An open-ended search hit its configured cap before finding a witness.

    Raised by first-index searches whose termination is guaranteed by an
    existence theorem without an effective bound.  Distinct from ValueError
    so callers can tell "bad input" from "raise the cap and retry".
    """
