"""Exception taxonomy shared by the whole package.

The CLI maps these onto its exit codes: InvalidInputError -> 2, the two
invariant-breach errors -> 3, anything else bubbling up -> a plain traceback.
"""


class GalecrossError(Exception):
    """Base class for all package errors."""


class InvalidInputError(GalecrossError):
    """Malformed input, violated precondition, or exceeded budget."""


class RetryLimitError(InvalidInputError):
    """Random generation exhausted its retry budget (range too small for n)."""


class TheoremViolationError(GalecrossError):
    """A search that a theorem guarantees to succeed came up empty.

    Signals degenerate input slipping through or an implementation bug; the CLI
    emits a reproduction bundle when this reaches it.
    """


class SearchIncompleteError(GalecrossError):
    """The finite cut-candidate family and its fallback both failed."""
