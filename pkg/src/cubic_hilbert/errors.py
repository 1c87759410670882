"""Exception types shared across the package.

Two failure modes are kept apart on purpose: bad input (caller's fault,
CLI exit code 2) and a broken internal invariant (our fault, CLI exit
code 1).  Library code never raises bare ValueError/RuntimeError.
"""


class DomainError(ValueError):
    """Input falls outside an operation's stated domain."""


class InternalError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
