"""Exception types shared across the package."""

from __future__ import annotations


class NotBipartiteError(ValueError):
    """Raised when a bipartite graph was required; carries an odd-cycle witness."""

    def __init__(self, odd_cycle: list[int]):
        self.odd_cycle = list(odd_cycle)
        super().__init__(f"graph is not bipartite, odd cycle: {self.odd_cycle}")


class UnreachableError(ValueError):
    """Raised when a path was requested between disconnected vertices."""


class ParseError(ValueError):
    """Raised on malformed edge-list input; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class InvalidExponentError(ValueError):
    """Raised when a power exponent is below 1."""


class EvenExponentError(InvalidExponentError):
    """Raised when a bipartite power exponent is even."""


class GraphTooLargeError(ValueError):
    """Raised when a brute-force routine is asked to exceed its vertex cap."""


class EmptyBagError(ValueError):
    """Raised when a bag expansion is requested with a zero-size bag."""


class BagCollisionError(ValueError):
    """Raised when two projected hole vertices land in the same bag."""


class HoleNotInducedError(ValueError):
    """Raised when a sequence that must be an induced cycle is not one."""


class HoleTooShortError(ValueError):
    """Raised when a hole is shorter than an operation supports."""


class PathTooLongError(RuntimeError):
    """Raised when a constructed path exceeds its guaranteed length bound,
    which signals a violated precondition upstream."""


class ClaimViolationError(RuntimeError):
    """Raised when a structural assertion of the pullback construction fails.

    Any occurrence on a valid input means the construction (or its caller)
    is broken, so these are hard errors rather than soft report flags.
    """

    def __init__(self, claim: str, message: str = ""):
        self.claim = claim
        super().__init__(f"{claim}: {message}" if message else claim)
