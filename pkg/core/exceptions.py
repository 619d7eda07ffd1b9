class VirapathError(Exception):
    """Base class for every error raised by the core package."""


class InvalidParameters(VirapathError, ValueError):
    """Model parameters, Kac labels or other arguments are out of range."""


class PathStructureError(VirapathError, ValueError):
    """A rigged path is malformed (lengths, r_0, steps or range)."""


class InadmissiblePath(VirapathError, ValueError):
    """A well-formed path or exponent list violates an admissibility condition."""

    def __init__(self, constraint, index, message=None):
        self.constraint = constraint
        self.index = index
        super().__init__(message or f'{constraint} violated at index {index}')


class InternalConsistencyError(VirapathError, AssertionError):
    """A construction that the theory guarantees did not go through."""


class LCapReached(VirapathError):
    """The length loop of a global sum hit its cap before the stop rule fired."""

    def __init__(self, l_cap, message=None):
        self.l_cap = l_cap
        super().__init__(message or f'L cap {l_cap} reached before truncation was exhausted')
