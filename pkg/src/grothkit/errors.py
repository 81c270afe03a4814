"""Exception types raised by grothkit."""


class GrothkitError(Exception):
    """Base class for all library errors."""


class NotAPermutation(GrothkitError, ValueError):
    pass


class IndexOutOfRange(GrothkitError, IndexError):
    pass


class RankMismatch(GrothkitError, ValueError):
    pass


class BoxNotInDiagram(GrothkitError, ValueError):
    pass


class PreconditionViolated(GrothkitError, ValueError):
    pass
