"""Exception types shared by every module."""


class QuotsemiError(Exception):
    """Base class for all package errors."""


class DomainError(QuotsemiError, ValueError):
    pass


class RangeError(QuotsemiError, ValueError):
    pass


class LengthExceeded(QuotsemiError):
    pass


class NotCoprime(DomainError):
    pass


class NoChain(QuotsemiError):
    pass


class NotModularConvex(QuotsemiError):
    pass


class InternalInconsistency(QuotsemiError, AssertionError):
    pass


class MismatchError(QuotsemiError):
    def __init__(self, message, diff=None):
        super().__init__(message)
        self.diff = diff or {}
