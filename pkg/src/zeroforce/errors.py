"""Exception types raised across the package.

Mathematical failures (a lemma that does not hold on some instance) are never
raised; they come back as failed reports. Exceptions here signal bad input or
a request outside the supported size range.
"""

from __future__ import annotations


class ZeroForceError(Exception):
    """Base class for all package errors."""


class InvalidEdge(ZeroForceError, ValueError):
    pass


class InvalidOrder(ZeroForceError, ValueError):
    pass


class InvalidVertex(ZeroForceError, ValueError):
    pass


class MissingEdge(ZeroForceError, ValueError):
    pass


class DuplicateEdge(ZeroForceError, ValueError):
    pass


class ParseError(ZeroForceError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Unsupported(ZeroForceError, ValueError):
    pass


class TooLarge(ZeroForceError, ValueError):
    pass


class EmptyFort(ZeroForceError, ValueError):
    pass


class MixedOrders(ZeroForceError, ValueError):
    pass


class UseIngestion(ZeroForceError, ValueError):
    pass


# lemma preconditions
class NotALeaf(ZeroForceError, ValueError):
    pass


class NotHanging(ZeroForceError, ValueError):
    pass


class NotSimplicial(ZeroForceError, ValueError):
    pass


class InvalidRemoval(ZeroForceError, ValueError):
    pass


class Overlap(ZeroForceError, ValueError):
    pass


class AnchorMismatch(ZeroForceError, ValueError):
    pass


class NotATree(ZeroForceError, ValueError):
    pass


class IsAPath(ZeroForceError, ValueError):
    pass


class Disconnected(ZeroForceError, ValueError):
    pass
