"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SemitotalError(Exception):
    """Base class for all library errors."""


class NotATree(SemitotalError, ValueError):
    pass


class InvalidVertex(SemitotalError, IndexError):
    pass


class SelfLoop(SemitotalError, ValueError):
    pass


class MalformedGraph6(SemitotalError, ValueError):
    pass


class MalformedEdgeList(SemitotalError, ValueError):
    pass


class TooLarge(SemitotalError, ValueError):
    pass


class IsolatedVertex(SemitotalError, ValueError):
    """Raised when a domination parameter is requested for the one-vertex tree."""


class SizeLimitExceeded(SemitotalError, RuntimeError):
    """A configured guardrail on the input order was hit."""


class InvalidParameter(SemitotalError, ValueError):
    pass


class WrongStatus(SemitotalError, ValueError):
    pass


class WrongDegree(SemitotalError, ValueError):
    pass


class PreconditionFailed(SemitotalError, ValueError):
    pass
