"""
Exceptions raised by quasitopy.

Every error derives from :class:`QuasitopyError`; the command line front end maps
the three families below onto its exit codes.
"""
from typing import (
    TYPE_CHECKING,
    Optional,
)

if TYPE_CHECKING:
    from quasitopy.core.model import ValidationReport


class QuasitopyError(Exception):
    """Base class for all quasitopy exceptions."""


class ParseError(QuasitopyError, ValueError):
    """A model document could not be read."""


class ValidationError(QuasitopyError, ValueError):
    """
    A model violates the characteristic function conditions, or an operation
    requires positive omniorientation and the model does not have it.
    """

    def __init__(self, msg: str, report: "Optional[ValidationReport]" = None) -> None:
        super().__init__(msg)
        self.report = report


class DomainError(QuasitopyError, ValueError):
    """A well formed request that the underlying mathematics rejects."""

    def __init__(self, msg: str, reason: Optional[str] = None) -> None:
        super().__init__(msg)
        self.reason = reason


class NotPrimitive(DomainError):
    pass


class NotAdmissible(DomainError):
    """
    The edge cannot be blown down.

    ``reason`` is one of ``noSmoothEndpoint``, ``neighborsDependent`` or
    ``inequalityFails``.
    """


class TooFewEdges(DomainError):
    pass


class IndexOutOfRange(DomainError, IndexError):
    pass


class NotAManifold(DomainError):
    pass


class GenericityFailure(DomainError):
    pass
