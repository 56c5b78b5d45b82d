"""Error types shared across siltlab."""

from __future__ import annotations


class SiltlabError(Exception):
    """Base class for every error raised by siltlab."""

    def __init__(self, message: str, cause: Exception | None = None) -> None:
        super().__init__(message)
        self.message = message
        if cause is not None:
            self.__cause__ = cause


class PresentationError(SiltlabError, ValueError):
    """A quiver or relation list is malformed."""


class NotAdmissible(SiltlabError):
    """Paths survive at the length cap: the ideal contains no radical power."""

    def __init__(self, length_cap: int, survivors: list[str]) -> None:
        shown = ", ".join(survivors[:5])
        more = "" if len(survivors) <= 5 else f" (+{len(survivors) - 5} more)"
        super().__init__(
            f"Ideal is not admissible below length cap {length_cap}: "
            f"surviving paths {shown}{more}"
        )
        self.length_cap = length_cap
        self.survivors = survivors


class NotCentral(SiltlabError):
    """A quotient generator does not commute with the whole algebra."""

    def __init__(self, generator: str) -> None:
        super().__init__(f"Generator {generator} is not central")
        self.generator = generator


class NotInRadical(SiltlabError):
    """A quotient generator has a nonzero idempotent coefficient."""

    def __init__(self, generator: str) -> None:
        super().__init__(f"Generator {generator} is not in the radical")
        self.generator = generator


class NotMinimal(SiltlabError):
    """A complex has a differential entry outside the radical."""


class ValidationFailure(SiltlabError):
    """A computed silting object failed its post-check."""

    def __init__(self, message: str, key: object = None) -> None:
        super().__init__(message)
        self.key = key


class UnknownAlgebra(SiltlabError, KeyError):
    """No catalog entry with the requested name."""

    def __str__(self) -> str:
        return self.message


class BadParameter(SiltlabError, ValueError):
    """A catalog or Schur parameter is out of range."""
