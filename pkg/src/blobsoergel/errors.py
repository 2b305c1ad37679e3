"""Exception hierarchy shared by every module.

Each concrete class name doubles as the machine-readable error code emitted
by the command line front end.
"""

from __future__ import annotations


class BlobSoergelError(ValueError):
    """Base class for domain errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class ParamsError(BlobSoergelError):
    pass


class EvenL(ParamsError):
    pass


class MOutOfRange(ParamsError):
    pass


class ForbiddenCongruence(ParamsError):
    pass


class OnWall(BlobSoergelError):
    pass


class InsideFundamentalAlcove(BlobSoergelError):
    pass


class BoundExceeded(BlobSoergelError):
    pass


class RankMismatch(BlobSoergelError):
    pass


class IndexOutOfRange(BlobSoergelError):
    pass


class ResidueMismatch(BlobSoergelError):
    pass
