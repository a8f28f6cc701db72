"""Exception types shared across the package."""


class GwalkError(Exception):
    """Base class for every domain error raised by this package."""


class RingMismatchError(GwalkError):
    """Operands live in different polynomial rings."""


class ParseError(GwalkError):
    """Malformed polynomial expression; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class OrderingError(GwalkError):
    """Invalid term-ordering specification or weight vector."""


class MarkingError(GwalkError):
    """Marked leading terms are inconsistent with the ordering in use."""


class WalkError(GwalkError):
    """A walk step received inputs outside its cone preconditions."""


class IdealFileError(GwalkError):
    """An ideal file does not conform to the input schema."""
