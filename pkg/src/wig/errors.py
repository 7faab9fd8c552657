"""Exception types shared across the package."""


class WigError(Exception):
    """Base class for all package-specific errors."""


class InvalidTriple(WigError):
    """The (left, center, right) combination is not a letter of the arena."""


class HeightCapExceeded(WigError):
    """An operation would build or enumerate letters above the configured cap."""


class HeightTooSmall(WigError):
    """The letter is too low for the requested decomposition."""


class ParseError(WigError):
    pass


class EndpointMismatch(WigError):
    pass


class NotARiver(WigError):
    pass


class CodeLengthMismatch(WigError):
    pass


class NotACanyon(WigError):
    pass


class NotAValley(WigError):
    pass


class NotIdempotent(WigError):
    pass


class WrongClass(WigError):
    pass


class IdentityClass(WigError):
    """A word with content {1} was normalized in semigroup mode."""


class NotAssociative(WigError):
    pass


class OutOfRange(WigError):
    pass


class NotDownClosed(WigError):
    pass


class EmptySandwich(WigError):
    pass


class UncoveredLetter(WigError):
    pass


class NotRegularAmbient(WigError):
    pass
