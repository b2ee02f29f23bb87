"""Exception hierarchy. Every error raised on purpose derives from DappledError."""


class DappledError(Exception):
    pass


class InvalidConditions(DappledError):
    """A condition set the requested algorithm cannot handle."""


class MismatchedShapes(DappledError):
    pass


class InvalidShape(DappledError):
    """Grid too small (or of the wrong parity) for the requested algorithm."""


class InvalidInput(DappledError):
    """Malformed tiling, file, or argument."""


class SizeLimit(DappledError):
    pass


class NotInW(DappledError):
    """Edge colours that do not form a brick Wang tile."""


class InvalidWang(DappledError):
    pass


class PaletteMismatch(DappledError):
    pass


class OutOfBounds(DappledError):
    pass


class InternalError(DappledError):
    """A repair step reached a state its preconditions rule out."""
