"""Exception hierarchy shared across the package."""


class GhostdetError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(GhostdetError):
    """Tensor dimensions are inconsistent with an operation's contract."""


class ContractError(GhostdetError):
    """An API was called outside its contract (e.g. backward on a non-scalar)."""


class InvalidParameterError(GhostdetError):
    """A numeric parameter is outside its valid range (e.g. negative variance)."""


class ConfigError(GhostdetError):
    """A block or model was configured inconsistently."""


class ParseError(GhostdetError):
    """Structured text (architecture config, labels) failed to parse.

    ``position`` is a human-readable locator such as ``"head[3]"`` or
    ``"line 7"``.
    """

    def __init__(self, message: str, position: str | None = None):
        self.position = position
        super().__init__(f"{message} (at {position})" if position else message)


class BlobFormatError(GhostdetError):
    """A tensor blob file has a bad magic, version, or truncated payload."""


class WeightsFormatError(GhostdetError):
    """A weights file has a bad magic, version, or truncated payload."""


class UnknownPathError(WeightsFormatError):
    """Weights file and model disagree on parameter paths.

    ``path`` names the first offending parameter path.
    """

    def __init__(self, message: str, path: str):
        self.path = path
        super().__init__(f"{message}: {path}")
