class CClosedError(Exception):
    """Base class for all errors raised by this package."""


class InputError(CClosedError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimitError(CClosedError, RuntimeError):
    """An exhaustive routine would exceed its configured work guard."""


class UnsupportedError(CClosedError, ValueError):
    pass
