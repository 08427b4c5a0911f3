"""Exception hierarchy shared by every module in the package."""


class SingtileError(Exception):
    """Base class for all errors raised by singtile."""


class DomainError(SingtileError, ValueError):
    """A well-formed request that is mathematically invalid (exit code 2 in the CLI)."""


class RingMismatchError(DomainError, TypeError):
    """Operands belong to different rings (Gaussian vs Eisenstein)."""


class InadmissibleAlphaError(DomainError):
    """The conformal parameter does not produce a tiling of the punctured plane."""


class IncompatibleColoringError(DomainError):
    """The coloring cannot be pushed through the conformal map."""


class ParseError(SingtileError, ValueError):
    """Malformed textual input; carries the offending text and position."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.text = text
        self.pos = pos
        detail = f"{message} at position {pos}"
        if text:
            detail += f"\n  {text}\n  {' ' * pos}^"
        super().__init__(detail)
