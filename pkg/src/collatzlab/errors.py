"""Exception types shared across the package."""


class FixedWidthOverflowError(OverflowError):
    """A checked operation left the 64-bit fast-integer range.

    Raised only on code paths that opted into bounded arithmetic (the
    scanners); generator-side code runs on unbounded integers and never
    sees this.
    """

    def __init__(self, value: int, context: str = "") -> None:
        self.value = value
        self.context = context
        where = f" while {context}" if context else ""
        super().__init__(f"value {value} exceeds the checked 64-bit range{where}")


class StepCapError(RuntimeError):
    """An orbit failed to reach 1 within the configured step cap."""

    def __init__(self, start: int, cap: int) -> None:
        self.start = start
        self.cap = cap
        super().__init__(f"orbit of {start} did not reach 1 within {cap} steps")


class InsufficientBinsError(ValueError):
    """Too few usable histogram bins inside the requested fit window."""


class SequenceVerificationError(RuntimeError):
    """A generated sequence failed its own step-by-step verification."""
