class ParseError(ValueError):
    """Malformed poset or graph text; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class NotPerfectError(ValueError):
    """Raised when a stable-set predicate is applied to a non-perfect graph."""
