class RRClosureError(Exception):
    """Base class for every error raised by the library."""


class UsageError(RRClosureError, ValueError):
    """An operation was called outside its precondition."""


class DimensionMismatchError(UsageError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"dimension mismatch: expected {expected}, got {got}")
        self.expected = expected
        self.got = got


class UnsupportedDimensionError(UsageError):
    def __init__(self, operation: str, nvars: int):
        super().__init__(f"{operation} is only available in 2 variables (got {nvars})")
        self.operation = operation
        self.nvars = nvars


class GroupMismatchError(UsageError):
    def __init__(self, left, right):
        super().__init__(f"value group mismatch: {left} vs {right}")


class ParseError(UsageError):
    """Parse failure with a 1-based position inside the offending input."""

    def __init__(self, line: int, column: int, text: str):
        super().__init__(f"{line}:{column}: {text}")
        self.line = line
        self.column = column
        self.text = text

    def __str__(self):
        return f"parse error at line {self.line}, column {self.column}: {self.text}"
