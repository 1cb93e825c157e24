"""Exception hierarchy shared by every hclab module."""

from __future__ import annotations


class HcLabError(Exception):
    """Base class for all errors raised by hclab."""


class NotLatinSquare(HcLabError):
    pass


class NotAssociative(HcLabError):
    def __init__(self, triple: tuple[int, int, int]):
        a, b, c = triple
        super().__init__(f"(a*b)*c != a*(b*c) for (a, b, c) = ({a}, {b}, {c})")
        self.triple = triple


class IdentityNotZero(HcLabError):
    pass


class NotNormal(HcLabError):
    pass


class NotPGroup(HcLabError):
    pass


class OrderCapExceeded(HcLabError):
    def __init__(self, what: str, order: int, cap: int):
        super().__init__(f"{what}: order {order} exceeds cap {cap}")
        self.what = what
        self.order = order
        self.cap = cap


class InvalidAction(HcLabError):
    pass


class FileFormatError(HcLabError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
        self.line = line
        self.column = column


class SpecParseError(HcLabError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position
