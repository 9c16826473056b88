"""
Exceptions raised by the algebra engine.
"""


class RingError(ValueError):
    """Base class for every failure the engine reports."""


class NonAssociative(RingError):
    def __init__(self, i: int, j: int, l: int):
        self.witness = (i, j, l)
        super().__init__(f"(e{i + 1}e{j + 1})e{l + 1} != e{i + 1}(e{j + 1}e{l + 1})")


class IllDefined(RingError):
    def __init__(self, i: int, j: int):
        self.witness = (i, j)
        super().__init__(f"product e{i + 1}e{j + 1} is not killed by the orders of its factors")


class NotUnital(RingError):
    pass


class WrongSide(RingError):
    pass


class GroupTooLarge(RingError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"group closure exceeds the cap of {cap} elements")


class NotDividing(RingError):
    pass


class NotNormal(RingError):
    pass


class NotFixedRing(RingError):
    pass


class NotPGroup(RingError):
    pass


class NotPModule(RingError):
    pass


class NotInFixedRing(RingError):
    pass


class NotInvertible(RingError):
    pass


class InvalidAutomorphism(RingError):
    pass


class SizeCap(RingError):
    pass


class CapExceeded(RingError):
    pass


class RadicalDisagreement(RingError):
    """Prime radical and Jacobson radical differ on a finite ring."""


class ParseError(RingError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class ValidationError(RingError):
    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)
