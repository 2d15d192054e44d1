"""Exception hierarchy shared by every module of the package."""


class DivSeqError(ValueError):
    """Base class for all errors raised by divseq."""


class ZeroPolynomial(DivSeqError):
    pass


class InexactDivision(DivSeqError):
    pass


class NonIntegralNormalPart(DivSeqError):
    pass


class EmptySet(DivSeqError):
    pass


class EmptySupport(DivSeqError):
    pass


class NotSaturated(DivSeqError):
    pass


class NotOrderReversing(DivSeqError):
    pass


class NotCyclotomicProduct(DivSeqError):
    pass


class InvalidOrder(DivSeqError):
    pass


class AsymmetryViolation(DivSeqError):
    """A homogenized cyclotomic value left the integers; always a bug."""


class DegenerateDenominator(DivSeqError):
    pass


class DegenerateParameters(DivSeqError):
    pass


class IntegralityViolation(DivSeqError):
    """An exact division of sequence values failed; always a bug."""


class ParseError(DivSeqError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
