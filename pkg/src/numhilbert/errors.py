"""Exception hierarchy shared by every module."""


class NhtError(ValueError):
    pass


class NotInvertible(NhtError):
    pass


class UnsupportedModulus(NhtError):
    pass


class InvalidElement(NhtError):
    pass


class NoSuchElement(NhtError):
    pass


class DimensionMismatch(NhtError):
    pass


class ModulusMismatch(NhtError):
    pass


class DegenerateModulus(NhtError):
    pass


class ConditionViolated(NhtError):
    """Parameters do not satisfy the defining Diophantine condition."""


class PatternViolated(NhtError):
    """First row does not have zeros at even offsets and nonzeros at odd ones."""


class NotReducible(NhtError):
    pass


class NoSquareRoot(NhtError):
    pass


class NotScalar(NhtError):
    """A Gram or square product is not a scalar multiple of the identity."""


class ParseError(NhtError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidStage(NhtError):
    pass


class ModulusOrderViolation(NhtError):
    pass


class AlphabetOverflow(NhtError):
    pass


class LengthNotMultiple(NhtError):
    pass
