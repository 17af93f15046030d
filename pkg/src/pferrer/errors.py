"""Exception hierarchy shared by all modules."""


class FerrerError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(FerrerError):
    """A raw diagram tree failed validation; ``path`` is a JSON-path string."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{message} at {path}")
        self.path = path


class NonUniformDepth(ValidationError):
    pass


class NotDecreasing(ValidationError):
    pass


class NonPositiveLeaf(ValidationError):
    pass


class DepthMismatch(FerrerError):
    pass


class SingletonDiagram(FerrerError):
    pass


class DepthOne(FerrerError):
    pass


class NotSquarefree(FerrerError):
    pass


class CertificateFailure(FerrerError):
    """A constructed divisor witness failed to divide; signals an internal bug."""


class TooManyGenerators(FerrerError):
    pass


class NotPLinearShape(FerrerError):
    """A Hilbert series does not have the shape of a quotient by an ideal
    generated in one degree with the claimed height."""


class CountOutOfRange(FerrerError):
    pass


class NotClosedUnderDivision(FerrerError):
    pass


class NotMVector(FerrerError):
    """Input sequence violates the Macaulay growth bound."""

    def __init__(self, index: int, bound: int):
        super().__init__(f"h_{index} exceeds the Macaulay bound {bound}")
        self.index = index
        self.bound = bound


class SizeLimitExceeded(FerrerError):
    pass
