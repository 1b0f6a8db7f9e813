'''Contains custom errors classes.'''

class SmoothError(Exception):
    pass

# weil

class MixedAlgebrasError(SmoothError):
    pass

class MixedBackendsError(SmoothError):
    pass

class NotInvertibleError(SmoothError):
    pass

class NotPositiveError(SmoothError):
    pass

class UnsupportedExactError(SmoothError):
    pass

class EvaluationError(SmoothError):
    pass

class QuadratureFailureError(SmoothError):
    pass

class NotGlobalError(SmoothError):
    pass

class DerivativeOrderError(SmoothError):
    pass

# parsers

class ParseError(SmoothError):

    def __init__(self, message: str, position: int):
        super().__init__(f'{message} (at position {position})')
        self.position = position


class UnboundVariableError(SmoothError):
    pass

# logic

class NotDistributiveError(SmoothError):
    pass

class NoImplicationError(SmoothError):
    pass

class MalformedInputError(SmoothError):
    pass

# linalg

class EmptyFamilyError(SmoothError):
    pass

class MixedDimensionsError(SmoothError):
    pass

class NotInvertibleNormError(SmoothError):
    pass

class NotSquareError(SmoothError):
    pass

class NotHermitianError(SmoothError):
    pass

class DegenerateStandardPartError(SmoothError):
    pass

class NotLinearError(SmoothError):
    pass

class NotABasisError(SmoothError):
    pass

# lie

class MixedGroupsError(SmoothError):
    pass

class NotAtIdentityError(SmoothError):
    pass

class NotInGroupError(SmoothError):
    pass

class WrongShapeError(SmoothError):
    pass

# quantum

class NotPhysicalError(SmoothError):
    pass

class NotOrthonormalError(SmoothError):
    pass
