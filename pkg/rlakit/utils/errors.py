class RlakitError(RuntimeError):
    "Computation failure. Exit code 1 on the command line."

    exit_code = 1

    def __init__(self, message: str, **details) -> None:
        super().__init__(message)
        self.details = details

    def to_dict(self) -> dict:
        return {"error": type(self).__name__, "message": str(self), "details": self.details}


class InputError(RlakitError):
    "Malformed or invalid input. Exit code 2."

    exit_code = 2


class VerificationError(RlakitError):
    "A structure or a claim failed its verification. Exit code 3."

    exit_code = 3


class BudgetExceeded(RlakitError):
    pass


class NotPrime(InputError):
    pass


class NotIrreducible(InputError):
    pass


class CharTwoUnsupported(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class UnknownEntry(InputError):
    pass


class BadParameters(InputError):
    pass


class NotAnIdeal(InputError):
    pass


class NotPClosed(InputError):
    pass


class ZeroVector(InputError):
    pass


class NotPNilpotent(InputError):
    pass


class DimensionTooSmall(InputError):
    pass


class NotUnipotent(InputError):
    pass


class EmptyE2(InputError):
    pass


class DimensionDivisibleByP(InputError):
    pass


class NotSupersolvable(InputError):
    pass


class NotSplit(InputError):
    def __init__(self, message: str, suggested_degree: int = 1, **details) -> None:
        super().__init__(message, suggested_degree=suggested_degree, **details)
        self.suggested_degree = suggested_degree


class AxiomFailure(VerificationError):
    pass


class NotEndotrivial(VerificationError):
    pass


class NotEndotrivialOnPlane(VerificationError):
    pass


class NotConstantRankOnPlane(VerificationError):
    pass


class RadicalCheckFailed(VerificationError):
    "The computed radical is not a nilpotent two-sided ideal of the algebra"


class UnknownIsomorphism(VerificationError):
    pass


class WalkDepthExceeded(VerificationError):
    pass
