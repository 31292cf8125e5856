import logging

log = logging.getLogger("rlakit")
LOG_FORMAT = "%(asctime)s.%(msecs)03d %(levelname)s %(threadName)s %(message)s"
logging.basicConfig(level=logging.INFO, format=LOG_FORMAT, datefmt="%X")


from .errors import (
    AxiomFailure,
    BadParameters,
    BudgetExceeded,
    CharTwoUnsupported,
    DimensionDivisibleByP,
    DimensionMismatch,
    DimensionTooSmall,
    EmptyE2,
    InputError,
    NotAnIdeal,
    NotConstantRankOnPlane,
    NotEndotrivial,
    NotEndotrivialOnPlane,
    NotIrreducible,
    NotPClosed,
    NotPNilpotent,
    NotPrime,
    NotSplit,
    NotSupersolvable,
    NotUnipotent,
    RadicalCheckFailed,
    RlakitError,
    UnknownEntry,
    UnknownIsomorphism,
    VerificationError,
    WalkDepthExceeded,
    ZeroVector,
)
from .file_utils import load_json, save_json, dumps_canonical
from .misc_utils import check_budget, progress
