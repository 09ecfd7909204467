"""Alternating runs, peaks, derivative polynomials and central factorial numbers,
in exact arithmetic, with brute-force and generating-function cross-checks."""

from .errors import (
    AltrunsError,
    BoundExceeded,
    DegreeExceedsHomogenization,
    IntegralityViolation,
    KindMismatch,
    NonExactDivision,
    NonUnitDenominator,
    NonzeroInnerConstant,
    OrderMismatch,
    UnsupportedIndex,
)
from .families import family_poly, special_number
from .gf import GfId, verify_gf
from .identities import (
    IdentityId,
    carlitz_original_diff,
    ma_p,
    ma_r,
    stanley_r,
    verify_identity,
    verify_range,
)
from .oracles import Permutation, SignedPermutation, StatRow, oracle_row, stat_of
from .report import VerificationReport, Witness
from .triangles import (
    binomial,
    cf_partition_oracle,
    mn_coefficients,
    stirling2,
    triangle,
    u_basis_identity,
    u_number,
    v_number,
)

__version__ = "0.1.0"
