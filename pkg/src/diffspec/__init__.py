"""Exact differential-spectrum analysis over odd-characteristic finite fields."""

from .charsum import (
    LambdaEntry,
    char_sum_poly,
    chi_table,
    lambda_direct,
    lambda_extend,
    lambda_table,
    point_count_cubic,
    quad_sum_closed,
    quadratic_character,
)
from .errors import CapExceededError, ExactnessError, VerificationError
from .family import (
    CountPair,
    build_fu,
    closed_n4,
    closed_signed_count,
    closed_spectrum,
    closed_uniformity,
    closed_zero_count,
    count_quads_all_nonsquare,
    count_signed_quadruples,
    count_triples_all_nonsquare,
    count_triples_all_square,
    count_zero_containing,
    fminus1_check,
)
from .ff import FieldCtx, field_ctx, find_irreducible, is_irreducible
from .sbox import (
    FunctionTable,
    LocallyApnResult,
    MomentReport,
    ddt_compute,
    delta,
    function_table_from_dict,
    function_table_to_dict,
    is_locally_apn,
    moment_check,
    n4_brute,
    n4_from_ddt,
    spectrum_from_ddt,
    spectrum_to_dict,
    table_from_callable,
    uniformity,
    write_ddt_csv,
)
from .verify import run_verification

__all__ = [name for name in dir() if not name.startswith("_")]
