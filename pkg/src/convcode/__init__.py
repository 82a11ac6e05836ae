"""Exact analysis of convolutional codes over finite fields."""

from __future__ import annotations

from .code import ConvCode, dual, encode
from .config import Budgets, default_budgets, set_default_budgets
from .distances import (
    DistanceProfile,
    OmegaSeries,
    active_burst_by_composition,
    active_distances,
    active_row_distances,
    column_distances,
    extended_row_distances,
    free_distance,
    omega_series,
    profile,
)
from .equivalence import (
    MonomialMatrix,
    ZMonomialMatrix,
    code_isometric,
    code_me,
    code_strongly_isometric,
    matrix_me,
    matrix_zme,
    paired_isometry,
    reduced_encoder_orbit,
    sliding_matrix,
)
from .errors import (
    BudgetExceededError,
    ConvCodeError,
    NotBasicError,
    NotReducedError,
    ParseError,
    PreconditionError,
)
from .gf import GF, Field, FieldElement, field_create
from .polyalg import Poly, PolyMatrix, is_basic, is_reduced, parse_poly
from .realization import Realization, ccf, in_S, is_atomic
from .wam import WAM, wam, wam_equivalent, wam_hat, wam_tilde
from .wenum import WPoly, WSeries

__all__ = [name for name in dir() if not name.startswith("_")]
