"""Dynamics of composed involutions on (2,2)-surfaces in P2 x P2.

A surface V(L, Q) with L bilinear and Q biquadratic is a double cover of
each P2 factor; swapping the sheets gives two involutions whose composition
is, away from degenerate fibers, an automorphism of infinite order.  This
package computes with that map exactly: fibers and involutions over finite
fields and over the integers, point counts through an extension tower,
cycle structure, lifting of modular cycle data to rational periodic points,
and the zeta-function pipeline down to a Picard-number upper bound.
"""

from .errors import (
    BadReductionError,
    DegenerateFiberError,
    DegenerateSurfaceError,
    InconsistentDataError,
    MathematicalInconsistencyError,
    PointNotOnSurfaceError,
    UsageError,
)
from .ff import FiniteField, ZZ, make_extension, normalize_int_triple, odd_primes
from .fiber import FiberSolution, conjugate, phi, phi_inverse, solve_fiber
from .liftsearch import (
    SearchConfig,
    SurfaceVerdict,
    VerifyResult,
    crt_reconstruct,
    random_surface,
    rational_reconstruct,
    search,
    select_candidates,
    verify_periodic,
)
from .orbit import CycleTable, count_points, cycle_decomposition, enumerate_points
from .surface import (
    SurfaceCoefficients,
    evaluate,
    gh_values,
    is_degenerate_fiber,
    parse_surface,
    reduce_mod_p,
    side_coefficients,
    surface_digest,
    surface_to_dict,
    transpose,
)
from .zeta import ZetaData, picard_upper_bound, zeta_data, zeta_report

__version__ = "0.1.0"

__all__ = [
    "BadReductionError",
    "CycleTable",
    "DegenerateFiberError",
    "DegenerateSurfaceError",
    "FiberSolution",
    "FiniteField",
    "InconsistentDataError",
    "MathematicalInconsistencyError",
    "PointNotOnSurfaceError",
    "SearchConfig",
    "SurfaceCoefficients",
    "SurfaceVerdict",
    "UsageError",
    "VerifyResult",
    "ZZ",
    "ZetaData",
    "conjugate",
    "count_points",
    "crt_reconstruct",
    "cycle_decomposition",
    "enumerate_points",
    "evaluate",
    "gh_values",
    "is_degenerate_fiber",
    "make_extension",
    "normalize_int_triple",
    "odd_primes",
    "parse_surface",
    "phi",
    "phi_inverse",
    "picard_upper_bound",
    "random_surface",
    "rational_reconstruct",
    "reduce_mod_p",
    "search",
    "select_candidates",
    "side_coefficients",
    "solve_fiber",
    "surface_digest",
    "surface_to_dict",
    "transpose",
    "verify_periodic",
    "zeta_data",
    "zeta_report",
]
