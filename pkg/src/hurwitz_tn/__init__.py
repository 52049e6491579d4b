"""Total nonnegativity of Hurwitz matrices and (quasi-)stability of real polynomials."""

from .classification import ClassificationReport, check_reflection_property, classify, factor_quasistable
from .errors import (
    CapExceeded,
    DegreeTooSmall,
    FactorizationFailed,
    GcdUnreliable,
    HurwitzError,
    PreconditionFailed,
    RootFindingFailed,
    SpectralFailed,
    UseQuasiStabilityRule,
)
from .hurwitz_matrices import (
    StructuredMatrix,
    finite_hurwitz,
    finite_hurwitz_type,
    hurwitz_type,
    infinite_hurwitz_truncation,
    schoenberg_tr,
    toeplitz_of,
    verify_factorization,
    verify_hurwitz_factorization,
)
from .polya_frequency import PfReport, is_pf_r, schoenberg_sharp_polynomial
from .polynomial import Backend, Polynomial, RootSet, find_roots, gcd_even_odd, split_even_odd
from .sector_analysis import (
    SectorVerdict,
    check_zero_free_sector,
    necessary_sector_halfangle,
    sharp_necessary_example,
    sharp_sufficient_counterexample,
    sufficient_sector_halfangle,
)
from .spectral import SpectralReport, rank_of, spectral_analysis
from .tnn_checker import (
    MinorSequence,
    TnnReport,
    eta_minors,
    hurwitz_minors,
    is_totally_nonnegative,
    stability_index_from_minors,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
