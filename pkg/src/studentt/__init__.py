"""Central Student's-t distribution: evaluation and inversion.

Public surface: the density/CDF family in `tcdf`, the inversion methods and
dispatcher in `tinv`, the erfc-based large-n machinery in `uniform_asym`,
scalar special functions in `specfun`, and the extended-precision test
oracle in `oracle` (imported lazily; everything else is stdlib-only).
"""
from . import specfun, tcdf, tinv, uniform_asym  # noqa: F401
from .tcdf import cdf, cdf_via_2f1, cdf_via_incbeta, pdf, sf  # noqa: F401
from .tinv import (  # noqa: F401
    Method,
    QuantileResult,
    inv_central_series,
    inv_fixed_point,
    inv_left_tail_series,
    inv_uniform_asym,
    newton_polish,
    quantile,
)
from .uniform_asym import cdf_uniform_asym  # noqa: F401

__version__ = "0.1.0"
