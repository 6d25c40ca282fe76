"""Periodic polynomial splines on a uniform mesh.

Thin python facade over the compiled extension: B-spline bases, circulant
Gram systems with certified inverse decay, L2 projection, and a family of
nodal quasi-interpolants with exact rational stencils.
"""

from ._core import (
    PeriodicSpline,
    SplineSpace,
    basis_eval,
    binomial_alternating_sum,
    cardinal_bspline,
    cardinal_bspline_fourier,
    corpus_labels,
    demko_bound,
    gram_stencil,
    inverse_first_row,
    inverse_inequality_constant,
    l2_error,
    make_spline,
    project,
    quasi_alignment_shift,
    quasi_interpolate,
    quasi_sup_bound,
    sobolev_seminorm,
    spectral_bounds,
    stability_report,
    tw_delta,
    tw_stencil,
)

__version__ = "0.1.0"

__all__ = [
    "PeriodicSpline",
    "SplineSpace",
    "basis_eval",
    "binomial_alternating_sum",
    "cardinal_bspline",
    "cardinal_bspline_fourier",
    "corpus_labels",
    "demko_bound",
    "gram_stencil",
    "inverse_first_row",
    "inverse_inequality_constant",
    "l2_error",
    "make_spline",
    "project",
    "quasi_alignment_shift",
    "quasi_interpolate",
    "quasi_sup_bound",
    "sobolev_seminorm",
    "spectral_bounds",
    "stability_report",
    "tw_delta",
    "tw_stencil",
    "__version__",
]
