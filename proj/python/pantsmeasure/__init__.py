"""Measures of hyperbolic pairs of pants, one-holed torus sums and pants counting."""

import json as _json

from ._core import (
    AccuracyError,
    cusped_torus_from_length,
    deta_dx,
    deta_dy,
    dphi_dx1,
    enumerate_slopes,
    eta,
    eta_partial_sum,
    fricke_boundary_trace,
    lasso,
    length_to_x,
    li2,
    mcshane_partial_sum,
    min_measure_floor,
    np_upper_bound,
    phi_lengths,
    phi_x,
    rogers_l,
    suite_names,
    torus_from_lengths,
    unit_tangent_volume,
)

__version__ = "0.1.0"


def run_suite(name, grid=64, min=0.01, max=0.99, sampling="uniform", seed=0, threads=1):
    """Run a verification suite and return its report as a dict."""
    from ._core import run_suite_json

    return _json.loads(run_suite_json(name, grid, min, max, sampling, seed, threads))


__all__ = [
    "AccuracyError",
    "cusped_torus_from_length",
    "deta_dx",
    "deta_dy",
    "dphi_dx1",
    "enumerate_slopes",
    "eta",
    "eta_partial_sum",
    "fricke_boundary_trace",
    "lasso",
    "length_to_x",
    "li2",
    "mcshane_partial_sum",
    "min_measure_floor",
    "np_upper_bound",
    "phi_lengths",
    "phi_x",
    "rogers_l",
    "run_suite",
    "suite_names",
    "torus_from_lengths",
    "unit_tangent_volume",
]
