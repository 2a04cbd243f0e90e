"""Numerical ranges and spectra of real linear operators x -> T x + A conj(x)."""

import json as _json

from ._core import (
    DEFAULT_SEED,
    Operator,
    RealopError,
    convex_hull,
    decompose,
    disk_at,
    eigen_check,
    example,
    example_names,
    hausdorff_distance,
    inner,
    load_operator,
    numerical_radius,
    numerical_range,
    parse_operator,
    radius_bounds,
    render_svg,
    scalar_pencil,
    scan,
    self_adjoint_split,
    sigma_min,
    unit_sphere_sample,
)


def verify(seed=DEFAULT_SEED, trials=20):
    """Run the invariant suite and return the report as a dict."""
    from ._core import run_verify

    return _json.loads(run_verify(seed, trials))


__all__ = [name for name in dir() if not name.startswith("_")]
