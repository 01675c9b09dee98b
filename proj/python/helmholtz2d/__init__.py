"""2D Helmholtz separable bases, interbasis coefficients and identity checks."""

import json

from ._core import (
    ConfigError,
    ContractError,
    ConvergenceError,
    Error,
    NodeError,
    OriginError,
    PoleError,
    QuadratureError,
    RangeError,
    SingularityError,
    abs_gamma_sq,
    angular_integral,
    bessel_j,
    continuous_hahn,
    identity_names,
    kummer_1f1,
    ln_gamma,
    psi_cartesian,
    psi_double_parity,
    psi_miller,
    psi_parabolic,
    psi_plane,
    psi_polar,
    s_coeff,
    sine_power_integral,
    suite_names,
    verify_json,
    w_coeff,
    w_projection_oracle,
    z_coeff,
)


def verify(suite="all", config_path=None):
    """Run a suite and return the reports as dicts (same fields as the CLI output)."""
    return [json.loads(line) for line in verify_json(suite, config_path)]


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
