"""Elliptic theta-function toolkit for the dispersionless DKP hierarchy.

Submodules: ``theta`` (theta functions), ``elliptic`` (E-functions, S, key
identities), ``curve`` (uniformization of p^2 = R^2 (w + 1/w) + V), ``series``
(truncated 1/z series), ``loewner`` (elliptic Löwner flow), ``hodograph``
(hodograph solutions) and ``cli``.
"""
__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .theta import ModularParam, TruncationPolicy, theta, theta_du, theta_const, theta1_product, theta_table
from .elliptic import (
    S, S_prime, S_tau, eisenstein, eisenstein_du, half_tau_collapse, key_identity_residual, phi_pair, wp_prime,
)
from .curve import CurveParams, curve_residual, p_of_u, ratio_identity_residual, tau_from_modulus, u_from_w, w_of_u
from .series import TruncatedSeries, b_prime_coeffs, compose_analytic, phi_k
from .loewner import DrivingFunction, TauPath, Trajectory, evolve, loewner_rhs
from .hodograph import HodographProblem, SpeedTable, TimeVector, hodograph_solve

__all__ = [
    "ModularParam", "TruncationPolicy", "theta", "theta_du", "theta_const", "theta1_product", "theta_table",
    "S", "S_prime", "S_tau", "eisenstein", "eisenstein_du", "half_tau_collapse", "key_identity_residual",
    "phi_pair", "wp_prime", "CurveParams", "curve_residual", "p_of_u", "ratio_identity_residual",
    "tau_from_modulus", "u_from_w", "w_of_u", "TruncatedSeries", "b_prime_coeffs", "compose_analytic", "phi_k",
    "DrivingFunction", "TauPath", "Trajectory", "evolve", "loewner_rhs", "HodographProblem", "SpeedTable",
    "TimeVector", "hodograph_solve",
]
