"""Charge-dyon bound states through the Kustaanheimo-Stiefel map.

Closed-form spectra and eigenfunctions in hyperspherical and parabolic
coordinates, with finite-difference eigensolvers as independent checks.
"""
from .errors import (
    DegenerateOriginError,
    GridResolutionError,
    InvalidParameterError,
    InvalidQuantumNumbersError,
    KSDyonError,
    OriginSingularityError,
    PoleDivergenceError,
    StringSingularityError,
)
from .ksmap import (
    FiberAngle,
    HypersphericalPoint,
    ParabolicPoint,
    Point3,
    Point4,
    fiber_action,
    gauge_potential_cartesian,
    gauge_potential_parabolic,
    gauge_potential_spherical,
    ks_forward,
    ks_inverse,
    to_hyperspherical,
    to_parabolic,
)
from .numerics import EigenResult, Grid1D, solve_angular, solve_oscillator, solve_parabolic, solve_radial
from .residuals import residual
from .spectra import (
    EnergyLevel,
    QuantumNumbersHS,
    QuantumNumbersPar,
    duality_map,
    energy_hyperspherical,
    energy_parabolic,
    enumerate_level,
    k_param,
    separation_constants,
)
from .tridiag import BACKEND
from .units import PhysicalContext, default_context
from .verify import VerificationReport, check_duality, cross_spectrum_check, run_suite
from .wavefunctions import (
    AngularState,
    ParabolicState,
    RadialState,
    angular_eval,
    assemble_psi_hyperspherical,
    assemble_psi_parabolic,
    normalize,
    parabolic_eval,
    radial_eval,
)

__version__ = "0.1.0"
