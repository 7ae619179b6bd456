"""Pressure-drop/flow-rate relations for converging-diverging capillaries.

Closed-form laminar-flow solutions for five axisymmetric corrugation
profiles, an adaptive-quadrature evaluator of the underlying integral that
doubles as an independent check on them, and series/parallel composition
of tubes into hydraulic networks.
"""

from .analytic import (
    Fluid,
    FlowState,
    HydraulicResistance,
    equivalent_radius,
    flow_rate,
    hydraulic_resistance,
    inverse_r4_integral,
    poiseuille_pressure_drop,
    pressure_drop,
)
from .errors import (
    CapillaryFlowError,
    EmptyCompositeError,
    NetworkSpecError,
    NonPositiveLengthError,
    NonPositiveRadiusError,
    NonPositiveViscosityError,
    NotConvergedError,
    OutOfDomainError,
    RadiusOrderError,
    SignMismatchError,
    StraightRadiusMismatchError,
    TooFewSamplesError,
)
from .geometry import (
    ProfileTable,
    RadiusProfile,
    ShapeKind,
    ShapeParameters,
    make_profile,
    radius_array,
    radius_at,
    sample_profile,
    shape_parameters,
)
from .network import (
    NetworkElement,
    Parallel,
    Series,
    Tube,
    network_flow_rate,
    network_pressure_drop,
    network_resistance,
)
from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    QuadratureResult,
    VerificationReport,
    adaptive_integrate,
    integrate_inverse_r4,
    numeric_pressure_drop,
    random_profile,
    verification_sweep,
    verify_analytic,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # geometry
    "ShapeKind",
    "RadiusProfile",
    "ShapeParameters",
    "ProfileTable",
    "make_profile",
    "shape_parameters",
    "radius_at",
    "radius_array",
    "sample_profile",
    # analytic
    "Fluid",
    "FlowState",
    "HydraulicResistance",
    "poiseuille_pressure_drop",
    "pressure_drop",
    "flow_rate",
    "hydraulic_resistance",
    "equivalent_radius",
    "inverse_r4_integral",
    # quadrature
    "QuadratureConfig",
    "QuadratureResult",
    "VerificationReport",
    "DEFAULT_CONFIG",
    "adaptive_integrate",
    "integrate_inverse_r4",
    "numeric_pressure_drop",
    "verify_analytic",
    "random_profile",
    "verification_sweep",
    # network
    "Tube",
    "Series",
    "Parallel",
    "NetworkElement",
    "network_resistance",
    "network_pressure_drop",
    "network_flow_rate",
    # errors
    "CapillaryFlowError",
    "NonPositiveRadiusError",
    "RadiusOrderError",
    "StraightRadiusMismatchError",
    "NonPositiveLengthError",
    "NonPositiveViscosityError",
    "SignMismatchError",
    "OutOfDomainError",
    "TooFewSamplesError",
    "EmptyCompositeError",
    "NotConvergedError",
    "NetworkSpecError",
]
