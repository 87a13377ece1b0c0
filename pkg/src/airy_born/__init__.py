"""Elastic scattering of Airy electron wave packets in the generalized Born approximation."""

from .special_functions import (
    AiryError, AiryDomainError, AiryOverflowError, AiryBranchError,
    airy_ai, airy_ai_scaled, airy_zero, airy_zeros, airy_contour_oracle,
)
from .packet import (
    AiryPacketParams, BeamKinematics, SpecialPoint, SpecialPointKind,
    momentum_wavefunction, effective_spatial_wavefunction, special_point,
    validate_regime, kinetic_energy_ev,
)
from .potentials import PotentialSpec, PotentialKind, hydrogen_spec, yukawa_spec, i_function, born_amplitude
from .amplitude import (
    MomentumTransfer, FlatAngles, AmplitudeResult, momentum_transfer, flat_from_polar,
    polar_from_flat, scattering_amplitude, scattering_amplitudes, scattering_amplitude_oracle2d,
    point_potential_limit,
)
from .observables import (
    AngularGrid, TargetDistribution, PatternKind, PatternClass, PatternGrid,
    PatternGridError, ClassificationAmbiguousError, DivisionFloorError,
    probability_density, pattern_grid, classify_pattern, azimuthal_ratio,
    azimuthal_variation, mesoscopic_density, macroscopic_cross_section,
    critical_size, size_inequality_check,
)
from .quadrature import QuadratureError

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "AiryError",
    "AiryDomainError",
    "AiryOverflowError",
    "AiryBranchError",
    "airy_ai",
    "airy_ai_scaled",
    "airy_zero",
    "airy_zeros",
    "airy_contour_oracle",
    "AiryPacketParams",
    "BeamKinematics",
    "SpecialPoint",
    "SpecialPointKind",
    "momentum_wavefunction",
    "effective_spatial_wavefunction",
    "special_point",
    "validate_regime",
    "kinetic_energy_ev",
    "PotentialSpec",
    "PotentialKind",
    "hydrogen_spec",
    "yukawa_spec",
    "i_function",
    "born_amplitude",
    "MomentumTransfer",
    "FlatAngles",
    "AmplitudeResult",
    "momentum_transfer",
    "flat_from_polar",
    "polar_from_flat",
    "scattering_amplitude",
    "scattering_amplitudes",
    "scattering_amplitude_oracle2d",
    "point_potential_limit",
    "AngularGrid",
    "TargetDistribution",
    "PatternKind",
    "PatternClass",
    "PatternGrid",
    "PatternGridError",
    "ClassificationAmbiguousError",
    "DivisionFloorError",
    "probability_density",
    "pattern_grid",
    "classify_pattern",
    "azimuthal_ratio",
    "azimuthal_variation",
    "mesoscopic_density",
    "macroscopic_cross_section",
    "critical_size",
    "size_inequality_check",
    "QuadratureError",
]
