"""Curvature and mixed curvature measures of convex polytopes."""

from ._polycurv import (
    McConfig,
    MixedContribution,
    MixedMeasureReport,
    Polytope,
    TifReport,
    TifSide,
    ValidationError,
    curvature_measure,
    external_angle,
    intrinsic_volume,
    mixed_curvature_measure,
    mixed_volume,
    steiner_volume,
    translative_check,
)

__all__ = [
    "McConfig",
    "MixedContribution",
    "MixedMeasureReport",
    "Polytope",
    "TifReport",
    "TifSide",
    "ValidationError",
    "curvature_measure",
    "external_angle",
    "intrinsic_volume",
    "mixed_curvature_measure",
    "mixed_volume",
    "steiner_volume",
    "translative_check",
]
