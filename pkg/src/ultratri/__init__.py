"""Discreteness certificates for complex hyperbolic ultra-parallel triangle groups."""
from .certify import (
    Certificate,
    RegionMembership,
    Verdict,
    certify_theorem1,
    indices_to_check,
    projection_f,
    quadratic_coeffs,
    region_membership,
    segment_index_l,
    t_n_threshold,
    trace_w,
)
from .hermitian import (
    EPS_CLASS,
    EPS_FORM,
    Isometry,
    IsometryClass,
    IsometryKind,
    Model,
    bergman_distance,
    classify_isometry,
    hermitian_cross,
    hermitian_product,
    reflection_from_polar,
    vector_class,
)
from .siegel import (
    HeisenbergPoint,
    ZeroParams,
    certify_theorem3,
    cygan_distance,
    generators_zero,
    h_value,
    kn_condition_lhs,
    region_index_n,
    t_n_zero,
    trace_w_zero,
)
from .ultra import (
    PolarTriple,
    ProjectedDisk,
    TriangleParams,
    existence_bound,
    generators,
    polar_vectors,
    power_R2R1,
    project_to_axis,
    projected_disk,
    v_coordinate,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "EPS_CLASS",
    "EPS_FORM",
    "HeisenbergPoint",
    "Isometry",
    "IsometryClass",
    "IsometryKind",
    "Model",
    "PolarTriple",
    "ProjectedDisk",
    "RegionMembership",
    "TriangleParams",
    "Verdict",
    "ZeroParams",
    "bergman_distance",
    "certify_theorem1",
    "certify_theorem3",
    "classify_isometry",
    "cygan_distance",
    "existence_bound",
    "generators",
    "generators_zero",
    "h_value",
    "hermitian_cross",
    "hermitian_product",
    "indices_to_check",
    "kn_condition_lhs",
    "polar_vectors",
    "power_R2R1",
    "project_to_axis",
    "projected_disk",
    "projection_f",
    "quadratic_coeffs",
    "reflection_from_polar",
    "region_index_n",
    "region_membership",
    "segment_index_l",
    "t_n_threshold",
    "t_n_zero",
    "trace_w",
    "trace_w_zero",
    "v_coordinate",
    "vector_class",
]
