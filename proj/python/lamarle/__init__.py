from ._core import (
    CatalogEntry,
    Expr,
    LamarleError,
    LamarleReport,
    LVec3,
    RuledSurface,
    angle,
    catalog_names,
    causal_character,
    classify,
    cross,
    director_frame,
    distribution_parameter,
    first_forms,
    gaussian_curvature_forms,
    get_surface,
    lamarle_curvature,
    max_abs_diff,
    metric,
    norm,
    parse_expression,
    random_surface,
    second_forms,
    striction_point,
    surface_from_json,
    valid_v_range,
    verify_lamarle,
)

__version__ = "0.1.0"
