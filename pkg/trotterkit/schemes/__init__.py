# Splitting-scheme catalog, multi-stage coefficients and scheme files
from .scheme_catalog import (
    SCHEME_NAMES,
    SplittingScheme,
    StageCoefficients,
    UnknownSchemeError,
    conjugate_alternate,
    get_scheme,
    list_schemes,
    reconstruct_two_stage,
    recursive_compose,
    stage_cost_factor,
    suzuki_compose,
    symmetric_complete,
    to_stage_coefficients,
)
from .scheme_file import (
    SchemeFileError,
    load_scheme,
    resolve_scheme,
    save_scheme,
    scheme_from_json,
    scheme_to_json,
)

__all__ = [
    "SCHEME_NAMES",
    "SplittingScheme",
    "StageCoefficients",
    "UnknownSchemeError",
    "SchemeFileError",
    "conjugate_alternate",
    "get_scheme",
    "list_schemes",
    "reconstruct_two_stage",
    "recursive_compose",
    "stage_cost_factor",
    "suzuki_compose",
    "symmetric_complete",
    "to_stage_coefficients",
    "load_scheme",
    "resolve_scheme",
    "save_scheme",
    "scheme_from_json",
    "scheme_to_json",
]
