"""Ring groups of H-trivial links: words, presentations, coset enumeration and ring motions."""

from ._core import (
    Error,
    NotEliminable,
    OutOfSpace,
    ParseError,
    Presentation,
    RotationPath,
    UnknownGenerator,
    abelianization,
    assemble_extension,
    builtin_motion_names,
    check_builtin_motion,
    check_groups,
    check_hom,
    check_motion,
    coset_index,
    element_order,
    normal_form,
    quotient_by,
    ring_distance,
    rotation_number,
    verify_paper,
)

__all__ = [
    "Error",
    "NotEliminable",
    "OutOfSpace",
    "ParseError",
    "Presentation",
    "RotationPath",
    "UnknownGenerator",
    "abelianization",
    "assemble_extension",
    "builtin_motion_names",
    "check_builtin_motion",
    "check_groups",
    "check_hom",
    "check_motion",
    "coset_index",
    "element_order",
    "normal_form",
    "quotient_by",
    "ring_distance",
    "rotation_number",
    "verify_paper",
]
