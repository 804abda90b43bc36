"""Exact ramification breaks of cyclic p^n extensions of F_q((t)).

Truncated Witt-vector arithmetic over arbitrary commutative rings, reduction
of vectors to break-readable form with self-verifying certificates,
closed-form upper/lower ramification breaks with the piecewise-linear
numbering change, and an independent explicit-tower oracle that recomputes
the breaks from the ramification filtration itself.
"""

from .breaks import (
    BreakProfile,
    PLFunction,
    full_profile,
    hasse_herbrand,
    lower_from_upper,
    subextension_profile,
    upper_breaks,
    upper_from_lower,
)
from .field import (
    BoundedBelow,
    FqElement,
    FqEmbedding,
    FqField,
    INF,
    LaurentPoly,
    LaurentRing,
    laurent_from_pairs,
    laurent_to_pairs,
    parse_fq,
    print_fq,
    print_laurent,
    wp_inverse_positive,
)
from .reduction import (
    ReductionCertificate,
    StrongReductionResult,
    in_wp_image,
    is_reduced,
    is_strongly_reduced,
    reduce_vector,
    shift_to_length,
    strongly_reduce,
    subextension_vector,
)
from .tower import (
    CompareVerdict,
    GaloisElt,
    Tower,
    apply_galois,
    build_tower,
    compare,
    filtration_breaks,
    reduce_rhs,
    tower_valuation,
)
from .witt import WittVec, check_structural_identities, head, tail
from .wittpoly import (
    IntPolynomial,
    WittPolySet,
    check_phantom_identities,
    gen_witt_polys,
    phantom_poly,
    sum_poly_first_components,
    witt_poly_set,
)

__version__ = "0.1.0"

__all__ = [
    "BoundedBelow",
    "BreakProfile",
    "CompareVerdict",
    "FqElement",
    "FqEmbedding",
    "FqField",
    "GaloisElt",
    "INF",
    "IntPolynomial",
    "LaurentPoly",
    "LaurentRing",
    "PLFunction",
    "ReductionCertificate",
    "StrongReductionResult",
    "Tower",
    "WittPolySet",
    "WittVec",
    "apply_galois",
    "build_tower",
    "check_phantom_identities",
    "check_structural_identities",
    "compare",
    "filtration_breaks",
    "full_profile",
    "gen_witt_polys",
    "hasse_herbrand",
    "head",
    "in_wp_image",
    "is_reduced",
    "is_strongly_reduced",
    "laurent_from_pairs",
    "laurent_to_pairs",
    "lower_from_upper",
    "parse_fq",
    "phantom_poly",
    "print_fq",
    "print_laurent",
    "reduce_rhs",
    "reduce_vector",
    "shift_to_length",
    "strongly_reduce",
    "subextension_profile",
    "subextension_vector",
    "sum_poly_first_components",
    "tail",
    "tower_valuation",
    "upper_breaks",
    "upper_from_lower",
    "witt_poly_set",
    "wp_inverse_positive",
]
