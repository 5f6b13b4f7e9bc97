"""gluckknot: ribbon 2-knots, Gluck twists, and Alexander invariants."""

from .coset import (
    EnumerationOutcome,
    TrivialityCertificate,
    certify_trivial,
    enumerate_cosets,
)
from .fox import (
    AlexanderMatrix,
    AlexanderResult,
    FirstIdealZero,
    GroupRingElement,
    OrientationError,
    abelianize,
    alexander_matrix,
    alexander_polynomial,
    fox_derivative,
    fundamental_identity_check,
    solve_orientation_weights,
)
from .intmatrix import (
    AbelianGroup,
    IntMatrix,
    SmithForm,
    cokernel,
    smith_normal_form,
)
from .laurent import LaurentPolynomial, divide_exact, divides, laurent_gcd, unit_equivalent
from .twoknot import (
    FamilyClassification,
    GluckVariant,
    HandleCounts,
    InvalidRibbonError,
    ParityClass,
    RibbonTwoKnot,
    SpunObstruction,
    classify,
    complement_handle_counts,
    complement_presentation,
    delta_classes,
    delta_equivalent,
    distinct,
    family_knot,
    family_presentation,
    family_record,
    family_relator,
    gluck_handle_counts,
    gluck_quotient,
    spun_obstruction,
)
from .words import (
    Presentation,
    PresentationError,
    Word,
    WordSyntaxError,
    parse_word,
    word_to_str,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "AlexanderMatrix",
    "AlexanderResult",
    "EnumerationOutcome",
    "FamilyClassification",
    "FirstIdealZero",
    "GluckVariant",
    "GroupRingElement",
    "HandleCounts",
    "IntMatrix",
    "InvalidRibbonError",
    "LaurentPolynomial",
    "OrientationError",
    "ParityClass",
    "Presentation",
    "PresentationError",
    "RibbonTwoKnot",
    "SmithForm",
    "SpunObstruction",
    "TrivialityCertificate",
    "Word",
    "WordSyntaxError",
    "abelianize",
    "alexander_matrix",
    "alexander_polynomial",
    "certify_trivial",
    "classify",
    "cokernel",
    "complement_handle_counts",
    "complement_presentation",
    "delta_classes",
    "delta_equivalent",
    "distinct",
    "divide_exact",
    "divides",
    "enumerate_cosets",
    "family_knot",
    "family_presentation",
    "family_record",
    "family_relator",
    "fox_derivative",
    "fundamental_identity_check",
    "gluck_handle_counts",
    "gluck_quotient",
    "laurent_gcd",
    "parse_word",
    "smith_normal_form",
    "solve_orientation_weights",
    "spun_obstruction",
    "unit_equivalent",
    "word_to_str",
]
