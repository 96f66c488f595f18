"""Pointwise Kan extensions over explicitly finite categories.

Categories, functors and natural transformations are explicit tables; Kan
extensions of finite-set-valued functors are computed with the comma
category (co)limit formulas and every universal property can be checked by
exhaustive enumeration.
"""

from .category import (
    FinCategory,
    Functor,
    NatTrans,
    category_from_generators,
    chain_category,
    compose_functors,
    constant_functor,
    discrete_category,
    enumerate_functors,
    find_functor_iso,
    full_subcategory,
    identity_functor,
    identity_nat,
    inclusion_functor,
    is_fully_faithful,
    nat_transformations,
    opposite,
    opposite_functor,
    point_functor,
    poset_category,
    terminal_category,
    to_terminal,
    validate_category,
    validate_functor,
    validate_nat_trans,
    vcompose,
    whisker_left,
    whisker_right,
)
from .comma import CommaCategory, comma_left, comma_right, induced_comma_functor
from .errors import (
    ExtensionUndefined,
    GuardExceeded,
    KanError,
    NoColimit,
    NotFound,
    UniversalityError,
    ValidationError,
    Violation,
)
from .finite import colimit_in, lan_in, limit_in, ran_in
from .kan import (
    HomBijectionReport,
    HomFunctor,
    IdentityEndofunctor,
    KanExtension,
    PreservationReport,
    ProductFunctor,
    TabulatedEndofunctor,
    hom_bijection_check,
    lan,
    pointwise_check,
    preservation_check,
    ran,
    restriction_iso,
    verify_universal,
)
from .sets import (
    ColimitResult,
    LimitResult,
    SetFunctor,
    SetNatTrans,
    colimit,
    constant_set_functor,
    elements_category,
    find_natural_iso,
    limit,
    nat_hom,
    representable,
    set_functor,
)

__all__ = [
    "FinCategory",
    "Functor",
    "NatTrans",
    "category_from_generators",
    "chain_category",
    "compose_functors",
    "constant_functor",
    "discrete_category",
    "enumerate_functors",
    "find_functor_iso",
    "full_subcategory",
    "identity_functor",
    "identity_nat",
    "inclusion_functor",
    "is_fully_faithful",
    "nat_transformations",
    "opposite",
    "opposite_functor",
    "point_functor",
    "poset_category",
    "terminal_category",
    "to_terminal",
    "validate_category",
    "validate_functor",
    "validate_nat_trans",
    "vcompose",
    "whisker_left",
    "whisker_right",
    "CommaCategory",
    "comma_left",
    "comma_right",
    "induced_comma_functor",
    "ExtensionUndefined",
    "GuardExceeded",
    "KanError",
    "NoColimit",
    "NotFound",
    "UniversalityError",
    "ValidationError",
    "Violation",
    "colimit_in",
    "lan_in",
    "limit_in",
    "ran_in",
    "HomBijectionReport",
    "HomFunctor",
    "IdentityEndofunctor",
    "KanExtension",
    "PreservationReport",
    "ProductFunctor",
    "TabulatedEndofunctor",
    "hom_bijection_check",
    "lan",
    "pointwise_check",
    "preservation_check",
    "ran",
    "restriction_iso",
    "verify_universal",
    "ColimitResult",
    "LimitResult",
    "SetFunctor",
    "SetNatTrans",
    "colimit",
    "constant_set_functor",
    "elements_category",
    "find_natural_iso",
    "limit",
    "nat_hom",
    "representable",
    "set_functor",
]

__version__ = "0.1.0"
