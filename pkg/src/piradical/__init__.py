"""Exact permutation-group engine for radical and generation-width experiments.

The layers, bottom up: :mod:`piradical.perms` (image-tuple permutations),
:mod:`piradical.groups` (deterministic stabilizer chains: exact order,
membership, uniform random elements), :mod:`piradical.structure` (conjugacy
classes, normal closures, the largest normal subgroup with order support in
a prime set), :mod:`piradical.width` (breadth-first minimal-width searches
over subgroups generated by conjugate tuples, with certified witnesses),
:mod:`piradical.catalog` (named groups and projective-line constructions),
and :mod:`piradical.cli` (the experiment runner).
"""

__version__ = "0.1.0"

from .errors import (
    BudgetExhausted,
    CentralizesSocle,
    ClassTooLarge,
    CycleError,
    DegreeMismatch,
    InvariantViolation,
    MalformedCycle,
    NotAMember,
    NotATransposition,
    NotNormalizing,
    ParseError,
    PiContainsTwo,
    PiradicalError,
    PointOutOfRange,
    PowerIsIdentity,
    RepeatedPoint,
    RNotDividingOrder,
    TooLarge,
    UnsupportedQ,
)
from .factored import FactoredInteger, is_prime
from .perms import Permutation
from .groups import PermGroup
from .structure import (
    ConjugacyClass,
    PrimeSet,
    centralizer_order,
    class_closures,
    class_representatives,
    conjugation_orbit,
    element_order_spectrum,
    has_element_of_order,
    is_pi_group,
    is_pi_number,
    normal_closure,
    normal_subgroups,
    pi_radical,
    radical_is_trivial_by_prime_degree,
)
from .width import (
    AlmostSimpleContext,
    BaerSuzukiReport,
    BSMembershipResult,
    ClassMembershipRecord,
    ClassPairRecord,
    GroupClassData,
    SearchBudget,
    TranspositionGraph,
    TranspositionSweepReport,
    WidthResult,
    alpha,
    baer_suzuki_check,
    beta,
    bs_membership,
    involution_pair_orders,
    min_width_search,
    minimal_membership_width,
    odd_pi_two_conjugates_check,
    power_width_comparison,
    transposition_pi_sweep,
)
from .catalog import (
    CatalogEntry,
    FieldTable,
    GroupSpec,
    ProjectiveSemilinear9,
    SUPPORTED_Q,
    alternating_group,
    automorphism_by_name,
    catalog_groups,
    cyclic_group,
    dihedral_group,
    field_table,
    group_by_name,
    load_spec,
    pgl2,
    prime_order_class_representatives,
    projective_semilinear_9,
    psl2,
    socle_by_name,
    symmetric_group,
    write_spec,
)

__all__ = [
    "__version__",
    # errors
    "PiradicalError",
    "CycleError",
    "MalformedCycle",
    "PointOutOfRange",
    "RepeatedPoint",
    "DegreeMismatch",
    "NotAMember",
    "TooLarge",
    "ClassTooLarge",
    "BudgetExhausted",
    "NotNormalizing",
    "CentralizesSocle",
    "NotATransposition",
    "PowerIsIdentity",
    "RNotDividingOrder",
    "PiContainsTwo",
    "UnsupportedQ",
    "ParseError",
    "InvariantViolation",
    # core
    "Permutation",
    "PermGroup",
    "FactoredInteger",
    "is_prime",
    # structure
    "PrimeSet",
    "ConjugacyClass",
    "conjugation_orbit",
    "class_representatives",
    "element_order_spectrum",
    "has_element_of_order",
    "normal_closure",
    "centralizer_order",
    "class_closures",
    "pi_radical",
    "normal_subgroups",
    "radical_is_trivial_by_prime_degree",
    "is_pi_group",
    "is_pi_number",
    # width
    "SearchBudget",
    "WidthResult",
    "AlmostSimpleContext",
    "min_width_search",
    "alpha",
    "beta",
    "power_width_comparison",
    "GroupClassData",
    "ClassMembershipRecord",
    "BSMembershipResult",
    "bs_membership",
    "odd_pi_two_conjugates_check",
    "minimal_membership_width",
    "ClassPairRecord",
    "BaerSuzukiReport",
    "baer_suzuki_check",
    "TranspositionGraph",
    "TranspositionSweepReport",
    "transposition_pi_sweep",
    "involution_pair_orders",
    # catalog
    "symmetric_group",
    "alternating_group",
    "cyclic_group",
    "dihedral_group",
    "prime_order_class_representatives",
    "FieldTable",
    "field_table",
    "SUPPORTED_Q",
    "psl2",
    "pgl2",
    "ProjectiveSemilinear9",
    "projective_semilinear_9",
    "CatalogEntry",
    "catalog_groups",
    "group_by_name",
    "socle_by_name",
    "automorphism_by_name",
    "GroupSpec",
    "load_spec",
    "write_spec",
]
