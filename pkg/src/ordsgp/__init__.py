"""Toolkit for finite ordered semigroups.

Builds, validates, and enumerates finite ordered semigroups; computes
Green's and starred relations, regularity data, and congruences; decides a
vocabulary of structure predicates; and machine-checks the classical
equivalence batteries for pi-t-simple and pi-inverse ordered semigroups
over exhaustively enumerated small models.
"""

from .congruences import (
    CongruenceCertificate,
    classify_partition,
    corollary_suites,
    enumerate_semilattice_congruences,
    semilattice_decomposition,
    theorem8_conditions,
)
from .core import (
    FIXTURES,
    OrderedSemigroup,
    PowerProfile,
    PredicateResult,
    SubsetMask,
    ValidationReport,
    Violation,
    downward_closure,
    lz2,
    n2,
    power_profile,
    principal_ideal,
    restrict,
    rz2,
    sl2,
    structure_from_dict,
    structure_from_key,
    structure_key,
    structure_to_dict,
    subset_product,
    t1,
    validate,
)
from .enumeration import (
    GenerationConfig,
    SamplingBudgetExceeded,
    canonical_form,
    enumerate_compatible_orders,
    enumerate_ordered_semigroups,
    enumerate_tables,
    random_ordered_semigroup,
    sample_structures,
)
from .harness import (
    THEOREM_IDS,
    EquivalenceReport,
    SearchResult,
    SuiteReport,
    run_suite,
    search_model,
    verify,
)
from .predicates import (
    PREDICATE_NAMES,
    STRUCTURE_PREDICATE_NAMES,
    dual_predicates,
    left_pi_inverse_def,
    left_pi_t_simple_direct,
    lemma3_predicate,
    lemma7_predicate,
    named_predicate,
    nil_extension_search,
    pi_inverse_def,
    pi_t_simple_direct,
    right_pi_inverse_def,
    right_pi_t_simple_direct,
    structure_predicate,
    theorem2_conditions,
    theorem4_conditions,
    theorem5_conditions,
    theorem6_condition,
    theorem51_conditions,
)
from .relations import (
    Partition,
    RegularityProfile,
    green,
    is_rho_unique,
    ordered_idempotents,
    ordered_inverses,
    regularity_profile,
    smallest_regular_power,
    starred,
)

__version__ = "0.1.0"
