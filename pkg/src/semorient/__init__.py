"""Finite semigroup tables, equation witnesses, and commutator-subgroup checks."""

from .catalog import (
    CATALOG_FAMILIES,
    GROUP_FAMILIES,
    NONGROUP_FAMILIES,
    FamilyError,
    make_family,
)
from .core import (
    AssociativityError,
    CompatibilityError,
    Congruence,
    Monoid1,
    Semigroup,
    SemigroupError,
    TableFormatError,
    Word,
    adjoin_identity,
    check_associativity,
    compatibility_violation,
    eval_word,
    generated_congruence,
    idempotents,
    is_cancellative,
    is_commutative,
    make_semigroup,
    parse_table,
    quotient,
    serialize_table,
)
from .equations import (
    ONE_VAR_DEFAULT_BOUND,
    TWO_VAR_DEFAULT_BOUND,
    OneVarWitness,
    SigmaReport,
    TwoVarWitness,
    one_var_to_json,
    one_var_to_text,
    orientable_set,
    search_one_var,
    search_two_var,
    sigma_report,
    two_var_to_json,
    two_var_to_text,
    validate_one_var,
    validate_two_var,
    witness_from_json,
)
from .groups import (
    GroupStructure,
    NotAGroupError,
    abelianization,
    commutator,
    commutator_subgroup,
    coset_congruence,
    group_structure,
)
from .theorems import (
    CheckResult,
    CommutatorDecomposition,
    InvalidDecompositionError,
    NotInDerivedSubgroupError,
    NotRelatedError,
    VerificationReport,
    build_orientable_witness,
    build_two_var_witness,
    commutator_decomposition,
    decomposition_product,
    verify_orientable_is_commutator_subgroup,
    verify_semigroup_properties,
    verify_sigma_is_abelianization,
)

__version__ = "0.1.0"
