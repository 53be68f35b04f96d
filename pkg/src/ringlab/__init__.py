"""Exact computations in finite commutative rings.

Rings are explicit operation tables, ideals are bitmask subsets, and every
verdict (prime, primary, n-absorbing, n-OA, factorability) is decided by
exhaustive search with replayable witnesses and certificates.
"""

from .errors import (
    BudgetExceededError,
    ConstructionError,
    LatticeGuardError,
    RingLabError,
    RingMismatchError,
    SizeGuardError,
    SpecError,
)
from .core import (
    DEFAULT_GUARDS,
    GuardConfig,
    ModuleTable,
    RingTable,
    build_algebra,
    build_product,
    build_quotient,
    build_trivial_extension,
    build_zmod,
    direct_sum_module,
    idempotents,
    is_local,
    jacobson,
    local_decomposition,
    module_from_ring,
    nilradical,
    primitive_idempotents,
    quotient_module,
    units,
)
from .ideals import (
    IdealSet,
    all_ideals,
    generate_ideal,
    homogeneous_view,
    ideal_colon,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_divided,
    is_idempotent,
    is_maximal,
    is_multiplication_ideal,
    is_primary,
    is_prime,
    is_simple_ideal,
    min_primes,
    proper_ideals,
    radical,
    unit_ideal,
    zero_ideal,
)
from .classify import (
    ClassReport,
    classify_ideal,
    is_n_absorbing,
    is_n_oa,
    is_n_oa_fast,
    is_product_of_fields,
    is_von_neumann_regular,
    list_n_oa_ideals,
)
from .factorize import (
    Certificate,
    ClosureIndex,
    find_factorization,
    is_general_zpi,
    is_n_oaf,
    multiplicative_closure,
    oaf_dim,
)

__version__ = "0.1.0"
