"""Exact-arithmetic spectra, radicals and decompositions of finite groups and rings."""

from .classification import (
    CorpusEntry,
    MarinClass,
    corpus,
    marin_class,
    prime_power_orders,
)
from .decomposition import (
    DecompositionCertificate,
    brute_force_decompositions,
    decompose,
    oracle_factor_types_match,
)
from .errors import (
    ClassifierInconsistency,
    InputParseError,
    InvalidActionOrder,
    InvalidPermutation,
    InvalidRing,
    NoIdentityAtZero,
    NoInverse,
    NonAssociative,
    NotLatinSquare,
    NotNormal,
    OrderCapExceeded,
    RadicalNotTrivial,
    ReconstructionFailed,
    SpecdecError,
)
from .ggroups import (
    GGroup,
    ZeroDivisorWitness,
    adjoint_orbit_subgroup,
    find_zero_divisor_pair,
    g_stable_subgroups,
    is_domain,
    is_locally_g_indecomposable,
)
from .groups import (
    FiniteGroup,
    GroupHomomorphism,
    Subgroup,
    alternating,
    are_isomorphic,
    cyclic,
    dihedral,
    direct_product,
    from_cayley_table,
    from_permutation_generators,
    generalized_quaternion,
    metacyclic,
    symmetric,
    trivial_group,
)
from .io import build_named
from .rings import (
    FiniteRing,
    TwoSidedIdeal,
    is_p_prime,
    p_prime_ideals,
    principal_two_sided_ideal,
    two_sided_ideals,
    verify_ring_topology,
    z_pprime_window_check,
)
from .snf import (
    FgAbelianType,
    SmithDecomposition,
    SPEC_ALL,
    is_prime_subgroup_fg_abelian,
    quotient_invariants,
    smith_normal_form,
    spec_of_integers,
)
from .spectra import (
    AxiomReport,
    ClosedSet,
    Notion,
    Spectrum,
    domain_local_equivalence,
    is_irreducible,
    is_prime,
    is_prime_elementwise,
    is_radical_ideal,
    radical,
    radical_of,
    spectrum,
    v_set,
    verify_axioms,
)

__version__ = "0.1.0"
