"""Generalized Wallach spaces: brute-force invariants, closed-form tables and the surface Omega."""
from .catalog import (
    TABLE1,
    TABLE2,
    ClosedForm,
    KillingTableEntry,
    SymTriple,
    WallachRecord,
    a_from_gamma,
    closed_form,
    enumerate_catalog,
    filter_table2,
    gamma_from_dynkin,
)
from .decomp import GradedDecomposition, simultaneous_eigenspaces, validate_grading
from .errors import (
    ContractError,
    DegeneracyError,
    DomainError,
    InputError,
    InternalError,
    SizeLimitError,
    WallachError,
)
from .invariants import compute_A, compute_a_triple, triple_sum, verify_identities
from .liealg import LieAlg, build_classical, build_sum
from .omega import (
    APoint,
    Component,
    ComponentLabel,
    classify,
    eval_Q,
    grad_Q,
    singular_curve_point,
    singular_profile,
    surface_slice,
)
from .spaces import make_flag_family, make_ledger_obata, make_so_u, make_su_u, make_symmetric_product

__version__ = "0.1.0"
