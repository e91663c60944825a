"""Exact simulation of projective-measurement wiring for spin-1/2 coupled eigenstates."""
from .coupling import CgcBranch, apply_S2, apply_Sz, build_coupled_state, cgc
from .projection import apply_projection_sequence, permutation_sum_oracle
from .radical import Radical
from .spins import CouplingPath, HalfInt, enumerate_paths, magnetization, validate_path
from .state import SparseState, inner_product
from .verify import (
    EquivalenceReport,
    check_algorithm_recursion,
    check_assignment_invariance,
    check_proportionality,
    check_ratio_constraint,
    check_sum_identities,
    full_sweep,
)
from .wiring import AssignmentPolicy, SetupConfig, column_sums, compile_setup

__version__ = "0.1.0"
