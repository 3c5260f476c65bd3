from .constants import *
from .exceptions import DomainError, DimensionMismatchError, ContractViolationError, SingularSumError
from .utils import phase_fix, principal_arg, match_labels, spectrum_deviation
from .linalg import Dim, SymIndex, LatticeScales, State, Op, Basis, EigenSystem, omega_pow, inner, eig_normal, op_exp
from .fourier import dft_matrix, dft_forward, dft_inverse, geometric_sum, finite_geometric_sum, omega_sum,\
    omega_sum_cases, k_weighted_sum, brute_geometric_sum, brute_omega_sum, brute_k_weighted_sum, SumQuery,\
    SUM_VARIANTS, r_grid, verify_sums, max_sum_residual
from .operators import CanonicalSet, build_canonical_set, build_position, build_momentum, build_T, build_B,\
    build_position_basis, build_momentum_basis, position_momentum_overlap, check_exponential_forms, commutator,\
    commutator_matrix_elements, gaussian_probe, commutator_expectation, probe_deviation, decrease_violation, dft_consistency,\
    check_canonical_set, CANONICAL_THRESHOLDS
from .mub import UnbiasednessReport, PhaseIdentityReport, build_TB, eta_basis_position, eta_basis_momentum,\
    eta_phase_ratios, unbiasedness, triple_unbiasedness, valid_b, gauss_identity_check, build_S, weyl_swap_check,\
    xp_difference_unbiasedness, eta_eigensolver_crosscheck, s_reconstruction_deviation
from .dynamics import EvolutionConfig, free_hamiltonian, propagator, evolve_momentum, position_kernel,\
    evolve_position, evolve, revival_period, time_series, revival_deviation
from .pauli import PauliData, Reconstruction, state_from_params, distributions, forward_data, compatible,\
    reconstruct, partner_params, is_pauli_partner, compatibility_grid
from .serialization import complex_to_pairs, pairs_to_complex, state_to_json, state_from_json, load_state, op_to_json, op_from_json, dump_hdf5, load_hdf5
from ._version import __version__
