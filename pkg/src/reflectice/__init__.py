"""Exact-arithmetic toolkit for reflecting-boundary free-fermionic
six-vertex models: local operators, lattice partition functions, deformed
symplectic Schur / Whittaker functions, and a seeded verification suite.
"""

from .scalar import (Scalar, ParamPoint, SamplingError, DegenerateSpectral,
                     format_scalar, parse_scalar, sample_param_point,
                     interpolate_univariate)
from .vertex import (r_general, r_t, l_gamma, l_delta, k_type1, k_type2,
                     check_yang_baxter_general, check_rll, check_reflection)
from .lattice import (apply_monodromy_element, apply_double_row_B,
                      wavefunction, dual_wavefunction, dwbp,
                      brute_force_wavefunction)
from .symfunc import (SymParams, positions_to_partition,
                      partition_to_positions, complement_positions,
                      hat_partition, g_mu, h_pm_mu, weyl_denominator,
                      sp_lambda, o_lambda, sp_expanded_sum, o_expanded_sum,
                      prefactor)
from .identities import (VerificationReport, verify_all,
                         verify_telescoping_lemma, verify_one_particle,
                         verify_ik_properties, verify_main_correspondence,
                         verify_dwbp_factorization, verify_dual_cauchy,
                         verify_b_commutation, verify_local_relations)

__version__ = "0.1.0"
