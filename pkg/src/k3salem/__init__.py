"""Exact lattice computations producing Salem-type automorphisms of
supersingular K3 surfaces in odd characteristic.

The package is pure Python over arbitrary-precision integers and
rationals: lattices and their enumeration problems, reflection into the
nef chamber, double-plane involutions from square-2 polarizations, and
exact certification that a characteristic polynomial is a degree-22
Salem polynomial.
"""

from .exactalg import IntMatrix, IntPolynomial, char_poly, determinant, \
    lll_reduce, solve_exact
from .lattice import Lattice, inner, is_isometry, in_positive_cone, norm, \
    reflect
from .enumeration import (InfiniteSetError, LinearConstraint,
                          brute_force_oracle, enumerate_constrained, set_F,
                          set_R, set_S)
from .chamber import (AmpleList, chamber_contains, is_ample_list, lex_sign,
                      positive_roots_at, send_to_chamber)
from .rs_lattices import (BasisTag, RSParams, build_lambda, find_q_gamma,
                          gram_E8, gram_H, random_square2,
                          random_square2_general, standard_ample_list)
from .involution import (ADEComponent, InvolutionRecord, classify_component,
                         exceptional_classes, involution_matrix,
                         is_polarization_deg2, singularity_string,
                         smooth_branch_matrix, tau_action)
from .salem import (SalemCertificate, SalemRejection, cyclotomic_free,
                    cyclotomic_polynomial, degree_pattern_sieve, is_reciprocal,
                    leading_root, salem_check, sturm_count, trace_polynomial)
from .pipeline import (SearchConfig, SearchResult, ExhaustionReport,
                       entropy_sweep, generate_involution_pool,
                       search_irreducible_salem, sigma10_construct,
                       verify_paper_example)

__version__ = "0.1.0"
