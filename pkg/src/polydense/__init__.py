"""Probabilistic geometry of random ±1-polytopes.

Edge oracles backed by exact rational feasibility, long-edge and edge
probability estimators, chamber counts of central hyperplane arrangements,
and seeded threshold experiments around the square-root-of-2 density
transition.
"""

from .arrangements import (BRUTE_FORCE, SIGN_SEARCH, ChamberCount, VectorConfig,
                           build_config_plus, chamber_count,
                           chamber_count_bruteforce, harding_bound,
                           moivre_laplace_ratio, normal_cdf, partial_binomial_sum,
                           phi_project)
from .cube import (CubeVertex, SubcubeFace, VertexSet, antipode,
                   cut_polytope_vertices, enumerate_face, from_01, full_cube,
                   hamming_distance, sample_pair, sample_vertex_bits,
                   sample_vertex_set, subcube_face)
from .errors import (BudgetExceeded, DegenerateInput, DimensionMismatch,
                     PolydenseError)
from .estimators import (DensitySweepRow, MonotonicityReport, PiDecomposition,
                         TauSweepRow, TauTable, alpha_exact, alpha_mc,
                         alpha_via_chambers, alpha_via_chambers_exact,
                         build_tau_table, decompose_pi, density_threshold_sweep,
                         monotonicity_check, pi_exact, pi_from_pk, pi_k_exact,
                         pi_k_mc, pi_k_semianalytic, pi_mc, tau_cell, tau_exact,
                         tau_from_alpha, tau_mc, tau_threshold_sweep,
                         tau_upper_bound, xi_exact)
from .exactlp import (FEASIBLE, INFEASIBLE, FeasibilityResult,
                      check_convex_combination, check_strict_witness,
                      origin_in_conv, segment_hull_intersect, strict_separation)
from .graph import (DensityReport, edge_kernel, graph_density_exact,
                    graph_density_sampled, is_edge, long_edge_survives)
from .mc import Estimate, bernoulli_estimate, exact_estimate, wilson_interval
from .rng import stream

__version__ = "0.1.0"
