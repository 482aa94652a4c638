from grassmann.exceptions import GrassmannError
from grassmann.exact import bracket, chi, gaussian_binomial, is_prime_power
from grassmann.params import (ClassicalParams, IntersectionArray, PTable,
                              Spectrum, array_from_classical,
                              classical_spectrum, clique_ext_grid_spectrum,
                              grassmann_array, grassmann_classical, p_table)
from grassmann.gf import make_field, rank, rref
from grassmann.graphs import (Graph, clique_extension, distance_table,
                              empirical_intersection_array, grassmann_graph,
                              grid_graph, read_graph, shrikhande_graph,
                              verify_spectrum_exact, write_graph)
from grassmann.qpoly import (congruence_obstruction, forced_local_spectrum,
                             lemma_ddd, local_eigenvalue_window,
                             terwilliger_poly, trace_difference_argument,
                             triple_122_from_111, triple_spear)
from grassmann.recognize import (check_ncc_hypotheses, detect_lines,
                                 recognize_clique_ext_grid, solve_delta_system)
