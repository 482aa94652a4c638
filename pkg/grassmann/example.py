import logging

logging.basicConfig(level=logging.INFO)

from grassmann.graphs import (empirical_intersection_array, grassmann_graph,
                              local_graph, verify_spectrum_exact, write_graph)
from grassmann.params import classical_spectrum, grassmann_classical
from grassmann.qpoly import forced_local_spectrum, local_eigenvalue_window
from grassmann.recognize import check_ncc_hypotheses, recognize_clique_ext_grid

cp = grassmann_classical(6, 3, 2)
print(cp, local_eigenvalue_window(cp))

g = grassmann_graph(6, 3, 2)
print(empirical_intersection_array(g))
print(verify_spectrum_exact(g, classical_spectrum(6, 3, 2)))

delta = local_graph(g, 0)
print(verify_spectrum_exact(delta, forced_local_spectrum(cp)))
print(recognize_clique_ext_grid(delta, 2, 7, spectral=True).to_text())

print(check_ncc_hypotheses(g, mu_sample=500, coclique_sample=20000))

write_graph(delta, 'local_j2_6_3.txt')
