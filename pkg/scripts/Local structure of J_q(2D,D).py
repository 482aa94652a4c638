
# coding: utf-8

# # Local structure of $J_q(2D,D)$
# 
# * Classical parameters and the intersection array
#   * Two independent formulas for the array
#   * The spectrum and its moments
# * Building the graph over $GF(q)$
# * The local graph
#   * Its forced spectrum
#   * Lines and the neighbourhood quotient
# * Triple intersection numbers
# * A cospectral impostor: the Shrikhande graph

# ## Classical parameters
# 
# A distance-regular graph with classical parameters $(D, b, \alpha, \beta)$ has
# 
# $$ c_i = [i]\,(1 + \alpha [i-1]), \qquad b_i = ([D] - [i])(\beta - \alpha [i]) $$
# 
# where $[j] = 1 + b + \dots + b^{j-1}$. The Grassmann graph $J_q(n,D)$ has $(D, q, q, [n-D+1]-1)$.

# In[1]:


import warnings

warnings.filterwarnings('ignore')

import pandas as pd

from grassmann.params import (array_from_classical, classical_spectrum,
                              grassmann_array, grassmann_classical, p_table)

cp = grassmann_classical(6, 3, 2)
ia = array_from_classical(cp)
print(cp, ia, ia.v)
assert ia == grassmann_array(6, 3, 2)


# In[2]:


sp = classical_spectrum(6, 3, 2)
sp.as_frame()


# In[3]:


p_table(ia).as_frame(1)


# The table of $p^h_{ij}$ grows quickly with the diameter but every entry stays an integer.

# In[4]:


pd.DataFrame([(D, str(grassmann_array(2 * D, D, 2)), grassmann_array(2 * D, D, 2).v)
              for D in range(2, 10)], columns=['D', 'array', 'vertices'])


# ## Building the graph
# 
# Vertices are the $D$-subspaces of $GF(q)^n$, each stored as its reduced row-echelon basis; two are adjacent when they meet in dimension $D-1$.

# In[5]:


from grassmann.graphs import (empirical_intersection_array, grassmann_graph,
                              local_graph, verify_spectrum_exact)

g = grassmann_graph(6, 3, 2)
print(g, empirical_intersection_array(g))
verify_spectrum_exact(g, sp)


# In[6]:


print(g.labels[0], g.labels[1], g.labels[0].meet_dim(g.labels[1]))


# ## The local graph
# 
# Every local graph $\Delta(x)$ must be cospectral with the $q$-clique extension of the $[D] \times [D]$ grid. The trace argument behind it leaves no room for any other eigenvalue.

# In[7]:


from grassmann.qpoly import (forced_local_spectrum, local_eigenvalue_window,
                             terwilliger_poly, trace_difference_argument)

bound = local_eigenvalue_window(cp)
print(bound)
print(terwilliger_poly(cp, 2).roots)
print(trace_difference_argument(cp).combined_eta_term)
forced_local_spectrum(cp).as_frame()


# In[8]:


delta = local_graph(g, 0)
verify_spectrum_exact(delta, forced_local_spectrum(cp))


# Lines are the large maximal cliques. Quotienting by closed neighbourhoods gives back the grid.

# In[9]:


from grassmann.recognize import recognize_clique_ext_grid

report = recognize_clique_ext_grid(delta, 2, 7, spectral=True, congruence=True)
print(report.to_text())


# ## Triple intersection numbers
# 
# For $y, z \in \Gamma(x)$ the count $[D-1, D, D]$ is determined by $[1,1,1]$, and in $J_q(2D,D)$ the values of $[1,1,1]$ are congruent modulo $[D-1]$.

# In[10]:


from grassmann.graphs import triple_counts
from grassmann.qpoly import Relation, lemma_ddd

dt = g.distances
rows = []
for z in g.neighbors(0)[1:20]:
    y = g.neighbors(0)[0]
    counts = triple_counts(g, dt, 0, y, int(z))
    relation = Relation(int(dt.dist[y, z]))
    rows.append((relation.name, counts[1, 1, 1], counts[2, 3, 3],
                 lemma_ddd(cp, relation, counts[1, 1, 1])))
pd.DataFrame(rows, columns=['relation', '[1,1,1]', '[2,3,3]', 'predicted'])


# ## A cospectral impostor
# 
# The Shrikhande graph has the spectrum of the $4 \times 4$ grid, but no line of four vertices.

# In[11]:


from grassmann.graphs import grid_graph, shrikhande_graph
from grassmann.params import grid_spectrum

for graph in (grid_graph(4), shrikhande_graph()):
    result = recognize_clique_ext_grid(graph, 1, 4)
    print(graph, verify_spectrum_exact(graph, grid_spectrum(4)), result.verdict,
          result.stage)

