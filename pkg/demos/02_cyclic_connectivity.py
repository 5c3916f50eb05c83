"""
Cyclic vertex connectivity on small supergraphs
===============================================
"""

# %%
from ordsup import (
    brute_force_ckappa,
    cyclic_vertex_connectivity,
    make_dicyclic,
    make_dihedral,
    order_quotient_graph,
    order_supergraph,
    quotient_cyclic_vertex_connectivity,
)
from ordsup.parsing import parse_group_spec

# %%
# D10: the identity alone splits the rotations from the reflections.
D10 = make_dihedral(5)
S = order_supergraph(D10)
res = cyclic_vertex_connectivity(S)
print(res.value, res.certificate.to_json(S))

# %%
# The exhaustive oracle agrees on Q12.
S = order_supergraph(make_dicyclic(3))
print(cyclic_vertex_connectivity(S).value, brute_force_ckappa(S).value)

# %%
# D12 has no cyclic cutset at all.
print(cyclic_vertex_connectivity(order_supergraph(make_dihedral(6))).value)

# %%
# Larger groups only need their order profile. S10 has 3628800 elements.
profile = parse_group_spec("sym:10").profile()
Q = order_quotient_graph(profile)
q = quotient_cyclic_vertex_connectivity(Q)
print(Q.node_count, "orders; ckappa =", q.value, "cutting orders", q.certificate.cutset)
