"""
Order supergraphs from element orders
=====================================

Build a few groups, look at their element orders, and compare the graph
on the elements with the small weighted graph on the distinct orders.
"""

# %%
import numpy as np

from ordsup import element_orders, make_cyclic, make_dihedral, order_quotient_graph, order_supergraph
from ordsup.supergraph import class_signature, divisibility_matrix, expand

# %%
# Z12 has one element of each order d dividing 12, times phi(d).
Z12 = make_cyclic(12)
print(element_orders(Z12).counts)

# %%
# The adjacency matrix is a divisibility test on the order vector.
orders = np.array(Z12.orders())
M = divisibility_matrix(orders)
print(M.sum() // 2, "edges")

# %%
# The quotient keeps one node per order, weighted by how many elements have it.
Q = order_quotient_graph(Z12)
print(list(zip(Q.orders, Q.weights)))
print(Q.edges())

# %%
# Blowing the quotient back up gives the same graph up to relabelling.
D = make_dihedral(6)
S = order_supergraph(D)
E, vertex_orders = expand(order_quotient_graph(D))
print(class_signature(S, D.orders()) == class_signature(E, vertex_orders))
