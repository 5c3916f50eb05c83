"""Order supergraphs of finite groups and their cyclic vertex connectivity."""

__version__ = "0.1.0"

from .groups import (
    Group,
    GroupTooLargeError,
    OrderProfile,
    SylowFacts,
    alternating_profile,
    conjugacy_class_size,
    element_orders,
    euler_phi,
    group_from_permutation_generators,
    is_eppo,
    is_epo,
    is_nilpotent,
    make_alternating,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_direct_product,
    make_symmetric,
    order_class,
    sylow_facts,
    symmetric_profile,
)
from .graphs import (
    EnumerationLimitError,
    SimpleGraph,
    component_contains_cycle,
    components,
    enumerate_induced_cycles,
    min_vertex_cut,
)
from .supergraph import (
    QuotientOrderGraph,
    blown_up_component_has_cycle,
    expand,
    order_quotient_graph,
    order_supergraph,
)
from .connectivity import (
    INFINITE,
    CkappaResult,
    CutsetCertificate,
    brute_force_ckappa,
    cyclic_vertex_connectivity,
    find_cyclic_cutset,
    is_cyclically_separable,
    quotient_cyclic_vertex_connectivity,
    quotient_is_cyclically_separable,
    verify_certificate,
)
from .parsing import GroupSpec, SpecParseError, parse_group_spec
