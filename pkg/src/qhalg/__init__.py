"""Quasi-hereditary structures of bound quiver algebras.

Build an algebra from a quiver with relations, then ask which orders of its
simple modules are quasi-hereditary, how they twist into one another, and how
any two are joined by single twists.
"""

from .bqa import (
    Algebra,
    AlgebraError,
    Arrow,
    BoundQuiverAlgebra,
    Quiver,
    Relation,
    build_algebra,
    corner,
    opposite,
    path_algebra,
    quotient_by_ideal,
    quotient_by_vertices,
    vertex_ideal,
)
from .exactla import GF, QQ, InconsistentSystemError, PrimeField, RationalField
from .explorer import (
    ConnectPath,
    TwistGraph,
    connect,
    corollary_decomposition,
    enumerate_qh,
    random_bound_quiver_algebra,
    twist_graph,
    verify_connectedness,
)
from .fileformat import AlgebraFile, AlgebraFileError, load_algebra, parse_algebra, render
from .qh import (
    PermutationError,
    QhReport,
    SigmaOrder,
    costandard_module,
    has_delta_filtration,
    has_nabla_filtration,
    heredity_chain_check,
    is_quasi_hereditary,
    standard_module,
)
from .rep import Representation, ext1_dim, hom_dim, injective, projective, simple
from .twist import Biquiver, NeighborInvariants, biquiver, neighbor_invariants, twistable


def paper_example(field=QQ) -> BoundQuiverAlgebra:
    """The four-vertex example algebra bundled with the package."""
    from .fileformat import paper_example_text

    return parse_algebra(paper_example_text(), source="@paper").build(field)


__version__ = "0.1.0"
