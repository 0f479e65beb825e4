"""Geometric nerves of finite strict 2-categories.

Executable constructions on finite inputs: validation of strict 2-categories,
normal lax 2-functors and lax transformations; the geometric nerve and its
inverse on simplicial maps; translation between lax transformations and
combinatorial homotopies; and brute-force non-abelian 2-cohomology of
groupoids with the bijection onto homotopy classes checked by enumeration.
"""

from .cat import Category, is_groupoid, poset_category, terminal_category, validate_category
from .cohom import (
    AutStructure,
    FiniteGroup,
    GroupFamily,
    RepresentationReport,
    automorphism_structure,
    automorphism_two_groupoid,
    cyclic_group,
    dedecker_cocycle,
    group_as_groupoid,
    group_isomorphisms,
    h2,
    make_group,
    representation_check,
    symmetric_group,
    trivial_group,
    validate_group,
)
from .errors import FormatError, SearchLimitExceeded, ValidationError, Violation
from .laxfun import (
    LaxFunctor,
    LaxTransformation,
    compose_lax_functors,
    enumerate_lax_functors,
    enumerate_lax_transformations,
    identity_lax_functor,
    identity_lax_transformation,
    pi0_lax,
    transformation_exists,
    validate_lax_functor,
    validate_lax_transformation,
)
from .nerve import (
    GeometricNerve,
    Simplex2,
    Simplex3,
    geometric_nerve,
    nerve_of_lax_functor,
    nerve_of_transformation,
    nerve_of_two_category,
    reconstruct_lax_functor,
    tetrahedron_commutes,
    transformation_from_homotopy,
)
from .partition import ClassPartition, partition_from_edges
from .simpl import (
    Homotopy,
    SimplicialMap,
    TruncSSet,
    classic_nerve,
    compose_maps,
    constant_homotopy,
    enumerate_homotopies,
    enumerate_simplicial_maps,
    homotopy_classes,
    homotopy_exists,
    identity_map,
    validate_homotopy,
    validate_simplicial_map,
    validate_trunc_sset,
)
from .twocat import TwoCat, delta_two_category, from_category, is_two_groupoid, validate_two_category

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
