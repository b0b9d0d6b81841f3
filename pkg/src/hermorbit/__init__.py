"""
hermorbit: complex parallel submanifolds of CP^N and their normal holonomy.

Modules
-------
rootsys   Cartan data, positive roots, Weyl dimensions, weight supports.
catalog   Irreducible Hermitian symmetric spaces of compact type.
embed     Canonical embeddings and their codimensions.
classify  Normal holonomy by dimension and isotropy matching.
orbit     Numerical matrix models of the classical parallel orbits.
verify    Verification suites.
cli       Command-line front end.
"""

from .catalog import HSS, Bounds, ProductDescriptor, canonical, enumerate_spaces, isotropy, parse_space
from .classify import normal_holonomy, slice_isotropy
from .embed import check_inequalities, codim, embedding_dim, first_codim
from .rootsys import DynkinType, build_root_system, weyl_dim

__version__ = "0.1.0"

__all__ = [
    "HSS",
    "Bounds",
    "ProductDescriptor",
    "DynkinType",
    "build_root_system",
    "canonical",
    "check_inequalities",
    "codim",
    "embedding_dim",
    "enumerate_spaces",
    "first_codim",
    "isotropy",
    "normal_holonomy",
    "parse_space",
    "slice_isotropy",
    "weyl_dim",
]
