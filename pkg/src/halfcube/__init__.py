"""Exact combinatorics, chain complexes and integer homology of the half cube."""

from .core import CliqueSet, Mask, Vertex, clique_K, clique_L, hamming_distance
from .complexes import BoundaryMatrix, CellComplex, build_complex, euler_characteristic
from .faces import FaceDescriptor, FaceLattice, build_face_lattice
from .homology import HomologyProfile, betti_numbers, homology_of, smith_normal_form
from .morse import MorseMatching, build_matching, check_acyclic, unpaired_census
from .symmetry import SignedPermutation, homology_action, orbits
from .triangle import TriangleTable, predicted_betti, triangle_recurrence

__version__ = "0.1.0"

__all__ = [
    "BoundaryMatrix",
    "CellComplex",
    "CliqueSet",
    "FaceDescriptor",
    "FaceLattice",
    "HomologyProfile",
    "Mask",
    "MorseMatching",
    "SignedPermutation",
    "TriangleTable",
    "Vertex",
    "betti_numbers",
    "build_complex",
    "build_face_lattice",
    "build_matching",
    "check_acyclic",
    "clique_K",
    "clique_L",
    "euler_characteristic",
    "hamming_distance",
    "homology_action",
    "homology_of",
    "orbits",
    "predicted_betti",
    "smith_normal_form",
    "triangle_recurrence",
    "unpaired_census",
    "__version__",
]
