from siltinglib.oracle.enumeration import (
    CapTooLarge,
    EnumerationCaps,
    brute_bricks,
    dimension_vectors,
    enumerate_reps_upto_iso,
    module_pool,
    orbit_representatives,
)
from siltinglib.oracle.homotopy import homotopy_hom_dim
from siltinglib.oracle.torsion import enumerate_torsion_classes_repfinite, inclusion_lattice, torsion_closure

__all__ = [
    "CapTooLarge",
    "EnumerationCaps",
    "brute_bricks",
    "dimension_vectors",
    "enumerate_reps_upto_iso",
    "enumerate_torsion_classes_repfinite",
    "homotopy_hom_dim",
    "inclusion_lattice",
    "module_pool",
    "orbit_representatives",
    "torsion_closure",
]
