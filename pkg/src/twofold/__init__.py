"""Two-fold isomorphisms of mixed graphs: covers, alternating trails,
reconstruction from neighbourhoods and two-fold orbitals."""

from .covers import adc, cdc, idc, is_strongly_bipartite, quotient_by_involution
from .graph import GraphKind, MixedGraph, classify
from .iso import (
    ENUMERATION_CAP,
    CapExceeded,
    are_isomorphic,
    automorphism_group,
    automorphism_order,
    find_isomorphism,
)
from .recon import count_reconstructions, enumerate_cdc_preimages, symmetrize
from .tf import TFMap, find_tf_isomorphism, is_stable, is_tf_map, tf_automorphism_group

__all__ = [
    "ENUMERATION_CAP",
    "CapExceeded",
    "GraphKind",
    "MixedGraph",
    "TFMap",
    "adc",
    "are_isomorphic",
    "automorphism_group",
    "automorphism_order",
    "cdc",
    "classify",
    "count_reconstructions",
    "enumerate_cdc_preimages",
    "find_isomorphism",
    "find_tf_isomorphism",
    "idc",
    "is_stable",
    "is_strongly_bipartite",
    "is_tf_map",
    "quotient_by_involution",
    "symmetrize",
    "tf_automorphism_group",
]
