"""Maps on orientable surfaces, lsp-operations and their symmetry.

The main entry points are re-exported here; see the submodules for the rest.
"""
from .analysis import are_isomorphic, automorphisms, chamber_orbits, group_order, increases_symmetry, is_self_dual
from .flags import FlagSystem, MapError, RotationSystem, dual, from_rotation_system, summary, to_rotation_system
from .goldberg import GCParams, gc_patch
from .operations import DUAL, IDENTITY, OperationPatch, apply, compose, post_dual, pre_dual
from .polyhedral import is_polyhedral

__version__ = "0.1.0"

__all__ = [
    "FlagSystem",
    "MapError",
    "RotationSystem",
    "from_rotation_system",
    "to_rotation_system",
    "summary",
    "dual",
    "is_polyhedral",
    "OperationPatch",
    "IDENTITY",
    "DUAL",
    "apply",
    "compose",
    "post_dual",
    "pre_dual",
    "GCParams",
    "gc_patch",
    "automorphisms",
    "group_order",
    "chamber_orbits",
    "are_isomorphic",
    "is_self_dual",
    "increases_symmetry",
]
