"""Mori chambers and Bridgeland walls for Hilbert schemes of points in the
projective plane, computed in exact rational arithmetic."""

from .bridgeland import ChernCharacter, StabilityPoint, potential_wall, wall_center_for_ideal
from .cones import base_locus_at, chamber_table, effective_cone, mori_wall_rays, nef_cone, phi_contains
from .correspondence import check_bijection, mori_to_x, x_to_mori
from .errors import HilbWallsError
from .gaeta import gaeta_resolution, generic_destabilizer_candidates
from .picard import B, H, DivisorClass, intersect
from .walls import collapsing_wall, higher_rank_search, rank_one_walls, wall_list

__version__ = "0.1.0"

__all__ = [
    "B",
    "H",
    "ChernCharacter",
    "DivisorClass",
    "HilbWallsError",
    "StabilityPoint",
    "base_locus_at",
    "chamber_table",
    "check_bijection",
    "collapsing_wall",
    "effective_cone",
    "gaeta_resolution",
    "generic_destabilizer_candidates",
    "higher_rank_search",
    "intersect",
    "mori_to_x",
    "mori_wall_rays",
    "nef_cone",
    "phi_contains",
    "potential_wall",
    "rank_one_walls",
    "wall_center_for_ideal",
    "wall_list",
    "x_to_mori",
]
