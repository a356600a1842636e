"""Annihilators, s-unital ideals and the property checkers."""

from .ideals import (LEFT, RIGHT, TWO_SIDED, IdealHandle, all_two_sided_ideals,
                     ideal_generated, is_centrally_s_unital, is_ideal, is_left_s_unital,
                     is_right_s_unital, left_annihilator, principal_ideal, principal_ideals,
                     right_annihilator_in_module, ring_left_annihilator, ring_right_annihilator)
from .module_props import MODULE_PROPERTIES, check_module_property, module_context
from .replay import ReplayError, replay, replays
from .ring_props import RING_PROPERTIES, check_ring_property
from .verdict import Verdict

__all__ = [
    "LEFT", "RIGHT", "TWO_SIDED", "IdealHandle", "all_two_sided_ideals", "ideal_generated",
    "is_centrally_s_unital", "is_ideal", "is_left_s_unital", "is_right_s_unital",
    "left_annihilator", "principal_ideal", "principal_ideals", "right_annihilator_in_module",
    "ring_left_annihilator", "ring_right_annihilator", "MODULE_PROPERTIES",
    "check_module_property", "module_context", "ReplayError", "replay", "replays",
    "RING_PROPERTIES", "check_ring_property", "Verdict",
]
