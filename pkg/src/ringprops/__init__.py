"""Annihilator-condition properties of finite rings and modules.

Layers, bottom-up: ``finring`` (rings by structure constants), ``finmod``
(modules), ``homcalc`` (Hom groups and End(M)), ``lattice`` (submodule
lattices), ``annprop`` (property checkers with replayable witnesses) and
``harness`` (corpus, theorem suite, separations, CLI).
"""

from .errors import (DEFAULT_SIZE_CAP, InvalidStructure, MalformedDescription, NotAnIdeal,
                     RingMismatch, RingPropsError, SizeCapExceeded)
from .finmod import FiniteModule, direct_sum, free_module, regular_module, z_module, zero_module
from .finring import (FiniteRing, direct_product, make_cyclic_ring, matrix_element, matrix_ring,
                      matrix_unit, quotient_ring, triangular_ring)
from .homcalc import EndoRing, ModuleHom, end_ring, hom_group, hom_group_bruteforce
from .annprop import (MODULE_PROPERTIES, RING_PROPERTIES, Verdict, check_module_property,
                      check_ring_property, replay)
from .io import load_structure, structure_from_description

__version__ = "0.1.0"
