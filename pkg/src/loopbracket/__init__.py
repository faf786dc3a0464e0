"""
Goldman and Andersen-Mattes-Reshetikhin brackets of loops on surfaces with
free fundamental group, and the minimal intersection and self-intersection
numbers they compute.
"""

from .freegroup import (
    TRIVIAL_CLASS,
    CyclicWord,
    FreeClass,
    Word,
    brute_force_simconj,
    centralizer_generator,
    conjugate,
    cyclic_reduce,
    find_conjugator,
    free_class,
    invert,
    power,
    primitive_root,
    reduce,
    simultaneous_conjugacy,
)
from .surface import PANTS, TORUS1, RibbonRose, enumerate_rank2_roses, parse_surface, standard_rose
from .linking import Crossing, Pass, Ray, compare_rays, crossings_between, ray_angle, self_crossing_count
from .bracket import (
    BracketResult,
    ChordTerm,
    amr_bracket,
    canonicalize_term,
    goldman_bracket,
    min_intersection,
    reduce_terms,
    self_intersection,
    smooth,
    theorem2_selfint,
)
from .torus import TorusClass, torus_min_intersection

__version__ = "0.1.0"
