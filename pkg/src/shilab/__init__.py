"""Dominant Shi regions, root ideals and their minimal elements in affine Weyl groups.

All arithmetic is exact: roots are integer vectors in the simple-root basis and
ambient coordinates are :class:`fractions.Fraction`.
"""
from .affine_weyl import (
    AffineElement,
    AffineRoot,
    NotAnInversionSet,
    element_from_inversions,
    from_word,
    identity,
    simple_reflections,
)
from .ideals import (
    Antichain,
    NotAnAntichain,
    NotAnIdeal,
    RootIdeal,
    catalan_product,
    cellini_papi_count,
    enumerate_antichains,
    enumerate_ideals,
    l_set,
    minimal_elements,
    mu_formula,
    powers,
    up_closure,
)
from .root_system import CartanType, Root, RootSystem, RootSystemError, build
from .shi import (
    DominantRegion,
    SignType,
    is_low,
    minimal_element_of_ideal,
    region_from_antichain,
    region_from_ideal,
    sign_type_of_ideal,
    zeta,
)

__version__ = "0.1.0"
