"""Exact Renyi-Parry densities for beta-transformations and their coincidences."""

from .coincidence import (
    CoincidenceReport,
    classify_family,
    coincide,
    is_pisot_quadratic,
    make_pair,
    multiplicative_dependence,
    theorem_verdict,
)
from .density import StepFunction, build_density, equal, evaluate, integral, normalize, series_K
from .dynamics import Classification, OrbitDescriptor, orbit_of_one, orbit_set, step
from .exactnum import (
    FieldElement,
    NumberField,
    char_poly,
    equal_cross_field,
    floor,
    invert,
    isolate_roots_above_one,
    quadratic_family_field,
    rational_field,
    sign,
    to_interval,
)
from .transfer import check_invariance, transfer_operator

__version__ = "0.1.0"
