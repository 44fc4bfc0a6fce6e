"""Exact Ehrhart polynomials and delta-vectors of lattice polytopes."""

from .classification import (
    AdmissibleSet,
    admissible_vol3,
    admissible_vol4,
    enumerate_admissible,
    polytope_vol5,
    simplex_vol5,
)
from .constructions import (
    is_empty_simplex,
    is_spanning,
    lattice_pyramid,
    paper_example,
    standard_simplex,
)
from .delta import (
    ExponentTuple,
    basic_property_report,
    exponent_tuple,
    hibi_check,
    spanning_positivity_check,
    stanley_check,
)
from .ehrhart import (
    INCLUSIVE,
    INTERIOR,
    DeltaVector,
    EhrhartPolynomial,
    contains,
    count_lattice_points,
    delta_vector,
    ehrhart_polynomial,
    normalized_volume,
    simplex_delta_parallelepiped,
)
from .lattice import (
    LatticePolytope,
    hermite_normal_form,
    lattice_index,
    smith_normal_form,
)

__all__ = [name for name in dir() if not name.startswith("_")]
