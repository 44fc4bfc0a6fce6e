"""Explicit polytopes and structural tests: pyramids, witnesses, emptiness, spanning."""

from __future__ import annotations

from .ehrhart import count_lattice_points, lattice_points
from .lattice import LatticePolytope, NotFullDimensionalError, lattice_index


def _unit(d: int, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(d))


def standard_simplex(d: int) -> LatticePolytope:
    if d < 1:
        raise ValueError("dimension must be positive")
    return LatticePolytope(d, ((0,) * d,) + tuple(_unit(d, i) for i in range(d)))


def lattice_pyramid(poly: LatticePolytope) -> LatticePolytope:
    """``conv(P x {0}, e_{d+1})``."""
    d = poly.ambient_dim
    return LatticePolytope(d + 1, tuple(v + (0,) for v in poly.vertices) + ((0,) * d + (1,),))


def iterated_pyramid(poly: LatticePolytope, k: int) -> LatticePolytope:
    for _ in range(k):
        poly = lattice_pyramid(poly)
    return poly


# Witnesses for the three volume-5 delta-polynomials no simplex attains.
_EXAMPLES = {
    1: [(0, 0), (1, 0), (0, 1), (2, 3)],
    2: [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 3)],
    3: [(0,) * 5] + [_unit(5, i) for i in range(5)] + [(-1, 1, 1, 1, 2)],
}


def paper_example(k: int) -> LatticePolytope:
    """Witness polytope ``P_k``: delta 1+3t+t^2 (k=1), 1+t+3t^2 (k=2), 1+t+t^2+2t^3 (k=3)."""
    if k not in _EXAMPLES:
        raise ValueError(f"no example {k}; expected 1, 2 or 3")
    return LatticePolytope.from_points(_EXAMPLES[k])


def is_empty_simplex(poly: LatticePolytope) -> bool:
    """A simplex whose only lattice points are its vertices; False for non-simplices."""
    if not poly.is_full_dimensional:
        raise NotFullDimensionalError("not full-dimensional")
    d = poly.ambient_dim
    return poly.is_simplex and count_lattice_points(poly, 1) == d + 1


def polytope_index(poly: LatticePolytope) -> int:
    return lattice_index(lattice_points(poly, 1))


def is_spanning(poly: LatticePolytope) -> bool:
    return polytope_index(poly) == 1
