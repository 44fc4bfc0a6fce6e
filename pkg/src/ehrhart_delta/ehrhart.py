"""Lattice-point counting, Ehrhart polynomials and delta-vectors.

Everything is exact.  Membership in ``conv(V)`` is decided by feasibility of
a convex combination: for a simplex the combination is unique and comes
from the barycentric coordinates, otherwise it is a small exact LP.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, comb, factorial, floor, lcm
from typing import Iterator, Sequence

from . import lp
from .lattice import (
    LatticeError,
    LatticePolytope,
    NotFullDimensionalError,
    Point,
    adjugate,
    smith_normal_form,
)

INCLUSIVE = "inclusive"
INTERIOR = "interior"
_MODES = (INCLUSIVE, INTERIOR)


@dataclass(frozen=True)
class DeltaVector:
    """Coefficients ``(delta_0, ..., delta_d)`` of the delta-polynomial."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if not self.entries:
            raise ValueError("empty delta-vector")

    @property
    def dim(self) -> int:
        return len(self.entries) - 1

    @property
    def degree(self) -> int:
        return max((i for i, x in enumerate(self.entries) if x), default=0)

    @property
    def volume(self) -> int:
        return sum(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def nonzero_prefix(self) -> tuple[int, ...]:
        return self.entries[: self.degree + 1]

    def padded(self, dim: int) -> "DeltaVector":
        if dim < self.degree:
            raise ValueError(f"cannot fit degree {self.degree} into dimension {dim}")
        head = self.entries[: dim + 1]
        return DeltaVector(head + (0,) * (dim + 1 - len(head)))

    def __str__(self):
        return " ".join(map(str, self.entries))


@dataclass(frozen=True)
class EhrhartPolynomial:
    """``L_P(n)`` as exact rational coefficients in ascending degree."""

    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1]

    def __call__(self, n) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * n + c
        return acc

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coefficients):
            if c:
                terms.append(str(c) + ("" if k == 0 else "*n" if k == 1 else f"*n^{k}"))
        return " + ".join(terms) or "0"


def _check_mode(mode: str) -> None:
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}")


@lru_cache(maxsize=4096)
def _barycentric_system(poly: LatticePolytope) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Integer rows ``a_i`` and ``D > 0`` with ``lambda_i(x) = a_i . (x, 1) / D``."""
    w = [list(col) for col in zip(*[v + (1,) for v in poly.vertices])]
    adj, det = adjugate(w)
    if det < 0:
        adj, det = [[-x for x in row] for row in adj], -det
    return tuple(map(tuple, adj)), det


def _lp_in_hull(vertices: Sequence[Point], q: Sequence[Fraction], interior: bool) -> bool:
    den = lcm(*(Fraction(x).denominator for x in q))
    qi = [int(Fraction(x) * den) for x in q]
    m = len(vertices)
    rows = [[1] * m] + [[v[j] * den for v in vertices] for j in range(len(q))]
    rhs = [1] + qi
    if not interior:
        return lp.feasible(rows, rhs)
    # lambda = mu + t with mu, t >= 0; maximise t
    rows = [row + [sum(row)] for row in rows]
    best = lp.maximize([0] * m + [1], rows, rhs)
    return best is not None and best > 0


def contains(poly: LatticePolytope, q: Sequence, mode: str = INCLUSIVE) -> bool:
    """Is the rational point ``q`` in ``poly`` (or in its relative interior)?"""
    _check_mode(mode)
    if len(q) != poly.ambient_dim:
        raise LatticeError(f"point has dimension {len(q)}, polytope lives in Z^{poly.ambient_dim}")
    q = [Fraction(x) for x in q]
    if poly.is_simplex:
        rows, det = _barycentric_system(poly)
        x = q + [Fraction(1)]
        lam = [sum(a * xi for a, xi in zip(row, x)) for row in rows]
        if mode == INTERIOR:
            return all(v > 0 for v in lam)
        return all(v >= 0 for v in lam)
    return _lp_in_hull(poly.vertices, q, mode == INTERIOR)


def _bbox(poly: LatticePolytope, n: int) -> list[tuple[int, int]]:
    return [(n * min(c), n * max(c)) for c in zip(*poly.vertices)]


def _simplex_points(poly: LatticePolytope, n: int, strict: bool) -> Iterator[Point]:
    # x in nP  <=>  a_i . (x, n) >= 0 for every barycentric row a_i
    rows, _ = _barycentric_system(poly)
    d = poly.ambient_dim
    box = _bbox(poly, n)
    # solve for the widest coordinate, scan the rest
    last = max(range(d), key=lambda k: box[k][1] - box[k][0])
    others = [k for k in range(d) if k != last]
    lo_box, hi_box = box[last]
    for prefix in itertools.product(*(range(box[k][0], box[k][1] + 1) for k in others)):
        lo, hi = lo_box, hi_box
        for row in rows:
            const = row[d] * n + sum(row[k] * x for k, x in zip(others, prefix))
            a = row[last]
            # const + a*y >= 0  (or > 0)
            if a > 0:
                lo = max(lo, (-const) // a + 1 if strict else -(const // a))
            elif a < 0:
                b = -a
                hi = min(hi, -((-const) // b) - 1 if strict else const // b)
            elif const < 0 or (strict and const == 0):
                lo, hi = 1, 0
                break
            if lo > hi:
                break
        for y in range(lo, hi + 1):
            pt = list(prefix)
            pt.insert(last, y)
            yield tuple(pt)


def _fiber_points(vertices: Sequence[Point], n: int) -> Iterator[Point]:
    """Lattice points of ``n * conv(vertices)``, coordinate by coordinate.

    The fibre of a convex set over a fixed prefix is an interval, whose ends
    come from two exact LPs over the convex-combination weights.
    """
    verts = [tuple(n * x for x in v) for v in vertices]
    d, m = len(verts[0]), len(verts)
    cols = list(zip(*verts))

    def recurse(prefix: list[int]):
        k = len(prefix)
        if k == 0:
            lo, hi = min(cols[0]), max(cols[0])
        else:
            a = [[1] * m] + [list(cols[j]) for j in range(k)]
            rng = lp.value_range(list(cols[k]), a, [1] + prefix)
            if rng is None:
                return
            lo, hi = ceil(rng[0]), floor(rng[1])
        if k == d - 1:
            for y in range(lo, hi + 1):
                yield tuple(prefix) + (y,)
            return
        for y in range(lo, hi + 1):
            prefix.append(y)
            yield from recurse(prefix)
            prefix.pop()

    yield from recurse([])


def lattice_points(poly: LatticePolytope, n: int = 1, mode: str = INCLUSIVE) -> list[Point]:
    """All integer points of the dilate ``n * poly`` in lexicographic order."""
    _check_mode(mode)
    if n < 0:
        raise ValueError("dilation factor must be nonnegative")
    if n == 0:
        return [(0,) * poly.ambient_dim]
    if len(poly.vertices) == 1:
        return [tuple(n * x for x in poly.vertices[0])]
    if poly.is_simplex:
        pts = _simplex_points(poly, n, strict=(mode == INTERIOR))
        return sorted(pts)
    pts = list(_fiber_points(poly.vertices, n))
    if mode == INTERIOR:
        scaled = tuple(tuple(n * x for x in v) for v in poly.vertices)
        pts = [p for p in pts if _lp_in_hull(scaled, p, interior=True)]
    return pts


@lru_cache(maxsize=65536)
def count_lattice_points(poly: LatticePolytope, n: int, mode: str = INCLUSIVE) -> int:
    """``|n P cap Z^d|``, or the number of relatively interior points."""
    return len(lattice_points(poly, n, mode))


def _require_full(poly: LatticePolytope) -> None:
    if not poly.is_full_dimensional:
        raise NotFullDimensionalError(
            f"interpolation requires dimension d: polytope has dimension "
            f"{poly.dimension} in Z^{poly.ambient_dim}"
        )


def ehrhart_polynomial(poly: LatticePolytope) -> EhrhartPolynomial:
    """Interpolate ``L_P`` through the counts at ``n = 0, ..., d``."""
    _require_full(poly)
    d = poly.ambient_dim
    values = [count_lattice_points(poly, n) for n in range(d + 1)]
    # Newton form: L(n) = sum_k diff_k * C(n, k)
    diffs = []
    row = list(values)
    for _ in range(d + 1):
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    coeffs = [Fraction(0)] * (d + 1)
    falling = [Fraction(1)]  # coefficients of n(n-1)...(n-k+1)
    for k, dk in enumerate(diffs):
        scale = Fraction(dk, factorial(k))
        for i, c in enumerate(falling):
            coeffs[i] += scale * c
        # multiply by (n - k)
        falling = [Fraction(0)] + falling
        for i in range(len(falling) - 1):
            falling[i] -= k * falling[i + 1]
    return EhrhartPolynomial(tuple(coeffs))


def delta_from_counts(counts: Sequence[int], d: int) -> DeltaVector:
    """``delta_j = sum_i (-1)^i C(d+1, i) L(j - i)`` for ``j <= d``."""
    return DeltaVector(tuple(
        sum((-1) ** i * comb(d + 1, i) * counts[j - i] for i in range(j + 1))
        for j in range(d + 1)
    ))


def delta_vector(poly: LatticePolytope) -> DeltaVector:
    _require_full(poly)
    d = poly.ambient_dim
    delta = delta_from_counts([count_lattice_points(poly, n) for n in range(d + 1)], d)
    if any(x < 0 for x in delta):
        raise ArithmeticError(f"negative delta entry {delta}; counting is broken")
    return delta


def simplex_delta_parallelepiped(poly: LatticePolytope) -> DeltaVector:
    """Delta-vector of a simplex from its half-open fundamental parallelepiped.

    The lattice points of the parallelepiped spanned by the cone generators
    ``(v_i, 1)`` form a group isomorphic to ``Z^{d+1} / W Z^{d+1}``; Smith
    normal form gives coset representatives, and ``delta_h`` counts those
    at height ``h``.
    """
    if not poly.is_simplex:
        raise LatticeError("simplex required")
    d = poly.ambient_dim
    w = [list(col) for col in zip(*[v + (1,) for v in poly.vertices])]
    s, u, _ = smith_normal_form(w)
    u_inv, u_det = adjugate(u)
    if u_det < 0:
        u_inv = [[-x for x in row] for row in u_inv]
    rows, det = _barycentric_system(poly)
    invariants = [s[i][i] for i in range(d + 1)]
    counts = [0] * (d + 1)
    for y in itertools.product(*(range(k) for k in invariants)):
        x = [sum(a * b for a, b in zip(row, y)) for row in u_inv]
        height = sum(sum(a * b for a, b in zip(row, x)) % det for row in rows) // det
        counts[height] += 1
    return DeltaVector(tuple(counts))


def normalized_volume(poly: LatticePolytope) -> int:
    """Sum of the delta-vector, cross-checked against ``d!`` times the leading coefficient."""
    delta = delta_vector(poly)
    lead = ehrhart_polynomial(poly).leading * factorial(poly.ambient_dim)
    if lead != delta.volume:
        raise ArithmeticError(f"volume mismatch: sum(delta)={delta.volume}, d!*lead={lead}")
    return delta.volume
