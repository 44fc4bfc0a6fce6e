"""Exact integer linear algebra: normal forms, ranks, lattice indices.

Matrices are plain ``list[list[int]]`` (row-major).  Python integers are
arbitrary precision, so nothing here can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

Matrix = list[list[int]]
Point = tuple[int, ...]


class LatticeError(ValueError):
    """Base class for invalid lattice input."""


class NotInvertibleError(LatticeError):
    pass


class NotFullDimensionalError(LatticeError):
    pass


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of finitely many points of Z^d, stored by its vertex list."""

    ambient_dim: int
    vertices: tuple[Point, ...]

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise LatticeError("ambient dimension must be positive")
        if not self.vertices:
            raise LatticeError("a polytope needs at least one vertex")
        verts = tuple(tuple(int(c) for c in v) for v in self.vertices)
        for v in verts:
            if len(v) != self.ambient_dim:
                raise LatticeError(f"vertex {v} is not in Z^{self.ambient_dim}")
        if len(set(verts)) != len(verts):
            raise LatticeError("duplicate vertices")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def from_points(cls, points: Sequence[Sequence[int]]) -> "LatticePolytope":
        points = [tuple(p) for p in points]
        return cls(len(points[0]), tuple(points))

    @property
    def dimension(self) -> int:
        """Rank of the vertex-difference matrix."""
        if len(self.vertices) == 1:
            return 0
        return rank(difference_matrix(self.vertices))

    @property
    def is_full_dimensional(self) -> bool:
        return self.dimension == self.ambient_dim

    @property
    def is_simplex(self) -> bool:
        return len(self.vertices) == self.ambient_dim + 1 and self.is_full_dimensional

    def __repr__(self):
        return f"LatticePolytope(d={self.ambient_dim}, vertices={list(self.vertices)})"


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def difference_matrix(points: Sequence[Sequence[int]]) -> Matrix:
    """d x (k-1) matrix whose columns are p_i - p_0."""
    p0 = points[0]
    cols = [[x - y for x, y in zip(p, p0)] for p in points[1:]]
    return transpose(cols)


def _check_shape(m: Matrix) -> None:
    if not m or not m[0]:
        raise LatticeError("matrix must have at least one row and one column")
    if any(len(row) != len(m[0]) for row in m):
        raise LatticeError("ragged matrix")


def determinant(m: Matrix) -> int:
    """Bareiss fraction-free elimination."""
    _check_shape(m)
    n = len(m)
    if any(len(row) != n for row in m):
        raise LatticeError("determinant of a non-square matrix")
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(m: Matrix) -> int:
    if not m or not m[0]:
        return 0
    a = [[Fraction(x) for x in row] for row in m]
    rows, cols = len(a), len(a[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, rows):
            f = a[i][c] / a[r][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def adjugate(m: Matrix) -> tuple[Matrix, int]:
    """Return ``(adj(M), det(M))`` so that ``M @ adj(M) == det(M) * I``."""
    n = len(m)
    det = determinant(m)
    if det == 0:
        raise NotInvertibleError("not invertible")
    # Gauss-Jordan over Q, then scale the inverse back to integers.
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    adj = [[int(x * det) for x in row[n:]] for row in a]
    return adj, det


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``.

    When ``a`` divides ``b`` the answer is ``(|a|, +-1, 0)``, so a pivot that
    already divides an entry is kept in place.
    """
    if a and b % a == 0:
        return (a, 1, 0) if a > 0 else (-a, -1, 0)
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _combine_rows(rows: Matrix, i: int, j: int, s: int, t: int, u: int, v: int) -> None:
    # (row_i, row_j) <- (s*row_i + t*row_j, u*row_i + v*row_j)
    ri, rj = rows[i], rows[j]
    rows[i] = [s * x + t * y for x, y in zip(ri, rj)]
    rows[j] = [u * x + v * y for x, y in zip(ri, rj)]


def hermite_normal_form(m: Matrix) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form of a square nonsingular integer matrix.

    Returns ``(H, U)`` with ``H = U @ M``, ``U`` unimodular, ``H`` upper
    triangular with positive diagonal and every entry above a pivot lying in
    ``[0, pivot)``.
    """
    _check_shape(m)
    n = len(m)
    if any(len(row) != n for row in m):
        raise NotInvertibleError("not invertible")
    h = [row[:] for row in m]
    u = identity(n)
    for c in range(n):
        for i in range(c + 1, n):
            if h[i][c] == 0:
                continue
            g, s, t = _xgcd(h[c][c], h[i][c])
            a, b = h[c][c] // g, h[i][c] // g
            # [[s, t], [-b, a]] has determinant s*a + t*b = 1
            _combine_rows(h, c, i, s, t, -b, a)
            _combine_rows(u, c, i, s, t, -b, a)
        if h[c][c] == 0:
            raise NotInvertibleError("not invertible")
        if h[c][c] < 0:
            h[c] = [-x for x in h[c]]
            u[c] = [-x for x in u[c]]
        piv = h[c][c]
        for i in range(c):
            q = h[i][c] // piv
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[c])]
                u[i] = [x - q * y for x, y in zip(u[i], u[c])]
    return h, u


def smith_normal_form(m: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(S, U, V)`` with ``S = U @ M @ V`` diagonal, ``s1 | s2 | ...``.

    Works for any rectangular integer matrix; the invariants are nonnegative
    and zeros come last.
    """
    _check_shape(m)
    rows, cols = len(m), len(m[0])
    s = [row[:] for row in m]
    u = identity(rows)
    vt = identity(cols)  # transpose of V, so column ops become row ops

    def col_op(i, j, a, b, c, d):
        # (col_i, col_j) <- (a*col_i + b*col_j, c*col_i + d*col_j)
        for row in s:
            x, y = row[i], row[j]
            row[i], row[j] = a * x + b * y, c * x + d * y
        _combine_rows(vt, i, j, a, b, c, d)

    for t in range(min(rows, cols)):
        nonzero = [(abs(s[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if s[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        s[t], s[pi] = s[pi], s[t]
        u[t], u[pi] = u[pi], u[t]
        col_op(t, pj, 0, 1, 1, 0)
        while True:
            for i in range(t + 1, rows):
                if s[i][t]:
                    g, x, y = _xgcd(s[t][t], s[i][t])
                    a, b = s[t][t] // g, s[i][t] // g
                    _combine_rows(s, t, i, x, y, -b, a)
                    _combine_rows(u, t, i, x, y, -b, a)
            for j in range(t + 1, cols):
                if s[t][j]:
                    g, x, y = _xgcd(s[t][t], s[t][j])
                    a, b = s[t][t] // g, s[t][j] // g
                    col_op(t, j, x, y, -b, a)
            if any(s[i][t] for i in range(t + 1, rows)):
                continue
            piv = s[t][t]
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if s[i][j] % piv), None)
            if bad is None:
                break
            # fold the offending row into row t, then re-eliminate
            i = bad[0]
            s[t] = [x + y for x, y in zip(s[t], s[i])]
            u[t] = [x + y for x, y in zip(u[t], u[i])]
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return s, u, transpose(vt)


def smith_invariants(m: Matrix) -> list[int]:
    s, _, _ = smith_normal_form(m)
    return [s[i][i] for i in range(min(len(s), len(s[0])))]


def lattice_index(points: Sequence[Sequence[int]]) -> int:
    """Index in Z^d of the affine lattice generated by ``points``.

    Computed as the product of the Smith invariants of the matrix of
    differences ``p_i - p_0``.
    """
    points = [tuple(p) for p in points]
    d = len(points[0])
    if len(points) <= d:
        raise NotFullDimensionalError("not full-dimensional")
    inv = smith_invariants(difference_matrix(points))
    if sum(1 for x in inv if x) < d:
        raise NotFullDimensionalError("not full-dimensional")
    return prod(inv)


def embed_affine(poly: LatticePolytope) -> LatticePolytope:
    """Re-express ``poly`` in coordinates of the lattice ``aff(P) cap Z^d``.

    With ``S = U D V`` the Smith form of the difference matrix ``D``, the map
    ``x -> U (x - v_0)`` sends ``aff(P) cap Z^d`` onto ``Z^r x 0``; the first
    ``r`` coordinates give a full-dimensional copy with the same lattice
    structure.
    """
    verts = poly.vertices
    if len(verts) == 1:
        raise NotFullDimensionalError("a single point has no full-dimensional embedding")
    diff = difference_matrix(verts)
    s, u, _ = smith_normal_form(diff)
    r = sum(1 for i in range(min(len(s), len(s[0]))) if s[i][i])
    p0 = verts[0]
    images = []
    for v in verts:
        shifted = [x - y for x, y in zip(v, p0)]
        images.append(tuple(sum(a * b for a, b in zip(row, shifted)) for row in u[:r]))
    return LatticePolytope(r, tuple(images))
