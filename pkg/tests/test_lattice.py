import itertools
import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ehrhart_delta.lattice import (
    LatticeError,
    LatticePolytope,
    NotFullDimensionalError,
    NotInvertibleError,
    determinant,
    embed_affine,
    hermite_normal_form,
    identity,
    lattice_index,
    matmul,
    rank,
    smith_normal_form,
)
from oracles import snf_invariants
from strategies import int_matrices, square_matrices


def is_hnf(h):
    n = len(h)
    for i in range(n):
        for j in range(n):
            if i > j and h[i][j] != 0:
                return False
        if h[i][i] <= 0:
            return False
        if any(not 0 <= h[k][i] < h[i][i] for k in range(i)):
            return False
    return True


@pytest.mark.parametrize(
    ("m", "h", "u"),
    [
        ([[1, 0], [0, 1]], [[1, 0], [0, 1]], [[1, 0], [0, 1]]),
        ([[2, 0], [0, 3]], [[2, 0], [0, 3]], [[1, 0], [0, 1]]),
        ([[0, 5], [1, 2]], [[1, 2], [0, 5]], [[0, 1], [1, 0]]),
    ],
)
def test_hnf_examples(m, h, u):
    assert hermite_normal_form(m) == (h, u)


@pytest.mark.parametrize("m", [[[1, 2], [2, 4]], [[1, 2, 3]], [[0]]])
def test_hnf_rejects_singular(m):
    with pytest.raises(NotInvertibleError, match="not invertible"):
        hermite_normal_form(m)


@given(square_matrices())
def test_hnf_properties(m):
    assume(determinant(m) != 0)
    h, u = hermite_normal_form(m)
    assert matmul(u, m) == h
    assert abs(determinant(u)) == 1
    assert is_hnf(h)
    assert abs(determinant(h)) == abs(determinant(m))


@given(square_matrices(max_n=3, bound=4))
def test_hnf_is_canonical(m):
    # the HNF only depends on the row lattice
    assume(determinant(m) != 0)
    n = len(m)
    g = identity(n)
    if n == 1:
        g = [[-1]]
    else:
        g[0][n - 1] = 3
        g[n - 1], g[0] = g[0], g[n - 1]
    assert hermite_normal_form(matmul(g, m))[0] == hermite_normal_form(m)[0]


@pytest.mark.parametrize(
    ("m", "diag"),
    [
        ([[2, 0], [0, 3]], [1, 6]),
        ([[1, 0], [0, 1]], [1, 1]),
        ([[1, 1], [1, 1]], [1, 0]),
    ],
)
def test_snf_examples(m, diag):
    s, u, v = smith_normal_form(m)
    assert [s[i][i] for i in range(2)] == diag
    assert matmul(matmul(u, m), v) == s


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_snf_properties(rows, cols, data):
    m = data.draw(int_matrices(rows, cols))
    s, u, v = smith_normal_form(m)
    assert matmul(matmul(u, m), v) == s
    assert abs(determinant(u)) == 1 and abs(determinant(v)) == 1
    diag = [s[i][i] for i in range(min(rows, cols))]
    assert all(s[i][j] == 0 for i in range(rows) for j in range(cols) if i != j)
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)
    assert sorted(diag) == sorted(snf_invariants(m))
    if rows == cols and determinant(m) != 0:
        prod = 1
        for x in diag:
            prod *= x
        assert prod == abs(determinant(m))


def test_lattice_index_examples():
    d = 4
    std = [(0,) * d] + [tuple(int(i == j) for j in range(d)) for i in range(d)]
    assert lattice_index(std) == 1
    assert lattice_index([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 5)]) == 5
    p1_points = [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 3)]
    assert lattice_index(p1_points) == 1


def test_lattice_index_rejects_degenerate():
    with pytest.raises(NotFullDimensionalError, match="not full-dimensional"):
        lattice_index([(0, 0), (1, 1), (2, 2), (3, 3)])
    with pytest.raises(NotFullDimensionalError):
        lattice_index([(0, 0), (1, 0)])


point_sets = st.integers(2, 3).flatmap(
    lambda d: st.lists(st.tuples(*[st.integers(-4, 4)] * d), min_size=d + 1, max_size=d + 3, unique=True)
)


@given(point_sets, st.randoms(use_true_random=False), st.data())
def test_lattice_index_invariances(points, rnd, data):
    d = len(points[0])
    assume(rank([[x - y for x, y in zip(p, points[0])] for p in points[1:]]) == d)
    idx = lattice_index(points)
    shuffled = list(points)
    rnd.shuffle(shuffled)
    assert lattice_index(shuffled) == idx
    shift = data.draw(st.tuples(*[st.integers(-5, 5)] * d))
    assert lattice_index([tuple(x + s for x, s in zip(p, shift)) for p in points]) == idx
    # unimodular change of coordinates: product of elementary shears
    g = identity(d)
    for _ in range(3):
        i, j = data.draw(st.sampled_from([(i, j) for i in range(d) for j in range(d) if i != j]))
        k = data.draw(st.integers(-2, 2))
        g = [[g[r][c] + (k * g[j][c] if r == i else 0) for c in range(d)] for r in range(d)]
    moved = [tuple(sum(g[r][c] * p[c] for c in range(d)) for r in range(d)) for p in points]
    assert lattice_index(moved) == idx


def test_polytope_validation():
    with pytest.raises(LatticeError, match="duplicate"):
        LatticePolytope(2, ((0, 0), (0, 0)))
    with pytest.raises(LatticeError):
        LatticePolytope(2, ((0, 0), (1, 0, 0)))
    with pytest.raises(LatticeError):
        LatticePolytope(2, ())
    square = LatticePolytope.from_points([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert square.is_full_dimensional and not square.is_simplex
    assert LatticePolytope.from_points([(0, 0), (1, 1), (2, 2)]).dimension == 1


def test_embed_affine_segment():
    seg = LatticePolytope.from_points([(0, 0), (2, 4)])
    emb = embed_affine(seg)
    assert emb.ambient_dim == 1
    assert sorted(abs(v[0]) for v in emb.vertices) == [0, 2]


def test_determinant_matches_expansion():
    for m in ([[2, 1], [7, 4]], [[0, 1, 2], [3, 0, 1], [1, 1, 0]]):
        n = len(m)
        expansion = sum(
            (-1) ** sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
            * math.prod(m[i][perm[i]] for i in range(n))
            for perm in itertools.permutations(range(n))
        )
        assert determinant(m) == expansion
