"""Slow reference implementations that share no code path with the library.

Membership here uses facet inequalities found by brute force over vertex
subsets, never the LP or barycentric coordinates used in the package.
"""

from __future__ import annotations

import itertools
from math import comb

import sympy


def facets(vertices):
    """Integer inequalities ``a . x <= b`` cutting out a full-dimensional ``conv(vertices)``."""
    d = len(vertices[0])
    out = set()
    for subset in itertools.combinations(vertices, d):
        base = subset[0]
        diffs = sympy.Matrix([[x - y for x, y in zip(v, base)] for v in subset[1:]])
        if d == 1:
            normal = [1]
        else:
            null = diffs.nullspace()
            if len(null) != 1:
                continue
            vec = null[0]
            den = sympy.ilcm(*[sympy.fraction(x)[1] for x in vec])
            normal = [int(x * den) for x in vec]
        b = sum(a * x for a, x in zip(normal, base))
        vals = [sum(a * x for a, x in zip(normal, v)) - b for v in vertices]
        if all(v <= 0 for v in vals):
            out.add((tuple(normal), b))
        elif all(v >= 0 for v in vals):
            out.add((tuple(-a for a in normal), -b))
    return sorted(out)


def naive_count(vertices, n, interior=False):
    """Scan the whole bounding box of ``n * conv(vertices)`` against the facets."""
    ineqs = facets(vertices)
    box = [range(n * min(c), n * max(c) + 1) for c in zip(*vertices)]
    total = 0
    for x in itertools.product(*box):
        ok = True
        for a, b in ineqs:
            lhs = sum(ai * xi for ai, xi in zip(a, x))
            if lhs > n * b or (interior and lhs == n * b):
                ok = False
                break
        total += ok
    return total


def series_delta(counts, d):
    """Coefficients of ``(1 - t)^(d+1) * sum_n L(n) t^n`` up to the last counted degree."""
    top = len(counts) - 1
    return [
        sum((-1) ** i * comb(d + 1, i) * counts[j - i] for i in range(min(j, d + 1) + 1))
        for j in range(top + 1)
    ]


def snf_invariants(rows):
    from sympy.matrices.normalforms import smith_normal_form
    from sympy.polys.domains import ZZ

    s = smith_normal_form(sympy.Matrix(rows), domain=ZZ)
    return [abs(int(s[i, i])) for i in range(min(s.shape))]


def sublattice_count(d, n):
    """Number of index-``n`` sublattices of Z^d (multiplicative; Gaussian binomial at prime powers)."""
    total = 1
    for p, e in sympy.factorint(n).items():
        num = den = 1
        for i in range(1, d):
            num *= p ** (e + i) - 1
            den *= p ** i - 1
        total *= num // den
    return total
