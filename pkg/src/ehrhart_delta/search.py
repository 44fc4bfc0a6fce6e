"""Exhaustive small-scale verification of the volume-5 classification.

Every lattice d-simplex with a vertex at the origin is, after a unimodular
change of coordinates, ``conv(0, columns of H)`` for a Hermite normal form
``H`` of the same determinant.  Enumerating those matrices therefore covers
every simplex class (with repeats, which are harmless here since only the
set of realised delta-vectors matters).
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .classification import (
    ANY,
    EXCEPTIONAL_VOL5,
    SIMPLEX,
    candidate_vectors,
    enumerate_admissible,
    polytope_vol5,
    simplex_vol5,
)
from .constructions import is_empty_simplex, iterated_pyramid, paper_example, polytope_index
from .delta import exponent_tuple, spanning_positivity_check
from .ehrhart import DeltaVector, delta_vector, simplex_delta_parallelepiped
from .lattice import LatticePolytope

log = logging.getLogger(__name__)

MAX_VERIFY_DIM = 6
MAX_VERIFY_PRIME = 7

# exceptional tuple -> example number of its witness
WITNESS_EXAMPLE = {(1, 1, 1, 2): 1, (1, 2, 2, 2): 2, (1, 2, 3, 3): 3}


def _ordered_factorizations(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (n,)
        return
    for first in range(1, n + 1):
        if n % first == 0:
            for rest in _ordered_factorizations(n // first, parts - 1):
                yield (first,) + rest


def hnf_matrices(d: int, det: int) -> Iterator[list[list[int]]]:
    """Upper-triangular HNFs of determinant ``det``, diagonals in lexicographic order."""
    if d < 1 or det < 1:
        raise ValueError("need d >= 1 and det >= 1")
    above = [(i, j) for j in range(d) for i in range(j)]
    for diag in _ordered_factorizations(det, d):
        ranges = [range(diag[j]) for (i, j) in above]
        for entries in itertools.product(*ranges):
            h = [[0] * d for _ in range(d)]
            for k in range(d):
                h[k][k] = diag[k]
            for (i, j), x in zip(above, entries):
                h[i][j] = x
            yield h


def hnf_simplex(h: list[list[int]]) -> LatticePolytope:
    d = len(h)
    cols = [tuple(h[i][j] for i in range(d)) for j in range(d)]
    return LatticePolytope(d, ((0,) * d,) + tuple(cols))


def enumerate_hnf_simplices(d: int, det: int) -> list[LatticePolytope]:
    return [hnf_simplex(h) for h in hnf_matrices(d, det)]


def _map(fn: Callable, items: list, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def realized_delta_set(d: int, det: int, workers: int = 1) -> set[DeltaVector]:
    simplices = enumerate_hnf_simplices(d, det)
    return set(_map(simplex_delta_parallelepiped, simplices, workers))


def _both_paths(poly: LatticePolytope) -> tuple[DeltaVector, DeltaVector]:
    return simplex_delta_parallelepiped(poly), delta_vector(poly)


def dual_path_mismatches(d: int, det: int, workers: int = 1) -> list[tuple[LatticePolytope, DeltaVector, DeltaVector]]:
    """Simplices on which the parallelepiped and interpolation paths disagree."""
    simplices = enumerate_hnf_simplices(d, det)
    results = _map(_both_paths, simplices, workers)
    return [(s, a, b) for s, (a, b) in zip(simplices, results) if a != b]


def _fmt_tuple(t: tuple[int, ...]) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def _fmt(tuples: Iterable[tuple[int, ...]]) -> list[str]:
    return [_fmt_tuple(t) for t in sorted(tuples)]


@dataclass
class ClassificationReport:
    dim: int
    volume: int
    realized_simplex_tuples: set[tuple[int, ...]] = field(default_factory=set)
    realized_polytope_tuples: set[tuple[int, ...]] = field(default_factory=set)
    predicate_simplex_tuples: set[tuple[int, ...]] = field(default_factory=set)
    predicate_polytope_tuples: set[tuple[int, ...]] = field(default_factory=set)
    witnesses: dict[tuple[int, ...], str] = field(default_factory=dict)
    proof_cases: list[tuple[int, ...]] = field(default_factory=list)
    simplices_checked: int = 0
    empty_simplices: int = 0
    empty_index_distribution: Counter = field(default_factory=Counter)
    spanning_violations: list[str] = field(default_factory=list)
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.spanning_violations

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "volume": self.volume,
            "ok": self.ok,
            "simplices_checked": self.simplices_checked,
            "realized_simplex_tuples": _fmt(self.realized_simplex_tuples),
            "predicate_simplex_tuples": _fmt(self.predicate_simplex_tuples),
            "realized_polytope_tuples": _fmt(self.realized_polytope_tuples),
            "predicate_polytope_tuples": _fmt(self.predicate_polytope_tuples),
            "witnesses": {_fmt_tuple(t): self.witnesses[t] for t in sorted(self.witnesses)},
            "proof_cases": [" ".join(map(str, c)) for c in self.proof_cases],
            "empty_simplices": self.empty_simplices,
            "empty_index_distribution": {str(k): self.empty_index_distribution[k]
                                         for k in sorted(self.empty_index_distribution)},
            "spanning_violations": list(self.spanning_violations),
            "mismatches": list(self.mismatches),
        }


def witness_for(exponents: tuple[int, ...], d: int) -> LatticePolytope:
    """Reference witness for an exceptional tuple, lifted to dimension ``d`` by pyramids."""
    d0 = EXCEPTIONAL_VOL5[exponents]
    if d < d0:
        raise ValueError(f"{exponents} needs dimension >= {d0}")
    return iterated_pyramid(paper_example(WITNESS_EXAMPLE[exponents]), d - d0)


def verify_main_theorem(d: int, workers: int = 1) -> ClassificationReport:
    """Compare realised volume-5 delta-polynomials in dimension ``d`` with the predicates."""
    if not 1 <= d <= MAX_VERIFY_DIM:
        raise ValueError(f"dimension must lie in [1, {MAX_VERIFY_DIM}]")
    rep = ClassificationReport(dim=d, volume=5)
    rep.predicate_simplex_tuples = enumerate_admissible(d, 5, SIMPLEX).exponent_set()
    rep.predicate_polytope_tuples = enumerate_admissible(d, 5, ANY).exponent_set()

    simplices = enumerate_hnf_simplices(d, 5)
    rep.simplices_checked = len(simplices)
    deltas = set(_map(simplex_delta_parallelepiped, simplices, workers))
    rep.realized_simplex_tuples = {exponent_tuple(x).exponents for x in deltas}
    for t in sorted(rep.realized_simplex_tuples - rep.predicate_simplex_tuples):
        rep.mismatches.append(f"simplex realises {t} but the simplex predicate rejects it")
    for t in sorted(rep.predicate_simplex_tuples - rep.realized_simplex_tuples):
        rep.mismatches.append(f"simplex predicate accepts {t} but no HNF simplex realises it")

    realized = set(rep.realized_simplex_tuples)
    for exps, d0 in sorted(EXCEPTIONAL_VOL5.items()):
        if d < d0:
            continue
        poly = witness_for(exps, d)
        got = exponent_tuple(delta_vector(poly)).exponents
        rep.witnesses[exps] = f"Pyr^{d - d0}(P{WITNESS_EXAMPLE[exps]})"
        realized.add(got)
        if got != exps:
            rep.mismatches.append(f"witness {rep.witnesses[exps]} realises {got}, expected {exps}")
        if simplex_vol5(exps, d):
            rep.mismatches.append(f"simplex predicate accepts exceptional {exps}")
    rep.realized_polytope_tuples = realized
    for t in sorted(realized):
        if not polytope_vol5(t, d):
            rep.mismatches.append(f"realised {t} rejected by the polytope predicate")
    for t in sorted(rep.predicate_polytope_tuples - realized):
        rep.mismatches.append(f"polytope predicate accepts {t} but nothing realises it")

    # the finite case list for non-simplex (hence spanning) polytopes
    rep.proof_cases = candidate_vectors(5, d)
    for case in rep.proof_cases:
        t = exponent_tuple(case).exponents
        if not polytope_vol5(t, d):
            rep.mismatches.append(f"candidate {case} rejected by the polytope predicate")
        elif not simplex_vol5(t, d) and t not in EXCEPTIONAL_VOL5:
            rep.mismatches.append(f"candidate {case} is neither simplex-realisable nor exceptional")
    log.info("verified d=%d: %d simplices, %d mismatches", d, len(simplices), len(rep.mismatches))
    return rep


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


def _spanning_data(poly: LatticePolytope) -> tuple[bool, int, DeltaVector]:
    return is_empty_simplex(poly), polytope_index(poly), simplex_delta_parallelepiped(poly)


def verify_spanning_theorem(d: int, p: int, workers: int = 1) -> ClassificationReport:
    """Every non-empty lattice simplex of prime normalised volume ``p`` is spanning."""
    if not is_prime(p):
        raise ValueError("theorem requires prime")
    if not 1 <= d <= MAX_VERIFY_DIM:
        raise ValueError(f"dimension must lie in [1, {MAX_VERIFY_DIM}]")
    rep = ClassificationReport(dim=d, volume=p)
    simplices = enumerate_hnf_simplices(d, p)
    rep.simplices_checked = len(simplices)
    for poly, (empty, index, delta) in zip(simplices, _map(_spanning_data, simplices, workers)):
        if delta.volume != p:
            rep.mismatches.append(f"{list(poly.vertices)} has volume {delta.volume}, expected {p}")
        if empty:
            rep.empty_simplices += 1
            rep.empty_index_distribution[index] += 1
            if index not in (1, p):
                rep.spanning_violations.append(f"empty {list(poly.vertices)} has index {index}")
            continue
        if index != 1:
            rep.spanning_violations.append(f"non-empty {list(poly.vertices)} has index {index}")
        if not spanning_positivity_check(delta):
            rep.spanning_violations.append(f"non-empty {list(poly.vertices)} has delta {delta}")
    return rep
