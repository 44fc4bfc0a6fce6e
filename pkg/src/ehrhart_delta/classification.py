"""Realisability predicates for delta-vectors of normalised volume at most 5."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .delta import ExponentTuple, hibi_check, stanley_check, _as_delta

SIMPLEX = "simplex"
ANY = "any-polytope"

# (tuple, minimum dimension) realised by non-simplices only
EXCEPTIONAL_VOL5 = {
    (1, 1, 1, 2): 2,
    (1, 2, 2, 2): 3,
    (1, 2, 3, 3): 5,
}


def _tuple(exponents, d: int, length: int) -> tuple[int, ...]:
    if isinstance(exponents, ExponentTuple):
        exponents = exponents.exponents
    exps = tuple(exponents)
    if len(exps) != length:
        raise ValueError(f"expected {length} exponents, got {exps}")
    if list(exps) != sorted(exps) or any(not 1 <= x <= d for x in exps):
        raise ValueError(f"exponents {exps} must be sorted and lie in [1, {d}]")
    return exps


def admissible_vol3(delta) -> bool:
    """Normalised volume <= 3: realisable iff delta_1 >= delta_d plus both inequality families."""
    delta = _as_delta(delta)
    d = delta.dim
    if d < 3:
        raise ValueError("theorem stated for d >= 3")
    if delta[0] != 1 or any(x < 0 for x in delta) or delta.volume > 3:
        raise ValueError(f"{delta} is not a vector of volume <= 3 with delta_0 = 1")
    return delta[1] >= delta[d] and stanley_check(delta) and hibi_check(delta)


def admissible_vol4(exponents, d: int) -> bool:
    i1, i2, i3 = _tuple(exponents, d, 3)
    return (
        i3 <= i1 + i2
        and i1 + i3 <= d + 1
        and i2 <= (d + 1) // 2
        and (2 * i2 <= i1 + i3 or i2 + i3 <= d + 1)
    )


def simplex_vol5(exponents, d: int) -> bool:
    """Delta-polynomials ``1 + t^i1 + ... + t^i4`` of lattice d-simplices."""
    i = (None,) + _tuple(exponents, d, 4)  # 1-based
    if not (i[1] + i[4] == i[2] + i[3] <= d + 1):
        return False
    return all(i[k] + i[l] >= i[k + l] for k in range(1, 5) for l in range(k, 5) if k + l <= 4)


def polytope_vol5(exponents, d: int) -> bool:
    """Delta-polynomials ``1 + t^i1 + ... + t^i4`` of arbitrary lattice d-polytopes."""
    exps = _tuple(exponents, d, 4)
    if simplex_vol5(exps, d):
        return True
    return exps in EXCEPTIONAL_VOL5 and d >= EXCEPTIONAL_VOL5[exps]


@dataclass(frozen=True)
class AdmissibleSet:
    dim: int
    volume: int
    kind: str
    tuples: tuple[ExponentTuple, ...]

    def exponent_set(self) -> set[tuple[int, ...]]:
        return {t.exponents for t in self.tuples}

    def __iter__(self):
        return iter(self.tuples)

    def __len__(self):
        return len(self.tuples)


def enumerate_admissible(d: int, volume: int, kind: str = ANY) -> AdmissibleSet:
    """All sorted tuples with entries in ``[1, d]`` accepted by the matching predicate."""
    if d < 1:
        raise ValueError("dimension must be positive")
    if kind not in (SIMPLEX, ANY):
        raise ValueError(f"unknown kind {kind!r}")
    if volume == 4:
        # every volume-4 vector is already realised by a simplex
        pred = admissible_vol4
    elif volume == 5:
        pred = simplex_vol5 if kind == SIMPLEX else polytope_vol5
    else:
        raise ValueError(f"unsupported volume {volume}; expected 4 or 5")
    found = [
        ExponentTuple(t, d)
        for t in itertools.combinations_with_replacement(range(1, d + 1), volume - 1)
        if pred(t, d)
    ]
    return AdmissibleSet(d, volume, kind, tuple(sorted(found)))


def candidate_vectors(volume: int, d: int) -> list[tuple[int, ...]]:
    """Vectors of the given volume passing every necessary condition for spanning polytopes.

    The conditions are: delta_0 = 1, entries positive up to the degree,
    delta_1 >= delta_d, and both inequality families.  For a prime volume
    every lattice polytope that is not an empty simplex is spanning, so this
    recovers the finite case list behind the volume-5 classification.
    """
    out = []
    rest = volume - 1
    for s in range(0, min(d, rest) + 1):
        for parts in _compositions(rest, s):
            entries = (1,) + parts + (0,) * (d - s)
            if entries[1] < entries[d]:
                continue
            if stanley_check(entries) and hibi_check(entries):
                out.append(entries)
    return sorted(out)


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    if parts == 0:
        return [()] if total == 0 else []
    return [
        (first,) + rest
        for first in range(1, total - parts + 2)
        for rest in _compositions(total - first, parts - 1)
    ]
