"""Necessary conditions on delta-vectors and the exponent-tuple encoding."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .ehrhart import DeltaVector


def _as_delta(delta) -> DeltaVector:
    return delta if isinstance(delta, DeltaVector) else DeltaVector(tuple(delta))


def stanley_violation(delta) -> int | None:
    """First ``i`` with ``delta_0+...+delta_i > delta_s+...+delta_{s-i}``, else None."""
    delta = _as_delta(delta)
    s = delta.degree
    for i in range(s // 2 + 1):
        if sum(delta[: i + 1]) > sum(delta[s - i : s + 1]):
            return i
    return None


def stanley_check(delta) -> bool:
    return stanley_violation(delta) is None


def hibi_violation(delta) -> int | None:
    """First ``i`` with ``delta_{d-1}+...+delta_{d-i} > delta_2+...+delta_{i+1}``, else None."""
    delta = _as_delta(delta)
    d = delta.dim
    for i in range(1, (d - 1) // 2 + 1):
        if sum(delta[d - i : d]) > sum(delta[2 : i + 2]):
            return i
    return None


def hibi_check(delta) -> bool:
    return hibi_violation(delta) is None


def spanning_positivity_check(delta) -> bool:
    """``delta_i >= 1`` for every ``i`` up to the degree."""
    delta = _as_delta(delta)
    return all(x >= 1 for x in delta.nonzero_prefix())


@dataclass
class PropertyReport:
    """Outcome of each basic delta-vector property, with the offending index if any."""

    checks: dict[str, bool] = field(default_factory=dict)
    offending: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, passed in self.checks.items() if not passed]

    def __str__(self):
        lines = []
        for name, passed in self.checks.items():
            extra = f" (index {self.offending[name]})" if name in self.offending else ""
            lines.append(f"{'PASS' if passed else 'FAIL'} {name}{extra}")
        return "\n".join(lines)


def basic_property_report(delta, point_count: int, interior_count: int,
                          normalized_volume: int | None = None) -> PropertyReport:
    """Check the elementary facts every delta-vector of a lattice polytope obeys.

    ``normalized_volume`` is optional; without it the volume check only asks
    that the entries sum to a positive integer.
    """
    delta = _as_delta(delta)
    d = delta.dim
    rep = PropertyReport()
    rep.checks["delta_0 = 1"] = delta[0] == 1
    rep.checks["delta_i >= 0"] = all(x >= 0 for x in delta)
    neg = next((i for i, x in enumerate(delta) if x < 0), None)
    if neg is not None:
        rep.offending["delta_i >= 0"] = neg
    rep.checks["delta_1 = |P cap Z^d| - (d+1)"] = d >= 1 and delta[1] == point_count - (d + 1)
    rep.checks["delta_d = interior points"] = delta[d] == interior_count
    rep.checks["delta_1 >= delta_d"] = d >= 1 and delta[1] >= delta[d]
    lower = True
    if d >= 1 and delta[d] != 0:
        bad = next((i for i in range(1, d) if delta[i] < delta[1]), None)
        if bad is not None:
            lower = False
            rep.offending["delta_d != 0 => delta_i >= delta_1"] = bad
    rep.checks["delta_d != 0 => delta_i >= delta_1"] = lower
    if normalized_volume is None:
        rep.checks["sum delta = normalized volume"] = delta.volume >= 1
    else:
        rep.checks["sum delta = normalized volume"] = delta.volume == normalized_volume
    return rep


@dataclass(frozen=True, order=True)
class ExponentTuple:
    """Sorted exponents ``(i_1 <= ... <= i_k)`` of ``1 + t^{i_1} + ... + t^{i_k}``."""

    exponents: tuple[int, ...]
    dim: int

    def __post_init__(self):
        exps = tuple(int(x) for x in self.exponents)
        if list(exps) != sorted(exps):
            raise ValueError(f"exponents {exps} are not sorted")
        if any(not 1 <= x <= self.dim for x in exps):
            raise ValueError(f"exponents {exps} must lie in [1, {self.dim}]")
        object.__setattr__(self, "exponents", exps)

    @property
    def volume(self) -> int:
        return len(self.exponents) + 1

    def to_delta(self) -> DeltaVector:
        entries = [1] + [0] * self.dim
        for i in self.exponents:
            entries[i] += 1
        return DeltaVector(tuple(entries))

    def __str__(self):
        return "(" + ",".join(map(str, self.exponents)) + ")"


def exponent_tuple(delta) -> ExponentTuple:
    delta = _as_delta(delta)
    if delta[0] != 1:
        raise ValueError(f"delta_0 must be 1, got {delta[0]}")
    exps = tuple(i for i, x in enumerate(delta) if i >= 1 for _ in range(x))
    return ExponentTuple(exps, delta.dim)


def rebuild_delta(exponents: Sequence[int], d: int) -> DeltaVector:
    return ExponentTuple(tuple(exponents), d).to_delta()
