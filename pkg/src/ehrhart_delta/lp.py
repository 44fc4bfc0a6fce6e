"""Exact linear programming over integer data.

A dense two-phase simplex on a fraction-free (integer pivoting) tableau:
the true tableau is ``T / D`` where ``D`` is the last pivot, and every
update divides exactly by the previous pivot.  Bland's rule prevents
cycling.  Problems are in equality form ``A x = b, x >= 0``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class _Tableau:
    __slots__ = ("rows", "obj", "basis", "denom", "nvars")

    def __init__(self, a: Sequence[Sequence[int]], b: Sequence[int]):
        m, n = len(a), len(a[0])
        self.nvars = n
        rows = []
        for i, (row, rhs) in enumerate(zip(a, b)):
            row = list(row)
            if rhs < 0:
                row, rhs = [-x for x in row], -rhs
            art = [0] * m
            art[i] = 1
            rows.append(row + art + [rhs])
        self.rows = rows
        self.basis = list(range(n, n + m))
        self.denom = 1
        # phase one: maximise -sum(artificials)
        self.obj = [sum(r[j] for r in rows) for j in range(n)] + [0] * m + [sum(r[-1] for r in rows)]

    def pivot(self, r: int, c: int) -> None:
        rows, d = self.rows, self.denom
        prow = rows[r]
        p = prow[c]
        for i, row in enumerate(rows):
            if i != r:
                f = row[c]
                if f:
                    rows[i] = [(x * p - f * y) // d for x, y in zip(row, prow)]
                else:
                    rows[i] = [x * p // d for x in row]
        f = self.obj[c]
        self.obj = [(x * p - f * y) // d for x, y in zip(self.obj, prow)]
        self.denom = p
        self.basis[r] = c

    def run(self, allowed: int) -> bool:
        """Optimise the current objective; False if unbounded."""
        rows = self.rows
        while True:
            enter = next((j for j in range(allowed) if self.obj[j] > 0), None)
            if enter is None:
                return True
            best = None
            for i, row in enumerate(rows):
                coef = row[enter]
                if coef > 0:
                    if best is None:
                        best = i
                        continue
                    # compare row[-1]/coef with rows[best][-1]/rows[best][enter]
                    lhs = row[-1] * rows[best][enter]
                    rhs = rows[best][-1] * coef
                    if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best]):
                        best = i
            if best is None:
                return False
            self.pivot(best, enter)

    def drive_out_artificials(self) -> None:
        n = self.nvars
        i = 0
        while i < len(self.rows):
            if self.basis[i] >= n:
                row = self.rows[i]
                col = next((j for j in range(n) if row[j]), None)
                if col is None:
                    # redundant equation
                    del self.rows[i]
                    del self.basis[i]
                    continue
                if row[col] < 0:
                    self.rows[i] = [-x for x in row]
                self.pivot(i, col)
            i += 1

    def set_objective(self, c: Sequence[int]) -> None:
        n, d = self.nvars, self.denom
        width = len(self.rows[0]) if self.rows else n + 1
        obj = [cj * d for cj in c] + [0] * (width - n)
        for row, bv in zip(self.rows, self.basis):
            cb = c[bv]
            if cb:
                obj = [x - cb * y for x, y in zip(obj, row)]
        # columns of basic variables are zero by construction
        self.obj = obj

    def value(self) -> Fraction:
        return Fraction(-self.obj[-1], self.denom)

    def copy(self) -> "_Tableau":
        t = _Tableau.__new__(_Tableau)
        t.rows = [r[:] for r in self.rows]
        t.obj = self.obj[:]
        t.basis = self.basis[:]
        t.denom = self.denom
        t.nvars = self.nvars
        return t


def _phase_one(a, b) -> _Tableau | None:
    t = _Tableau(a, b)
    t.run(len(t.obj) - 1)
    if t.obj[-1] != 0:
        return None
    t.drive_out_artificials()
    return t


def feasible(a: Sequence[Sequence[int]], b: Sequence[int]) -> bool:
    """Is ``{x >= 0 : A x = b}`` nonempty?"""
    return _phase_one(a, b) is not None


def maximize(c: Sequence[int], a: Sequence[Sequence[int]], b: Sequence[int]) -> Fraction | None:
    """Maximum of ``c . x`` over ``{x >= 0 : A x = b}``; None if infeasible.

    Raises ``ArithmeticError`` on an unbounded objective.
    """
    t = _phase_one(a, b)
    if t is None:
        return None
    t.set_objective(c)
    if not t.run(t.nvars):
        raise ArithmeticError("unbounded linear program")
    return t.value()


def value_range(c: Sequence[int], a: Sequence[Sequence[int]], b: Sequence[int]) -> tuple[Fraction, Fraction] | None:
    """``(min, max)`` of ``c . x`` over a bounded feasible region, sharing phase one."""
    t = _phase_one(a, b)
    if t is None:
        return None
    lo = t.copy()
    lo.set_objective([-x for x in c])
    t.set_objective(c)
    if not (t.run(t.nvars) and lo.run(lo.nvars)):
        raise ArithmeticError("unbounded linear program")
    return -lo.value(), t.value()
