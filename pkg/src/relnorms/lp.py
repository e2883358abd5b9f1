"""Exact two-phase simplex method over the rationals.

The tableau holds Python ints.  Each row encodes a linear relation up to a
positive factor, and the row of a basic variable always carries a positive
coefficient in that variable's column.  Pivot selection follows Bland's rule
(lowest eligible index for both the entering and the leaving variable),
which guarantees termination on degenerate problems.
"""

from fractions import Fraction
from math import lcm
from typing import NamedTuple

from ._kernels import eliminate
from .errors import ConsistencyError, InputError
from .exact import RationalMatrix, to_q

SENSES = ("=", "<=", ">=")


class LpProblem:
    """``objective . x`` subject to ``matrix @ x (senses) rhs`` and per-variable bounds.

    ``bounds[j]`` is a ``(lower, upper)`` pair where either side may be ``None``
    (unbounded).  The default bound is ``(0, None)``.
    """

    def __init__(self, objective, matrix, rhs, senses=None, bounds=None):
        if not isinstance(matrix, RationalMatrix):
            matrix = RationalMatrix(matrix, len(objective))
        self.objective = tuple(to_q(c) for c in objective)
        self.matrix = matrix
        self.rhs = tuple(to_q(b) for b in rhs)
        self.senses = tuple(senses) if senses is not None else ("=",) * matrix.rows
        if bounds is None:
            bounds = [(0, None)] * len(self.objective)
        self.bounds = tuple((None if lo is None else to_q(lo), None if hi is None else to_q(hi))
                            for lo, hi in bounds)
        n = len(self.objective)
        if matrix.cols != n or len(self.bounds) != n:
            raise InputError("objective, matrix and bounds disagree on the variable count")
        if len(self.rhs) != matrix.rows or len(self.senses) != matrix.rows:
            raise InputError("matrix, rhs and senses disagree on the row count")
        for s in self.senses:
            if s not in SENSES:
                raise InputError(f"unknown constraint sense {s!r}")
        for lo, hi in self.bounds:
            if lo is not None and hi is not None and lo > hi:
                raise InputError("empty variable bound")

    @property
    def num_vars(self):
        return len(self.objective)

    def is_feasible(self, x):
        """Exact check of every constraint and bound at ``x``."""
        for (lo, hi), v in zip(self.bounds, x):
            if (lo is not None and v < lo) or (hi is not None and v > hi):
                return False
        for row, s, b in zip(self.matrix.entries, self.senses, self.rhs):
            lhs = sum((a * v for a, v in zip(row, x) if a), Fraction(0))
            if (s == "=" and lhs != b) or (s == "<=" and lhs > b) or (s == ">=" and lhs < b):
                return False
        return True


class LpResult(NamedTuple):
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None
    witness: tuple | None


def _standard_form(p):
    """Rewrite with nonnegative variables and equality rows.

    Returns ``(columns, offsets, rows, rhs)`` where ``columns[k] = (j, sign)``
    maps standard variable ``k`` back to original variable ``j``.
    """
    columns = []
    offsets = []
    extra = []  # (std column, upper bound) rows from doubly bounded variables
    for j, (lo, hi) in enumerate(p.bounds):
        if lo is not None:
            offsets.append(lo)
            columns.append((j, 1))
            if hi is not None:
                extra.append((len(columns) - 1, hi - lo))
        elif hi is not None:
            offsets.append(hi)
            columns.append((j, -1))
        else:
            offsets.append(Fraction(0))
            columns.append((j, 1))
            columns.append((j, -1))
    nstruct = len(columns)
    nslack = sum(s != "=" for s in p.senses) + len(extra)
    width = nstruct + nslack
    rows, rhs = [], []
    slack = nstruct
    for row, s, b in zip(p.matrix.entries, p.senses, p.rhs):
        out = [Fraction(0)] * width
        for k, (j, sign) in enumerate(columns):
            out[k] = sign * row[j]
        shift = sum((a * o for a, o in zip(row, offsets) if a), Fraction(0))
        if s != "=":
            out[slack] = Fraction(1 if s == "<=" else -1)
            slack += 1
        rows.append(out)
        rhs.append(b - shift)
    for k, ub in extra:
        out = [Fraction(0)] * width
        out[k] = Fraction(1)
        out[slack] = Fraction(1)
        slack += 1
        rows.append(out)
        rhs.append(ub)
    return columns, offsets, rows, rhs


def _integerize(coeffs, b):
    den = lcm(b.denominator, *(c.denominator for c in coeffs))
    ints = [c.numerator * (den // c.denominator) for c in coeffs]
    return ints, b.numerator * (den // b.denominator)


class _Tableau:
    def __init__(self, rows, basis, ncols):
        self.rows = rows  # constraint rows followed by the objective row
        self.basis = basis
        self.ncols = ncols  # columns eligible to enter
        self.pivots = 0

    @property
    def obj(self):
        return self.rows[-1]

    def run(self):
        """Minimize; returns "optimal" or "unbounded"."""
        rows, basis = self.rows, self.basis
        m = len(rows) - 1
        while True:
            obj = rows[-1]
            enter = next((j for j in range(self.ncols) if obj[j] > 0), None)
            if enter is None:
                return "optimal"
            leave = -1
            for i in range(m):
                a = rows[i][enter]
                if a <= 0:
                    continue
                if leave < 0:
                    leave = i
                    continue
                b, lb, la = rows[i][-1], rows[leave][-1], rows[leave][enter]
                lhs, rhs = b * la, lb * a
                if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                    leave = i
            if leave < 0:
                return "unbounded"
            eliminate(rows, leave, enter)
            basis[leave] = enter
            self.pivots += 1


def lp_solve(p, direction="min"):
    """Solve ``p`` exactly; returns ``LpResult(status, value, witness)``."""
    if direction not in ("min", "max"):
        raise InputError("direction must be 'min' or 'max'")
    columns, offsets, srows, srhs = _standard_form(p)
    n = len(srows[0]) if srows else len(columns)
    m = len(srows)

    # phase 1: one artificial per row, minimize their sum
    rows = []
    for k in range(m):
        coeffs, b = _integerize(srows[k], srhs[k])
        if b < 0:
            coeffs, b = [-c for c in coeffs], -b
        art = [0] * m
        art[k] = 1
        rows.append(coeffs + art + [0, b])
    obj = [sum(r[j] for r in rows) for j in range(n)] + [0] * m + [1, sum(r[-1] for r in rows)]
    rows.append(obj)
    tab = _Tableau(rows, [n + k for k in range(m)], n)
    tab.run()
    if tab.obj[-1] > 0:
        return LpResult("infeasible", None, None)

    # drive zero-level artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(tab.basis):
        if tab.basis[i] >= n:
            j = next((j for j in range(n) if rows[i][j]), None)
            if j is None:
                del rows[i]
                del tab.basis[i]
                continue
            eliminate(rows, i, j)
            tab.basis[i] = j
        i += 1
    for r in range(len(rows)):
        rows[r] = rows[r][:n] + rows[r][n + m:]

    # phase 2
    sign = 1 if direction == "min" else -1
    cost = [Fraction(0)] * n
    for k, (j, s) in enumerate(columns):
        cost[k] = sign * s * p.objective[j]
    den = lcm(*(c.denominator for c in cost)) if cost else 1
    rows[-1] = [-(c.numerator * (den // c.denominator)) for c in cost] + [den, 0]
    for i, b in enumerate(tab.basis):
        if rows[-1][b]:
            eliminate(rows, i, b)
    if tab.run() == "unbounded":
        return LpResult("unbounded", None, None)

    std = [Fraction(0)] * n
    for i, b in enumerate(tab.basis):
        std[b] = Fraction(rows[i][-1], rows[i][b])
    x = list(offsets)
    for k, (j, s) in enumerate(columns):
        if std[k]:
            x[j] += s * std[k]
    x = tuple(x)
    value = sum((c * v for c, v in zip(p.objective, x) if c), Fraction(0))
    tableau_value = sign * Fraction(rows[-1][-1], rows[-1][-2])
    objective_shift = sum((c * o for c, o in zip(p.objective, offsets) if c), Fraction(0))
    if value != tableau_value + objective_shift or not p.is_feasible(x):
        raise ConsistencyError("simplex witness disagrees with its tableau")
    return LpResult("optimal", value, x)
