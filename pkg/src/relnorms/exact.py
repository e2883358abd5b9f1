"""Exact rational matrices and the row reductions everything else rests on.

Rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  Reductions run fraction-free on integer rows through
the pivoting kernel and only convert back to fractions at the end.
"""

from fractions import Fraction
from math import lcm

from ._kernels import eliminate, find_pivot_row
from .errors import InputError

Q = Fraction


def to_q(x):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {x!r}") from exc
    raise InputError(f"not a rational (use an int or a 'p/q' string): {x!r}")


def q_str(x):
    """Serialize a rational as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class RationalMatrix:
    """Dense immutable matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        data = tuple(tuple(to_q(x) for x in row) for row in entries)
        if cols is None:
            cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != cols:
                raise InputError("ragged matrix")
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", data)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def transpose(self):
        return RationalMatrix([self.column(j) for j in range(self.cols)], self.rows)

    def submatrix(self, rows, cols):
        rows, cols = list(rows), list(cols)
        return RationalMatrix([[self.entries[i][j] for j in cols] for i in rows], len(cols))

    def hstack(self, other):
        if self.rows != other.rows:
            raise InputError("row counts differ")
        return RationalMatrix([a + b for a, b in zip(self.entries, other.entries)],
                              self.cols + other.cols)

    def vstack(self, other):
        if self.cols != other.cols:
            raise InputError("column counts differ")
        return RationalMatrix(self.entries + other.entries, self.cols)

    def apply(self, vector):
        """Matrix-vector product; ``vector`` is any sequence of rationals."""
        if len(vector) != self.cols:
            raise InputError(f"vector of length {len(vector)} for {self.rows}x{self.cols} matrix")
        nz = [(j, v) for j, v in enumerate(vector) if v]
        return tuple(sum((row[j] * v for j, v in nz), Fraction(0)) for row in self.entries)

    def __matmul__(self, other):
        if not isinstance(other, RationalMatrix):
            return self.apply(other)
        if self.cols != other.rows:
            raise InputError("shape mismatch")
        cols = [other.column(j) for j in range(other.cols)]
        return RationalMatrix([[sum((a * b for a, b in zip(row, c) if a), Fraction(0)) for c in cols]
                               for row in self.entries], other.cols)

    def is_zero(self):
        return not any(any(row) for row in self.entries)

    def __eq__(self, other):
        return (isinstance(other, RationalMatrix) and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(q_str(x) for x in row) + "]" for row in self.entries)
        return f"RationalMatrix([{body}], cols={self.cols})"


def _integer_rows(entries):
    out = []
    for row in entries:
        den = lcm(*(x.denominator for x in row)) if row else 1
        out.append([x.numerator * (den // x.denominator) for x in row])
    return out


def _reduce(entries, ncols, stop=None):
    """Fraction-free Gauss-Jordan; returns (integer rows, pivots)."""
    rows = _integer_rows(entries)
    pivots = []
    r = 0
    for c in range(ncols if stop is None else stop):
        if r == len(rows):
            break
        i = find_pivot_row(rows, c, r)
        if i < 0:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        eliminate(rows, r, c)
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m):
    """Reduced row-echelon form: ``(matrix, pivot columns, rank)``."""
    rows, pivots = _reduce(m.entries, m.cols)
    out = []
    for i, row in enumerate(rows):
        if i < len(pivots):
            p = row[pivots[i]]
            out.append([Fraction(x, p) for x in row])
        else:
            out.append([0] * m.cols)
    return RationalMatrix(out, m.cols), tuple(pivots), len(pivots)


def rank(m):
    return len(_reduce(m.entries, m.cols)[1])


def kernel_basis(m):
    """Basis of the null space, one vector per free column of the rref."""
    r, pivots, _ = rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        basis.append(tuple(v))
    return basis


def solve_linear(m, b):
    """Some ``x`` with ``m @ x == b``, or ``None`` when the system is inconsistent."""
    b = [to_q(x) for x in b]
    if len(b) != m.rows:
        raise InputError(f"right-hand side of length {len(b)} for {m.rows} rows")
    aug = [row + (bi,) for row, bi in zip(m.entries, b)]
    rows, pivots = _reduce(aug, m.cols + 1, stop=m.cols)
    x = [Fraction(0)] * m.cols
    for i, row in enumerate(rows):
        if i < len(pivots):
            x[pivots[i]] = Fraction(row[-1], row[pivots[i]])
        elif row[-1]:
            return None
    return tuple(x)


def independent_columns(vectors, preceding=()):
    """Indices of ``vectors`` not in the span of ``preceding`` plus earlier vectors."""
    vectors = list(vectors)
    preceding = list(preceding)
    allv = preceding + vectors
    if not allv:
        return []
    n = len(allv[0])
    cols = RationalMatrix([[v[i] for v in allv] for i in range(n)], len(allv))
    _, pivots, _ = rref(cols)
    k = len(preceding)
    return [p - k for p in pivots if p >= k]
