"""Pure-Python fraction-free pivoting kernels.

Rows are Python lists of ints.  A row stands for the linear relation it
encodes, so any positive rescaling leaves it unchanged; the kernels rely on
that and keep every row primitive (content 1) to stop coefficient growth.
"""

from math import gcd


def reduce_row(row):
    """Divide ``row`` in place by the gcd of its entries."""
    g = gcd(*row)
    if g > 1:
        for j in range(len(row)):
            row[j] //= g
    return row


def eliminate(rows, pr, pc):
    """Pivot on ``rows[pr][pc]``, clearing column ``pc`` in every other row.

    The pivot row is made to have a positive pivot.  Every other row ``r``
    becomes ``p*r - r[pc]*pivot_row`` with ``p > 0``, so the sign of any entry
    in a column where the pivot row is zero is preserved.
    """
    prow = rows[pr]
    p = prow[pc]
    if p == 0:
        raise ZeroDivisionError("zero pivot")
    if p < 0:
        prow = [-x for x in prow]
        p = -p
    reduce_row(prow)
    rows[pr] = prow
    p = prow[pc]
    support = [j for j, x in enumerate(prow) if x]
    for i, row in enumerate(rows):
        if i == pr:
            continue
        a = row[pc]
        if not a:
            continue
        if p != 1:
            row = [x * p for x in row]
        for j in support:
            row[j] -= a * prow[j]
        rows[i] = reduce_row(row)
    return rows


def find_pivot_row(rows, col, start):
    for i in range(start, len(rows)):
        if rows[i][col]:
            return i
    return -1
