# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pure``; identical semantics on lists of Python ints."""

from math import gcd


cpdef list reduce_row(list row):
    cdef Py_ssize_t j, n = len(row)
    cdef object g = gcd(*row)
    if g > 1:
        for j in range(n):
            row[j] = row[j] // g
    return row


cpdef list eliminate(list rows, Py_ssize_t pr, Py_ssize_t pc):
    cdef list prow = rows[pr]
    cdef list row, support
    cdef Py_ssize_t i, j, k, n = len(prow), m = len(rows), ns
    cdef object p = prow[pc], a, x
    if p == 0:
        raise ZeroDivisionError("zero pivot")
    if p < 0:
        prow = [-x for x in prow]
    reduce_row(prow)
    rows[pr] = prow
    p = prow[pc]
    support = [j for j in range(n) if prow[j]]
    ns = len(support)
    for i in range(m):
        if i == pr:
            continue
        row = rows[i]
        a = row[pc]
        if not a:
            continue
        if p != 1:
            row = [x * p for x in row]
        for k in range(ns):
            j = support[k]
            row[j] = row[j] - a * prow[j]
        rows[i] = reduce_row(row)
    return rows


cpdef Py_ssize_t find_pivot_row(list rows, Py_ssize_t col, Py_ssize_t start):
    cdef Py_ssize_t i
    for i in range(start, len(rows)):
        if rows[i][col]:
            return i
    return -1
