# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fraction-free Gauss-Jordan elimination on integer rows.

Entries stay Python integers (arbitrary precision); only the loop control
and list access are compiled.
"""

from math import gcd


cdef object _content(list row):
    cdef object g = 0
    cdef object x
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    return g


def rref_int(list rows, Py_ssize_t ncols):
    """Row reduce a list of integer rows in place; see ``_rref_py.rref_int``."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef list pivots = []
    cdef list prow, row, new
    cdef object a, b, g, ka, kb
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and (<list>rows[p])[c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        prow = <list>rows[r]
        a = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = <list>rows[i]
            b = row[c]
            if b == 0:
                continue
            g = gcd(a, b)
            ka = a // g
            kb = b // g
            new = [0] * ncols
            if i > r:
                for j in range(c):
                    new[j] = row[j]
                for j in range(c, ncols):
                    new[j] = ka * row[j] - kb * prow[j]
            else:
                for j in range(ncols):
                    new[j] = ka * row[j] - kb * prow[j]
            g = _content(new)
            if g > 1:
                for j in range(ncols):
                    new[j] = new[j] // g
            rows[i] = new
        pivots.append(c)
        r += 1
    return rows, pivots
