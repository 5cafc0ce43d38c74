"""Fraction-free Gauss-Jordan elimination on integer rows (pure Python).

Same contract as the compiled ``_rref`` module, which is preferred when built.
"""

from math import gcd


def rref_int(rows, ncols):
    """Row reduce a list of integer rows in place.

    Returns ``(rows, pivots)``: the first ``len(pivots)`` rows are the
    nonzero rows of an echelon form in which every pivot column is zero
    outside its pivot row.  Rows are divided by their content, so they are
    primitive but not yet scaled to a leading 1.
    """
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and rows[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        prow = rows[r]
        a = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            b = row[c]
            if b == 0:
                continue
            g = gcd(a, b)
            ka, kb = a // g, b // g
            if i > r:
                # rows below are zero left of c
                new = row[:c]
                new.extend([ka * x - kb * y for x, y in zip(row[c:], prow[c:])])
            else:
                new = [ka * x - kb * y for x, y in zip(row, prow)]
            g = 0
            for x in new:
                if x:
                    g = gcd(g, x)
                    if g == 1:
                        break
            if g > 1:
                new = [x // g for x in new]
            rows[i] = new
        pivots.append(c)
        r += 1
    return rows, pivots
