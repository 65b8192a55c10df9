# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exact kernels; mirrors ``homlie._pykernel`` call for call."""

from fractions import Fraction
from math import gcd


cdef list _integer_row(row):
    cdef object den = 1
    cdef object d
    for x in row:
        d = x.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    return [x.numerator * (den // x.denominator) for x in row]


def rref(rows, Py_ssize_t ncols):
    cdef list work = []
    cdef list ints, prow, row, pivots = [], out = []
    cdef Py_ssize_t nrows, r = 0, c, p, i, k
    cdef object pv, f, g, a, b, content
    for src in rows:
        ints = _integer_row(src)
        if any(ints):
            work.append(ints)
    nrows = len(work)
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and not (<list>work[p])[c]:
            p += 1
        if p == nrows:
            continue
        if p != r:
            work[p], work[r] = work[r], work[p]
        prow = <list>work[r]
        pv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = <list>work[i]
            f = row[c]
            if not f:
                continue
            g = gcd(pv, f)
            a = pv // g
            b = f // g
            if a != 1:
                for k in range(c):
                    row[k] = row[k] * a
            for k in range(c, ncols):
                row[k] = a * row[k] - b * prow[k]
            content = gcd(*row)
            if content > 1:
                work[i] = [x // content for x in row]
        pivots.append(c)
        r += 1
    for i in range(len(pivots)):
        c = pivots[i]
        row = <list>work[i]
        pv = row[c]
        out.append([Fraction(x, pv) for x in row])
    return out, pivots


cdef object _lcm_den(values):
    cdef object den = 1
    cdef object d
    for x in values:
        d = x.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    return den


def matmul(a, b, Py_ssize_t inner, Py_ssize_t ncols):
    cdef list bint = [], dbs = [], out = [], acc, brow, aint, row
    cdef Py_ssize_t k, j, n
    cdef object x, y, da, v
    for j in range(ncols):
        dbs.append(_lcm_den([b[k][j] for k in range(inner)]))
    for k in range(inner):
        row = []
        for j in range(ncols):
            x = b[k][j]
            row.append(x.numerator * ((<object>dbs[j]) // x.denominator))
        bint.append(row)
    for arow in a:
        da = _lcm_den(arow)
        aint = []
        for k in range(inner):
            x = arow[k]
            if x:
                aint.append((k, x.numerator * (da // x.denominator)))
        acc = [0] * ncols
        for k, x in aint:
            brow = <list>bint[k]
            for j in range(ncols):
                y = brow[j]
                if y:
                    acc[j] = acc[j] + x * y
        row = []
        for j in range(ncols):
            v = acc[j]
            row.append(Fraction(v, da * dbs[j]) if v else Fraction(0))
        out.append(row)
    return out
