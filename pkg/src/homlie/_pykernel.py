"""Pure-Python exact kernels.

Same call signatures as the compiled ``_ckernel`` extension; used whenever the
extension is not built or ``HOMLIE_PURE_PYTHON`` is set.
"""

from fractions import Fraction
from math import gcd


def _integer_row(row):
    den = 1
    for x in row:
        d = x.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    return [x.numerator * (den // x.denominator) for x in row]


def rref(rows, ncols):
    """Reduced row-echelon form of ``rows`` (sequences of Fraction).

    Returns ``(reduced_rows, pivots)`` with zero rows dropped.  Elimination is
    fraction-free on integer rows; Fractions are only formed at the end.
    """
    work = []
    for row in rows:
        ints = _integer_row(row)
        if any(ints):
            work.append(ints)
    nrows = len(work)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and not work[p][c]:
            p += 1
        if p == nrows:
            continue
        if p != r:
            work[p], work[r] = work[r], work[p]
        prow = work[r]
        pv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = work[i]
            f = row[c]
            if not f:
                continue
            g = gcd(pv, f)
            a = pv // g
            b = f // g
            for k in range(ncols):
                if k < c:
                    if a != 1:
                        row[k] *= a
                else:
                    row[k] = a * row[k] - b * prow[k]
            content = gcd(*row)
            if content > 1:
                work[i] = [x // content for x in row]
        pivots.append(c)
        r += 1
    out = []
    for i, c in enumerate(pivots):
        pv = work[i][c]
        out.append([Fraction(x, pv) for x in work[i]])
    return out, pivots


def _lcm_den(values):
    den = 1
    for x in values:
        d = x.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    return den


def matmul(a, b, inner, ncols):
    """Product of row-major Fraction grids.

    Rows of ``a`` and columns of ``b`` are cleared of denominators first, so
    the inner loop runs on integers and each entry is divided once.
    """
    bcols = [[b[k][j] for k in range(inner)] for j in range(ncols)]
    dbs = [_lcm_den(col) for col in bcols]
    bint = [[x.numerator * (dbs[j] // x.denominator) for j, x in enumerate(row)] for row in b]
    out = []
    for arow in a:
        da = _lcm_den(arow)
        aint = [(k, x.numerator * (da // x.denominator)) for k, x in enumerate(arow) if x]
        acc = [0] * ncols
        for k, x in aint:
            brow = bint[k]
            for j in range(ncols):
                y = brow[j]
                if y:
                    acc[j] += x * y
        out.append([Fraction(v, da * dbs[j]) if v else Fraction(0) for j, v in enumerate(acc)])
    return out
