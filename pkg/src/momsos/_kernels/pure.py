"""Reference implementations of the arithmetic kernels.

Everything works on plain ``fractions.Fraction`` values: polynomials are
lists of coefficients (low degree first, no trailing zeros, ``[]`` for
the zero polynomial) and matrices are lists of row lists.  The compiled
backend in ``_speedups`` implements the same contract on unpacked
numerator/denominator pairs; the two must agree exactly, value for
value, which the test suite enforces on random inputs.
"""
from __future__ import annotations

from fractions import Fraction

# sym_eliminate outcomes
ELIM_COMPLETE = 0
ELIM_NEGATIVE_PIVOT = 1
ELIM_MIXED_ZERO_PIVOT = 2

_ZERO = Fraction(0)


def poly_mul(a, b):
    """Convolution of two coefficient lists."""
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    while out and not out[-1]:
        out.pop()
    return out


def poly_divmod(num, den):
    """Quotient and remainder of coefficient lists; ``den`` must be nonzero."""
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num)
    dd = len(den) - 1
    lead = den[-1]
    if len(rem) - 1 < dd:
        return [], rem
    quo = [_ZERO] * (len(rem) - dd)
    while rem and len(rem) - 1 >= dd:
        c = rem[-1] / lead
        k = len(rem) - 1 - dd
        quo[k] = c
        for i in range(dd + 1):
            rem[k + i] -= c * den[i]
        # the top coefficient cancels exactly; lower ones may vanish too
        rem.pop()
        while rem and not rem[-1]:
            rem.pop()
    return quo, rem


def mat_mul(a, b):
    """Product of two row-major matrices (inner dimensions must agree)."""
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            acc = _ZERO
            for t in range(k):
                x = ai[t]
                if x:
                    acc += x * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_inv(a):
    """Gauss-Jordan inverse with first-nonzero pivoting.

    Returns None when the matrix is singular.
    """
    n = len(a)
    one = Fraction(1)
    aug = [list(row) + [one if i == j else _ZERO for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if aug[i][col]:
                piv = i
                break
        if piv is None:
            return None
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        d = aug[col][col]
        if d != 1:
            aug[col] = [x / d for x in aug[col]]
        prow = aug[col]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], prow)]
    return [row[n:] for row in aug]


def sym_eliminate(a):
    """Symmetric LDL^T-style elimination without pivot reordering.

    Input is a symmetric square matrix; returns (work, status, row, col).

    ELIM_COMPLETE: the diagonal of ``work`` holds the pivots (all >= 0)
    and entries below the diagonal hold the unit-triangular multipliers
    (zero throughout a zero-pivot column, so L is correct as stored).
    ELIM_NEGATIVE_PIVOT: work[row][row] < 0 is a negative pivot of the
    trailing Schur complement work[row:][row:]; columns before ``row``
    hold valid multipliers.
    ELIM_MIXED_ZERO_PIVOT: work[row][row] == 0 but work[row][col] != 0,
    certifying an indefinite 2x2 block of the Schur complement.

    Entries above the diagonal in eliminated columns are stale and must
    be ignored by callers.
    """
    n = len(a)
    work = [list(row) for row in a]
    for k in range(n):
        d = work[k][k]
        if d > 0:
            col = [work[i][k] for i in range(k + 1, n)]
            for i in range(k + 1, n):
                si = col[i - k - 1]
                if si:
                    m = si / d
                    wi = work[i]
                    for j in range(k + 1, n):
                        cj = col[j - k - 1]
                        if cj:
                            wi[j] -= m * cj
            for i in range(k + 1, n):
                work[i][k] = col[i - k - 1] / d
        elif d == 0:
            wk = work[k]
            for j in range(k + 1, n):
                if wk[j]:
                    return work, ELIM_MIXED_ZERO_PIVOT, k, j
            # zero row: kernel direction; the column below is zero by
            # symmetry, which is exactly the multiplier column we want
        else:
            return work, ELIM_NEGATIVE_PIVOT, k, -1
    return work, ELIM_COMPLETE, -1, -1
