# cython: language_level=3
"""Compiled arithmetic kernels.

Same contract as ``momsos._kernels.pure``: coefficient lists and row
lists of ``fractions.Fraction``.  Internally every rational is unpacked
into separate numerator/denominator Python ints so the inner loops skip
Fraction's operator dispatch; results are repacked into canonical
Fractions at the end.  The reduction steps mirror what Fraction itself
does (gcd of the parts that can share factors), so values stay small
and outputs agree with the pure backend exactly.
"""
from fractions import Fraction
from math import gcd

ELIM_COMPLETE = 0
ELIM_NEGATIVE_PIVOT = 1
ELIM_MIXED_ZERO_PIVOT = 2

cdef object _Fraction = Fraction
cdef object _gcd = gcd

def _probe_fast():
    # Slot-assignment shortcut for building already-reduced Fractions;
    # fall back to the ordinary constructor if this interpreter's
    # Fraction does not cooperate.
    try:
        f = Fraction.__new__(Fraction)
        f._numerator = 3
        f._denominator = 2
        return f == _Fraction(3, 2) and str(f) == "3/2"
    except Exception:
        return False

cdef bint _FAST = _probe_fast()


cdef inline object _mk(object n, object d):
    """Canonical Fraction from an already-reduced pair with d > 0."""
    cdef object f
    if _FAST:
        f = Fraction.__new__(Fraction)
        f._numerator = n
        f._denominator = d
        return f
    return _Fraction(n, d)


cdef inline tuple _qadd(object an, object ad, object bn, object bd):
    cdef object g = _gcd(ad, bd)
    cdef object s, t, x, y, g2
    if g == 1:
        return (an * bd + bn * ad, ad * bd)
    s = ad // g
    t = bd // g
    x = an * t + bn * s
    y = s * bd
    g2 = _gcd(x, g)
    if g2 == 1:
        return (x, y)
    return (x // g2, y // g2)


cdef inline tuple _qsub(object an, object ad, object bn, object bd):
    return _qadd(an, ad, -bn, bd)


cdef inline tuple _qmul(object an, object ad, object bn, object bd):
    cdef object g1 = _gcd(an, bd)
    cdef object g2 = _gcd(bn, ad)
    if g1 != 1:
        an = an // g1
        bd = bd // g1
    if g2 != 1:
        bn = bn // g2
        ad = ad // g2
    return (an * bn, ad * bd)


cdef inline tuple _qdiv(object an, object ad, object bn, object bd):
    cdef object g1 = _gcd(an, bn)
    cdef object g2 = _gcd(bd, ad)
    cdef object n, d
    if g1 != 1:
        an = an // g1
        bn = bn // g1
    if g2 != 1:
        bd = bd // g2
        ad = ad // g2
    n = an * bd
    d = ad * bn
    if d < 0:
        n = -n
        d = -d
    return (n, d)


cdef tuple _split(list values):
    """Parallel numerator/denominator lists from a list of rationals."""
    cdef list ns = []
    cdef list ds = []
    cdef object f
    for f in values:
        if type(f) is _Fraction:
            ns.append(f._numerator)
            ds.append(f._denominator)
        elif isinstance(f, int):
            ns.append(f)
            ds.append(1)
        else:
            f = _Fraction(f)
            ns.append(f._numerator)
            ds.append(f._denominator)
    return ns, ds


cdef list _join(list ns, list ds):
    cdef list out = []
    cdef Py_ssize_t i
    for i in range(len(ns)):
        out.append(_mk(ns[i], ds[i]))
    return out


cdef list _join_matrix(list wn, list wd):
    cdef list out = []
    cdef Py_ssize_t i
    for i in range(len(wn)):
        out.append(_join(wn[i], wd[i]))
    return out


def poly_mul(a, b):
    """Convolution of two coefficient lists."""
    cdef Py_ssize_t la = len(a), lb = len(b), i, j, k, lc
    if la == 0 or lb == 0:
        return []
    cdef list an, ad, bn, bd
    an, ad = _split(list(a))
    bn, bd = _split(list(b))
    lc = la + lb - 1
    cdef list cn = [0] * lc
    cdef list cd = [1] * lc
    cdef object ani, adi
    cdef tuple t
    for i in range(la):
        ani = an[i]
        if ani == 0:
            continue
        adi = ad[i]
        for j in range(lb):
            if bn[j] == 0:
                continue
            k = i + j
            t = _qmul(ani, adi, bn[j], bd[j])
            t = _qadd(cn[k], cd[k], t[0], t[1])
            cn[k] = t[0]
            cd[k] = t[1]
    while lc > 0 and cn[lc - 1] == 0:
        lc -= 1
    del cn[lc:]
    del cd[lc:]
    return _join(cn, cd)


def poly_divmod(num, den):
    """Quotient and remainder of coefficient lists; ``den`` nonzero."""
    cdef Py_ssize_t ln = len(num), ld = len(den)
    if ld == 0:
        raise ZeroDivisionError("polynomial division by zero")
    cdef list rn, rd, dn, dd
    rn, rd = _split(list(num))
    dn, dd = _split(list(den))
    cdef Py_ssize_t deg_d = ld - 1
    if ln - 1 < deg_d:
        return [], _join(rn, rd)
    cdef Py_ssize_t lq = ln - deg_d
    cdef list qn = [0] * lq
    cdef list qd = [1] * lq
    cdef object lead_n = dn[deg_d]
    cdef object lead_d = dd[deg_d]
    cdef Py_ssize_t top = ln, k, i
    cdef tuple c, t
    while top - 1 >= deg_d:
        c = _qdiv(rn[top - 1], rd[top - 1], lead_n, lead_d)
        k = top - 1 - deg_d
        qn[k] = c[0]
        qd[k] = c[1]
        for i in range(deg_d):
            if dn[i] != 0:
                t = _qmul(c[0], c[1], dn[i], dd[i])
                t = _qsub(rn[k + i], rd[k + i], t[0], t[1])
                rn[k + i] = t[0]
                rd[k + i] = t[1]
        # the top coefficient cancels exactly
        top -= 1
        while top > 0 and rn[top - 1] == 0:
            top -= 1
    del rn[top:]
    del rd[top:]
    return _join(qn, qd), _join(rn, rd)


def mat_mul(a, b):
    """Product of two row-major matrices."""
    cdef Py_ssize_t n = len(a), kk = len(b), m = len(b[0])
    cdef Py_ssize_t i, j, s
    cdef list an = [], ad = [], bn = [], bd = []
    cdef list pn, pd
    for row in a:
        pn, pd = _split(list(row))
        an.append(pn)
        ad.append(pd)
    for row in b:
        pn, pd = _split(list(row))
        bn.append(pn)
        bd.append(pd)
    cdef list out = []
    cdef list arn, ard, brn, brd, row_n, row_d
    cdef object xn, xd
    cdef tuple t
    for i in range(n):
        arn = an[i]
        ard = ad[i]
        row_n = [0] * m
        row_d = [1] * m
        for s in range(kk):
            xn = arn[s]
            if xn == 0:
                continue
            xd = ard[s]
            brn = bn[s]
            brd = bd[s]
            for j in range(m):
                if brn[j] == 0:
                    continue
                t = _qmul(xn, xd, brn[j], brd[j])
                t = _qadd(row_n[j], row_d[j], t[0], t[1])
                row_n[j] = t[0]
                row_d[j] = t[1]
        out.append(_join(row_n, row_d))
    return out


def mat_inv(a):
    """Gauss-Jordan inverse; returns None when the matrix is singular."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, col, piv
    cdef list aug_n = [], aug_d = []
    cdef list pn, pd
    for i in range(n):
        pn, pd = _split(list(a[i]))
        for j in range(n):
            pn.append(1 if j == i else 0)
            pd.append(1)
        aug_n.append(pn)
        aug_d.append(pd)
    cdef list prn, prd, rrn, rrd
    cdef object dn_, dd_, fn, fd
    cdef tuple t
    for col in range(n):
        piv = -1
        for i in range(col, n):
            if aug_n[i][col] != 0:
                piv = i
                break
        if piv < 0:
            return None
        if piv != col:
            aug_n[col], aug_n[piv] = aug_n[piv], aug_n[col]
            aug_d[col], aug_d[piv] = aug_d[piv], aug_d[col]
        prn = aug_n[col]
        prd = aug_d[col]
        dn_ = prn[col]
        dd_ = prd[col]
        if dn_ != dd_:
            for j in range(2 * n):
                if prn[j] != 0:
                    t = _qdiv(prn[j], prd[j], dn_, dd_)
                    prn[j] = t[0]
                    prd[j] = t[1]
        for i in range(n):
            if i != col and aug_n[i][col] != 0:
                rrn = aug_n[i]
                rrd = aug_d[i]
                fn = rrn[col]
                fd = rrd[col]
                for j in range(col, 2 * n):
                    if prn[j] != 0:
                        t = _qmul(fn, fd, prn[j], prd[j])
                        t = _qsub(rrn[j], rrd[j], t[0], t[1])
                        rrn[j] = t[0]
                        rrd[j] = t[1]
    return [_join(aug_n[i][n:], aug_d[i][n:]) for i in range(n)]


def sym_eliminate(a):
    """Symmetric LDL^T-style elimination; see the pure backend docstring."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, k
    cdef list wn = [], wd = []
    cdef list pn, pd
    for i in range(n):
        pn, pd = _split(list(a[i]))
        wn.append(pn)
        wd.append(pd)
    cdef list coln, cold, rin, rid_, wkn
    cdef object dn_, dd_, sn, sd, cjn
    cdef tuple m, t
    for k in range(n):
        dn_ = wn[k][k]
        dd_ = wd[k][k]
        if dn_ > 0:
            coln = [wn[i][k] for i in range(k + 1, n)]
            cold = [wd[i][k] for i in range(k + 1, n)]
            for i in range(k + 1, n):
                sn = coln[i - k - 1]
                if sn == 0:
                    continue
                sd = cold[i - k - 1]
                m = _qdiv(sn, sd, dn_, dd_)
                rin = wn[i]
                rid_ = wd[i]
                for j in range(k + 1, n):
                    cjn = coln[j - k - 1]
                    if cjn == 0:
                        continue
                    t = _qmul(m[0], m[1], cjn, cold[j - k - 1])
                    t = _qsub(rin[j], rid_[j], t[0], t[1])
                    rin[j] = t[0]
                    rid_[j] = t[1]
            for i in range(k + 1, n):
                sn = coln[i - k - 1]
                if sn == 0:
                    wn[i][k] = 0
                    wd[i][k] = 1
                else:
                    t = _qdiv(sn, cold[i - k - 1], dn_, dd_)
                    wn[i][k] = t[0]
                    wd[i][k] = t[1]
        elif dn_ == 0:
            wkn = wn[k]
            for j in range(k + 1, n):
                if wkn[j] != 0:
                    return _join_matrix(wn, wd), ELIM_MIXED_ZERO_PIVOT, k, j
        else:
            return _join_matrix(wn, wd), ELIM_NEGATIVE_PIVOT, k, -1
    return _join_matrix(wn, wd), ELIM_COMPLETE, -1, -1
