"""Backend agreement: the compiled kernels must match the pure ones exactly."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest

from momsos import _kernels
from momsos._kernels import pure

compiled = pytest.importorskip(
    "momsos._kernels._speedups", reason="compiled backend not built"
)

BACKENDS = (pure, compiled)


def _rand_fraction(rng, span=40, den=16):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def _rand_poly(rng, max_len=9):
    coeffs = [_rand_fraction(rng) for _ in range(rng.randint(0, max_len))]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _rand_matrix(rng, n):
    return [[_rand_fraction(rng) for _ in range(n)] for _ in range(n)]


def test_active_backend_is_consistent():
    assert _kernels.BACKEND in ("pure", "compiled")
    assert _kernels.active_backend() == _kernels.BACKEND


def test_poly_mul_agreement():
    rng = random.Random(101)
    for _ in range(300):
        a = _rand_poly(rng)
        b = _rand_poly(rng)
        assert pure.poly_mul(a, b) == compiled.poly_mul(a, b)


def test_poly_mul_zero_and_constants():
    one = [Fraction(1)]
    x = [Fraction(0), Fraction(1)]
    for backend in BACKENDS:
        assert backend.poly_mul([], x) == []
        assert backend.poly_mul(x, []) == []
        assert backend.poly_mul(one, x) == x
        # (1+x)(1-x) = 1 - x^2
        got = backend.poly_mul([Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)])
        assert got == [Fraction(1), Fraction(0), Fraction(-1)]


def test_poly_divmod_agreement_and_reconstruction():
    rng = random.Random(202)
    for _ in range(300):
        num = _rand_poly(rng)
        den = _rand_poly(rng, max_len=5)
        if not den:
            den = [Fraction(1), Fraction(2)]
        q1, r1 = pure.poly_divmod(num, den)
        q2, r2 = compiled.poly_divmod(num, den)
        assert q1 == q2
        assert r1 == r2
        # num = q*den + r and deg r < deg den
        recon = pure.poly_mul(q1, den)
        width = max(len(recon), len(r1), len(num))
        full = [Fraction(0)] * width
        for i, c in enumerate(recon):
            full[i] += c
        for i, c in enumerate(r1):
            full[i] += c
        while full and not full[-1]:
            full.pop()
        assert full == num
        assert len(r1) < len(den)


def test_poly_divmod_by_zero_raises():
    for backend in BACKENDS:
        with pytest.raises(ZeroDivisionError):
            backend.poly_divmod([Fraction(1)], [])


def test_poly_divmod_by_constant():
    num = [Fraction(3), Fraction(-6), Fraction(9)]
    for backend in BACKENDS:
        q, r = backend.poly_divmod(num, [Fraction(3)])
        assert q == [Fraction(1), Fraction(-2), Fraction(3)]
        assert r == []


def test_mat_mul_agreement():
    rng = random.Random(303)
    for _ in range(80):
        n = rng.randint(1, 7)
        a = _rand_matrix(rng, n)
        b = _rand_matrix(rng, n)
        assert pure.mat_mul(a, b) == compiled.mat_mul(a, b)


def test_mat_inv_agreement_and_roundtrip():
    rng = random.Random(404)
    seen_singular = 0
    for _ in range(80):
        n = rng.randint(1, 6)
        a = _rand_matrix(rng, n)
        inv1 = pure.mat_inv(a)
        inv2 = compiled.mat_inv(a)
        assert inv1 == inv2
        if inv1 is None:
            seen_singular += 1
            continue
        prod = pure.mat_mul(a, inv1)
        eye = [
            [Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)
        ]
        assert prod == eye
    # random dense rational matrices are almost never singular; force one
    singular = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    for backend in BACKENDS:
        assert backend.mat_inv(singular) is None


def test_sym_eliminate_agreement():
    rng = random.Random(505)
    for _ in range(120):
        n = rng.randint(1, 7)
        a = _rand_matrix(rng, n)
        sym = [[a[i][j] + a[j][i] for j in range(n)] for i in range(n)]
        out1 = pure.sym_eliminate(sym)
        out2 = compiled.sym_eliminate(sym)
        assert out1 == out2


def test_sym_eliminate_status_constants_match():
    for name in ("ELIM_COMPLETE", "ELIM_NEGATIVE_PIVOT", "ELIM_MIXED_ZERO_PIVOT"):
        assert getattr(pure, name) == getattr(compiled, name)
        assert getattr(_kernels, name) == getattr(pure, name)


def test_sym_eliminate_identity_and_negative():
    eye = [
        [Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(1)],
    ]
    neg = [
        [Fraction(-1), Fraction(0)],
        [Fraction(0), Fraction(1)],
    ]
    mixed = [
        [Fraction(0), Fraction(2)],
        [Fraction(2), Fraction(0)],
    ]
    for backend in BACKENDS:
        work, status, row, col = backend.sym_eliminate(eye)
        assert status == backend.ELIM_COMPLETE and (row, col) == (-1, -1)
        assert work[0][0] == 1 and work[1][1] == 1
        _, status, row, col = backend.sym_eliminate(neg)
        assert status == backend.ELIM_NEGATIVE_PIVOT and row == 0
        _, status, row, col = backend.sym_eliminate(mixed)
        assert status == backend.ELIM_MIXED_ZERO_PIVOT and (row, col) == (0, 1)


def test_compiled_outputs_are_plain_fractions():
    out = compiled.poly_mul([Fraction(1, 3), Fraction(2)], [Fraction(3), Fraction(1, 7)])
    assert all(type(c) is Fraction for c in out)
    assert out == [Fraction(1), Fraction(127, 21), Fraction(2, 7)]
    # canonical form survives the fast constructor
    assert all(c.denominator > 0 for c in out)


def test_big_integer_coefficients_agree():
    # exercise multi-digit limbs well past machine word size
    big = Fraction(10**40 + 7, 3**25)
    a = [big, -big, Fraction(1)]
    b = [Fraction(1, big.numerator), big]
    assert pure.poly_mul(a, b) == compiled.poly_mul(a, b)
    q1, r1 = pure.poly_divmod(a, b)
    q2, r2 = compiled.poly_divmod(a, b)
    assert (q1, r1) == (q2, r2)
