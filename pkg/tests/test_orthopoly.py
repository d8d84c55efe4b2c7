"""Chebyshev / Gegenbauer / Jacobi family checks.

The recurrence outputs are validated against closed identities (Pell,
derivative relations, parity) rather than stored tables wherever an
identity exists, so a systematic recurrence bug cannot hide.
"""
from __future__ import annotations

from fractions import Fraction

import pytest

from momsos.errors import DegenerateRecurrenceError, MomsosError
from momsos.exactnum import ONE_POLY, X_POLY, Polynomial, poly_from_ints
from momsos.orthopoly import (
    chebyshev_t,
    chebyshev_u,
    derivative,
    gegenbauer_p2,
    jacobi,
)

F = Fraction
HALF = F(1, 2)


def test_chebyshev_t_initial_values():
    assert chebyshev_t(0) == ONE_POLY
    assert chebyshev_t(1) == X_POLY
    assert chebyshev_t(2) == poly_from_ints(-1, 0, 2)
    assert chebyshev_t(3) == poly_from_ints(0, -3, 0, 4)
    assert chebyshev_t(5) == poly_from_ints(0, 5, 0, -20, 0, 16)


def test_chebyshev_u_initial_values():
    assert chebyshev_u(0) == ONE_POLY
    assert chebyshev_u(1) == poly_from_ints(0, 2)
    assert chebyshev_u(2) == poly_from_ints(-1, 0, 4)
    assert chebyshev_u(3) == poly_from_ints(0, -4, 0, 8)


def test_gegenbauer_initial_values():
    assert gegenbauer_p2(0) == ONE_POLY
    assert gegenbauer_p2(1) == poly_from_ints(0, 4)
    assert gegenbauer_p2(2) == poly_from_ints(-2, 0, 12)
    assert gegenbauer_p2(3) == poly_from_ints(0, -12, 0, 32)


def test_negative_index_rejected():
    for fn in (chebyshev_t, chebyshev_u, gegenbauer_p2):
        with pytest.raises(ValueError):
            fn(-1)
    with pytest.raises(ValueError):
        jacobi(-2, F(-3, 2), F(-3, 2))


@pytest.mark.parametrize("k", range(1, 31))
def test_pell_identity(k):
    # T_k^2 - (x^2-1) U_{k-1}^2 = 1
    t = chebyshev_t(k)
    u = chebyshev_u(k - 1)
    lhs = t * t - poly_from_ints(-1, 0, 1) * u * u
    assert lhs == ONE_POLY


@pytest.mark.parametrize("k", range(1, 31))
def test_chebyshev_derivative_relation(k):
    # T_k' = k U_{k-1}
    assert derivative(chebyshev_t(k)) == k * chebyshev_u(k - 1)


@pytest.mark.parametrize("k", range(0, 31))
def test_gegenbauer_is_derivative_of_u(k):
    # U_{k+1}' = 2 P_k^{(2)}
    assert derivative(chebyshev_u(k + 1)) == 2 * gegenbauer_p2(k)


@pytest.mark.parametrize("k", range(0, 20))
def test_parity(k):
    sign = 1 if k % 2 == 0 else -1
    for fn in (chebyshev_t, chebyshev_u, gegenbauer_p2):
        p = fn(k)
        flipped = Polynomial(
            tuple(c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs))
        )
        assert flipped == sign * p if sign == -1 else flipped == p


def test_leading_coefficients():
    for k in range(1, 16):
        assert chebyshev_t(k).leading_coefficient == 2 ** (k - 1)
        assert chebyshev_u(k).leading_coefficient == 2**k
        assert gegenbauer_p2(k).leading_coefficient == (k + 1) * 2**k


def test_chebyshev_composition():
    # T_m(T_n(q)) = T_{mn}(q) pointwise
    points = [F(0), F(1, 3), F(-2, 7), F(5, 4)]
    for m, n in [(2, 3), (3, 2), (4, 2), (2, 5)]:
        tm, tn, tmn = chebyshev_t(m), chebyshev_t(n), chebyshev_t(m * n)
        for q in points:
            assert tm(tn(q)) == tmn(q)


# -------------------------------------------------------------------- jacobi


def test_jacobi_low_order():
    assert jacobi(0, F(7, 3), F(-1, 5)) == ONE_POLY
    assert jacobi(1, 0, 0) == X_POLY  # Legendre P_1
    # P_1^{(a,b)} = (a-b)/2 + (a+b+2)/2 x
    assert jacobi(1, F(1, 2), F(-1, 2)) == Polynomial((HALF, 1))


@pytest.mark.parametrize("k", range(0, 12))
def test_jacobi_matches_chebyshev_normalizations(k):
    """Monic Jacobi at (-1/2,-1/2) and (1/2,1/2) are monic T_k and U_k."""
    if k >= 1:
        assert jacobi(k, -HALF, -HALF).monic() == chebyshev_t(k).monic()
        assert jacobi(k, HALF, HALF).monic() == chebyshev_u(k).monic()
        assert jacobi(k, F(3, 2), F(3, 2)).monic() == gegenbauer_p2(k).monic()


def test_jacobi_degenerate_parameters_degree_collapse():
    # at alpha = beta = -3/2 the degree-2 member collapses to a constant
    p2 = jacobi(2, F(-3, 2), F(-3, 2))
    assert p2 == Polynomial((F(-1, 8),))
    assert p2.degree == 0


def test_jacobi_degenerate_parameters_patched_member():
    # the recurrence coefficient vanishes at k=3 for alpha = beta = -3/2;
    # the closed-form continuation must still match monic(A_3) = x^3 - 3/2 x
    p3 = jacobi(3, F(-3, 2), F(-3, 2))
    assert p3.degree == 3
    assert p3.monic() == Polynomial((0, F(-3, 2), 0, 1))


@pytest.mark.parametrize("k", range(3, 26))
def test_jacobi_degenerate_family_solves_differential_equation(k):
    """(1-x^2) y'' + (b-a-(a+b+2)x) y' + k(k+a+b+1) y = 0 at a=b=-3/2."""
    a = b = F(-3, 2)
    y = jacobi(k, a, b)
    lhs = (
        poly_from_ints(1, 0, -1) * y.derivative().derivative()
        + Polynomial((b - a, -(a + b + 2))) * y.derivative()
        + k * (k + a + b + 1) * y
    )
    assert lhs.is_zero


def test_degenerate_recurrence_error_is_exported():
    # the inconsistency guard; unreachable for genuine Jacobi parameters
    # because the three-term relation is an identity in (alpha, beta)
    assert issubclass(DegenerateRecurrenceError, MomsosError)


def test_derivative_helper():
    assert derivative(poly_from_ints(3, 2, 1)) == poly_from_ints(2, 2)
    assert derivative(ONE_POLY) == Polynomial(())
