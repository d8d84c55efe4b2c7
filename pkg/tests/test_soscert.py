"""Certificate construction and the supporting polynomial identities."""
from __future__ import annotations

from fractions import Fraction

import pytest

from momsos import soscert
from momsos.errors import IdentityViolationError, OrderTooSmallError
from momsos.exactnum import Polynomial, poly_from_ints
from momsos.soscert import (
    F_POLY,
    G_POLY,
    build_a,
    build_b,
    build_certificate,
    verify_archimedean,
    verify_derivative_identity,
    verify_identity,
    verify_jacobi_proportionality,
    verify_tu_decompositions,
)

F = Fraction

# published coefficient tables, low degree first
A_TABLE = {
    3: poly_from_ints(0, -3, 0, 2),
    4: poly_from_ints(3, 0, -12, 0, 8),
    5: poly_from_ints(0, 15, 0, -40, 0, 24),
    6: poly_from_ints(-5, 0, 60, 0, -120, 0, 64),
    7: poly_from_ints(0, -35, 0, 210, 0, -336, 0, 160),
    8: poly_from_ints(7, 0, -168, 0, 672, 0, -896, 0, 384),
}
B_TABLE = {
    3: poly_from_ints(1),
    4: poly_from_ints(0, 4),
    5: poly_from_ints(-2, 0, 12),
    6: poly_from_ints(0, -12, 0, 32),
    7: poly_from_ints(3, 0, -48, 0, 80),
    8: poly_from_ints(0, 24, 0, -160, 0, 192),
}


def test_problem_polynomials():
    assert F_POLY == poly_from_ints(1, 0, -1)
    assert G_POLY == poly_from_ints(1, 0, -3, 0, 3, 0, -1)


@pytest.mark.parametrize("r", sorted(A_TABLE))
def test_golden_a_table(r):
    assert build_a(r) == A_TABLE[r]


@pytest.mark.parametrize("r", sorted(B_TABLE))
def test_golden_b_table(r):
    assert build_b(r) == B_TABLE[r]


@pytest.mark.parametrize("r", range(3, 41))
def test_pure_square_identity(r):
    assert verify_identity(r)


@pytest.mark.parametrize("r", range(3, 26))
def test_certificate_invariants(r):
    cert = build_certificate(r)
    scale = r * (r - 2)
    assert cert.order == r
    assert cert.epsilon == F(-1, scale)
    assert cert.a_poly.degree == r
    assert cert.b_poly.degree == r - 3
    assert cert.p_poly.degree == 2 * r
    assert cert.q_poly.degree == 2 * (r - 3)
    # f - epsilon = p + g q in Q[x]
    assert F_POLY - cert.epsilon == cert.p_poly + G_POLY * cert.q_poly
    # boundary values pin the certificate slack at x = +-1
    assert cert.a_poly(1) == -1
    assert cert.a_poly(-1) == (-1) ** (r + 1)
    assert cert.p_poly(1) == -cert.epsilon
    assert cert.p_poly(-1) == -cert.epsilon


def test_identity_check_detects_tampering(monkeypatch):
    """Guard against a vacuous verifier: a wrong B_r must be caught."""
    monkeypatch.setattr(soscert, "build_b", lambda r: build_b(r) + 1)
    with pytest.raises(IdentityViolationError):
        build_certificate(6)
    assert not verify_identity(6)
    monkeypatch.setattr(soscert, "build_b", lambda r: Polynomial(()))
    with pytest.raises(IdentityViolationError):
        build_certificate(6)


def test_orders_below_three_rejected():
    for fn in (
        build_a,
        build_b,
        build_certificate,
        verify_identity,
        verify_derivative_identity,
        verify_tu_decompositions,
        verify_jacobi_proportionality,
    ):
        with pytest.raises(OrderTooSmallError):
            fn(2)
        with pytest.raises(OrderTooSmallError):
            fn(0)
    with pytest.raises(OrderTooSmallError):
        build_a("3")


def test_archimedean_identity():
    assert verify_archimedean()


@pytest.mark.parametrize("r", range(3, 41))
def test_derivative_identity(r):
    assert verify_derivative_identity(r)


@pytest.mark.parametrize("r", range(3, 41))
def test_tu_decompositions(r):
    assert verify_tu_decompositions(r)


@pytest.mark.parametrize("r", range(3, 41))
def test_jacobi_proportionality(r):
    assert verify_jacobi_proportionality(r)


@pytest.mark.parametrize("r", range(3, 16))
def test_a_parity_matches_order(r):
    # A_r is even for even r, odd for odd r
    a = build_a(r)
    for k, c in enumerate(a.coeffs):
        if (k - r) % 2 != 0:
            assert c == 0


def test_epsilon_strictly_increases_to_zero():
    values = [build_certificate(r).epsilon for r in range(3, 30)]
    assert all(v < 0 for v in values)
    assert all(a < b for a, b in zip(values, values[1:]))
    assert values[0] == F(-1, 3)
