"""Classical orthogonal polynomial families, exactly over Q.

Chebyshev polynomials of both kinds and the parameter-2 Gegenbauer
family come straight from their three-term recurrences.  Jacobi
polynomials P_k^(alpha,beta) also use the standard recurrence

    2n(n+a+b)(2n+a+b-2) P_n
        = (2n+a+b-1)[(2n+a+b)(2n+a+b-2) x + a^2-b^2] P_{n-1}
          - 2(n+a-1)(n+b-1)(2n+a+b) P_{n-2}

except at steps where the leading factor 2n(n+a+b)(2n+a+b-2) vanishes,
which happens for parameters with a+b a negative integer -- including
the pair a = b = -3/2 this package cares about, at n = 3 (so that the
recurrence says 0 * P_3 = 0 and determines nothing).  Such steps are
computed from the closed-form coefficient sum

    P_n = sum_nu C(n+a, nu) C(n+b, n-nu) ((x-1)/2)^(n-nu) ((x+1)/2)^nu

which is exact for rational parameters, and the vanishing step's 0 = RHS
consistency is checked on the way through.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateRecurrenceError
from .exactnum import ONE_POLY, Polynomial, X_POLY

_HALF_SHIFT = Polynomial((Fraction(-1, 2), Fraction(1, 2)))  # (x-1)/2


def _require_index(k: int):
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"index must be a nonnegative integer, got {k!r}")


def chebyshev_t(k: int) -> Polynomial:
    """Chebyshev polynomial of the first kind, T_0 = 1, T_1 = x."""
    _require_index(k)
    if k == 0:
        return ONE_POLY
    prev, cur = ONE_POLY, X_POLY
    for _ in range(k - 1):
        prev, cur = cur, 2 * X_POLY * cur - prev
    return cur


def chebyshev_u(k: int) -> Polynomial:
    """Chebyshev polynomial of the second kind, U_0 = 1, U_1 = 2x."""
    _require_index(k)
    if k == 0:
        return ONE_POLY
    prev, cur = ONE_POLY, 2 * X_POLY
    for _ in range(k - 1):
        prev, cur = cur, 2 * X_POLY * cur - prev
    return cur


def gegenbauer_p2(k: int) -> Polynomial:
    """Parameter-2 Gegenbauer polynomial, P_0 = 1, P_1 = 4x."""
    _require_index(k)
    if k == 0:
        return ONE_POLY
    prev, cur = ONE_POLY, 4 * X_POLY
    for n in range(1, k):
        # (n+1) P_{n+1} = 2(n+2) x P_n - (n+3) P_{n-1}
        nxt = (2 * (n + 2) * X_POLY * cur - (n + 3) * prev) * Fraction(1, n + 1)
        prev, cur = cur, nxt
    return cur


def _binomial(z: Fraction, j: int) -> Fraction:
    """Generalized binomial coefficient C(z, j) for integer j >= 0."""
    num = Fraction(1)
    for i in range(j):
        num *= z - i
    den = 1
    for i in range(1, j + 1):
        den *= i
    return num / den


def _jacobi_closed_form(n: int, alpha: Fraction, beta: Fraction) -> Polynomial:
    """P_n^(alpha,beta) from the coefficient sum, for the degenerate steps.

    Works in the shifted variable t = (x-1)/2, where the sum becomes
    sum_nu c_nu t^(n-nu) (t+1)^nu with c_nu = C(n+a, nu) C(n+b, n-nu),
    accumulated Horner-style, then substitutes t back.
    """
    acc = Polynomial(())
    t_plus_1 = Polynomial((1, 1))
    shifted = Polynomial(())  # sum over nu, in t
    power = ONE_POLY  # (t+1)^nu
    # partial_k = t * partial_{k-1} + c_k (t+1)^k keeps everything O(n^2)
    for nu in range(n + 1):
        c = _binomial(n + alpha, nu) * _binomial(n + beta, n - nu)
        shifted = X_POLY * shifted + c * power
        power = power * t_plus_1
    # substitute t = (x-1)/2 by Horner over polynomial coefficients
    for cj in reversed(shifted.coeffs):
        acc = acc * _HALF_SHIFT + Polynomial((cj,))
    return acc


def jacobi(k: int, alpha, beta) -> Polynomial:
    """Jacobi polynomial P_k^(alpha,beta) with rational parameters."""
    _require_index(k)
    a = Fraction(alpha)
    b = Fraction(beta)
    if k == 0:
        return ONE_POLY
    first = Polynomial(((a - b) / 2, (a + b + 2) / 2))
    if k == 1:
        return first
    prev, cur = ONE_POLY, first
    for n in range(2, k + 1):
        lead = 2 * n * (n + a + b) * (2 * n + a + b - 2)
        cx = (2 * n + a + b - 1) * (2 * n + a + b) * (2 * n + a + b - 2)
        c1 = (2 * n + a + b - 1) * (a * a - b * b)
        c2 = 2 * (n + a - 1) * (n + b - 1) * (2 * n + a + b)
        rhs = cx * (X_POLY * cur) + c1 * cur - c2 * prev
        if lead == 0:
            # the recurrence determines nothing here; it must at least
            # be consistent, and the polynomial comes from the sum
            if not rhs.is_zero:
                raise DegenerateRecurrenceError(
                    f"vanishing leading factor at n={n} with nonzero right side"
                )
            prev, cur = cur, _jacobi_closed_form(n, a, b)
        else:
            prev, cur = cur, rhs * (1 / Fraction(lead))
    return cur


def derivative(p: Polynomial) -> Polynomial:
    """Formal derivative (alias for Polynomial.derivative)."""
    return p.derivative()
