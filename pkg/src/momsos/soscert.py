"""Sum-of-squares side of the order-r relaxation of

    minimize 1 - x^2   subject to   (1 - x^2)^3 >= 0.

For every r >= 3 the optimal value of the degree-2r relaxation is
epsilon_r = -1/(r(r-2)), certified by the pure-square identity

    r(r-2)(1-x^2) + 1 = A_r(x)^2 + 4 (1-x^2)^3 B_r(x)^2

with A_r = ((r-2) T_r - r T_{r-2})/2 and B_r the parameter-2 Gegenbauer
polynomial of degree r-3.  Dividing through by r(r-2) gives the
feasible certificate f - epsilon = p + g q with p = A_r^2/(r(r-2)) and
q = 4 B_r^2/(r(r-2)), single squares scaled by a positive rational.

The verify_* functions re-derive each supporting identity from scratch
in exact arithmetic and compare polynomials coefficient by coefficient.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IdentityViolationError, OrderTooSmallError
from .exactnum import Polynomial
from .orthopoly import chebyshev_t, chebyshev_u, gegenbauer_p2, jacobi

F_POLY = Polynomial((1, 0, -1))  # f(x) = 1 - x^2
G_POLY = F_POLY ** 3             # g(x) = (1 - x^2)^3

_MINUS_THREE_HALVES = Fraction(-3, 2)


def _require_order(r: int):
    if not isinstance(r, int) or r < 3:
        raise OrderTooSmallError(f"relaxation order must be an integer >= 3, got {r!r}")


def build_a(r: int) -> Polynomial:
    """A_r = ((r-2) T_r - r T_{r-2}) / 2; degree r, A_r(1) = -1."""
    _require_order(r)
    return Fraction(r - 2, 2) * chebyshev_t(r) - Fraction(r, 2) * chebyshev_t(r - 2)


def build_b(r: int) -> Polynomial:
    """B_r = P_{r-3}^{(2)}, the parameter-2 Gegenbauer polynomial."""
    _require_order(r)
    return gegenbauer_p2(r - 3)


@dataclass(frozen=True)
class Certificate:
    """The tuple (epsilon, A_r, B_r) plus the derived squares p and q.

    p and q are kept in factored form (a single square each, times a
    positive rational) and expanded on demand, preserving the rank-one
    Gram structure of the certificate.
    """

    order: int
    epsilon: Fraction
    a_poly: Polynomial
    b_poly: Polynomial

    @property
    def p_poly(self) -> Polynomial:
        """p = A_r^2 / (r(r-2)), an SOS of degree 2r."""
        r = self.order
        return self.a_poly * self.a_poly * Fraction(1, r * (r - 2))

    @property
    def q_poly(self) -> Polynomial:
        """q = 4 B_r^2 / (r(r-2)), the SOS multiplier of g."""
        r = self.order
        return self.b_poly * self.b_poly * Fraction(4, r * (r - 2))


def build_certificate(r: int) -> Certificate:
    """Assemble (epsilon, A_r, B_r, p, q) and assert exact feasibility."""
    _require_order(r)
    epsilon = Fraction(-1, r * (r - 2))
    cert = Certificate(order=r, epsilon=epsilon, a_poly=build_a(r), b_poly=build_b(r))
    if cert.a_poly.degree != r or cert.b_poly.degree != r - 3:
        raise IdentityViolationError("certificate degrees off; construction bug")
    residual = F_POLY - epsilon - cert.p_poly - G_POLY * cert.q_poly
    if not residual.is_zero:
        raise IdentityViolationError("f - epsilon != p + g q; construction bug")
    return cert


def verify_identity(r: int) -> bool:
    """r(r-2)(1-x^2) + 1 = A_r^2 + 4 (1-x^2)^3 B_r^2, fully expanded."""
    _require_order(r)
    a = build_a(r)
    b = build_b(r)
    lhs = r * (r - 2) * F_POLY + 1
    rhs = a * a + 4 * (G_POLY * (b * b))
    return lhs == rhs


def verify_archimedean() -> bool:
    """(x^3-2x)^2 + (x^2-1)^2 + (1-x^2)^3 = 2 - x^2."""
    s0 = Polynomial((0, -2, 0, 1))
    s1 = Polynomial((-1, 0, 1))
    lhs = s0 * s0 + s1 * s1 + G_POLY
    return lhs == Polynomial((2, 0, -1))


def verify_derivative_identity(r: int) -> bool:
    """d/dx A_r = r(r-2) T_{r-1}."""
    _require_order(r)
    return build_a(r).derivative() == r * (r - 2) * chebyshev_t(r - 1)


def verify_tu_decompositions(r: int) -> bool:
    """A_r = -(x T_{r-1} + (r-1)(1-x^2) U_{r-2})
    and 2(1-x^2) B_r = x U_{r-2} - (r-1) T_{r-1}."""
    _require_order(r)
    x = Polynomial((0, 1))
    t = chebyshev_t(r - 1)
    u = chebyshev_u(r - 2)
    a_ok = build_a(r) == -(x * t + (r - 1) * (F_POLY * u))
    b_ok = 2 * (F_POLY * build_b(r)) == x * u - (r - 1) * t
    return a_ok and b_ok


def verify_jacobi_proportionality(r: int) -> bool:
    """monic(A_r) = monic(P_r^(-3/2,-3/2))."""
    _require_order(r)
    return build_a(r).monic() == jacobi(r, _MINUS_THREE_HALVES, _MINUS_THREE_HALVES).monic()
