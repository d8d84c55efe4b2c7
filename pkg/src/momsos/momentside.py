"""Moment side of the order-r relaxation.

The relaxation is solved exactly by the atomic measure

    mu_r = (1/(r(r-2))^2) sum_i delta_{x_i} / (1 - x_i^2)^2

supported on the r roots x_i of A_r (r-2 of them inside (-1,1), one on
each side outside [-1,1]).  The roots are irrational, but every
functional of mu_r needed here is rational: with P_r the even part of
A_r (A_r(x) = P_r(x^2) or x P_r(x^2) by parity) and C_r the companion
matrix of monic(P_r), the even moments are resolvent traces

    y_{2p} = (2/(r(r-2))^2) tr(C_r^p (I - C_r)^{-2}),   p >= 1,

odd moments vanish by symmetry, and for p = 0 the same trace plus an
extra 1 when r is odd (the atom at x = 0, weight 1/(r(r-2))^2) must
come out exactly 1.  Everything downstream -- Hankel moment matrix,
localizing matrix, Riesz functional, residue identities, Sturm root
counts -- is verified in exact arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import _kernels
from .errors import (
    DegreeOverflowError,
    IdentityViolationError,
    ParityViolationError,
    SingularMatrixError,
    SingularShiftError,
)
from .exactnum import (
    Polynomial,
    PsdReport,
    RationalMatrix,
    SturmChain,
    cauchy_root_bound,
    psd_certify,
)
from .soscert import G_POLY, _require_order, build_a, build_b, build_certificate

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class MomentSequence:
    """Moments y_0..y_{2r} of the optimal measure at order r."""

    order: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != 2 * self.order + 1:
            raise ValueError("moment vector must have length 2r + 1")

    @property
    def even_values(self) -> tuple[Fraction, ...]:
        """(y_0, y_2, ..., y_2r)."""
        return self.values[::2]


@dataclass(frozen=True)
class EvenPart:
    """The polynomial P_r with A_r(x) = P_r(x^2) (r even) or x P_r(x^2)."""

    order: int
    p_of_u: Polynomial
    parity: str  # "even" | "odd"


@dataclass(frozen=True)
class OuterRoot:
    """Rational isolating interval for the single root of A_r above 1."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not 1 < self.lo < self.hi:
            raise ValueError("need 1 < lo < hi")


class RootCounts(NamedTuple):
    """Distinct-root counts of A_r in (-1,1), (1,B), (-B,-1)."""

    inside: int
    above: int
    below: int


def even_part(r: int) -> EvenPart:
    """Split A_r by parity and return P_r in the squared variable."""
    _require_order(r)
    a = build_a(r)
    coeffs = a.coeffs
    offset = r % 2  # odd r: A_r = x * P(x^2)
    if any(coeffs[k] for k in range(1 - offset, len(coeffs), 2)):
        raise ParityViolationError(f"A_{r} has mixed parity")
    p = Polynomial(coeffs[offset::2])
    if p.degree != r // 2 or not p(0) or not p(1):
        raise IdentityViolationError(f"even part of A_{r} malformed")
    return EvenPart(order=r, p_of_u=p, parity="odd" if offset else "even")


def companion_matrix(e: EvenPart) -> RationalMatrix:
    """m x m companion matrix of monic(P_r), m = floor(r/2)."""
    monic = e.p_of_u.monic()
    m = monic.degree
    rows = [[_ZERO] * m for _ in range(m)]
    for i in range(1, m):
        rows[i][i - 1] = _ONE
    for i in range(m):
        rows[i][m - 1] = -monic.coeff(i)
    return RationalMatrix(rows)


def _resolvent_traces(r: int) -> tuple[Fraction, Fraction, RationalMatrix, RationalMatrix]:
    """(tr (I-C)^-1, tr (I-C)^-2, C, (I-C)^-2) for the order-r companion."""
    c = companion_matrix(even_part(r))
    shift = RationalMatrix.identity(c.nrows) - c
    try:
        inv = shift.inverse()
    except SingularMatrixError as exc:
        raise SingularShiftError(f"I - C_{r} is singular") from exc
    inv2 = inv @ inv
    return inv.trace(), inv2.trace(), c, inv2


def moments(r: int) -> MomentSequence:
    """Moment vector (y_0, ..., y_{2r}) of the optimal measure."""
    _require_order(r)
    _, trace2, c, inv2 = _resolvent_traces(r)
    scale = Fraction(r * (r - 2)) ** 2
    y0 = (2 * trace2 + (r % 2)) / scale
    if y0 != 1:
        raise IdentityViolationError(f"y_0 = {y0} != 1 at order {r}")
    values = [_ZERO] * (2 * r + 1)
    values[0] = y0
    # incremental powers: after p steps the product holds C^p (I-C)^-2
    power = [list(row) for row in inv2.rows]
    c_rows = [list(row) for row in c.rows]
    for p in range(1, r + 1):
        power = _kernels.mat_mul(c_rows, power)
        tr = sum((power[i][i] for i in range(len(power))), _ZERO)
        values[2 * p] = 2 * tr / scale
    return MomentSequence(order=r, values=tuple(values))


def verify_residue_identities(r: int) -> bool:
    """sum_i 1/(1-x_i^2)^2 = (r(r-2))^2 and sum_i 1/(1-x_i^2) = -r(r-2).

    Both sums run over all r roots of A_r; pairing +-sqrt(u) turns them
    into resolvent traces over the roots of P_r, plus 1 per sum for the
    zero root when r is odd.
    """
    _require_order(r)
    trace1, trace2, _, _ = _resolvent_traces(r)
    odd = r % 2
    first = 2 * trace2 + odd == Fraction(r * (r - 2)) ** 2
    second = 2 * trace1 + odd == Fraction(-r * (r - 2))
    return first and second


def riesz(y: MomentSequence, p: Polynomial) -> Fraction:
    """ell_y(p) = sum_k coeff_k(p) y_k."""
    if not p.is_zero and p.degree > 2 * y.order:
        raise DegreeOverflowError(
            f"degree {p.degree} exceeds available moments (2r = {2 * y.order})"
        )
    return sum((c * y.values[k] for k, c in enumerate(p.coeffs)), _ZERO)


def moment_matrix(y: MomentSequence) -> RationalMatrix:
    """(r+1) x (r+1) Hankel matrix with entry(i,j) = y_{i+j}."""
    r = y.order
    v = y.values
    return RationalMatrix([[v[i + j] for j in range(r + 1)] for i in range(r + 1)])


def localizing_matrix(y: MomentSequence) -> RationalMatrix:
    """(r-2) x (r-2) matrix with entry(i,j) = ell_y((1-x^2)^3 x^{i+j})."""
    r = y.order
    v = y.values
    g = G_POLY.coeffs
    size = r - 2
    entries = [
        sum((g[k] * v[k + s] for k in range(len(g)) if g[k]), _ZERO)
        for s in range(2 * size - 1)
    ]
    return RationalMatrix([[entries[i + j] for j in range(size)] for i in range(size)])


def verify_kernel_structure(r: int) -> bool:
    """M_{r-3}(gy) coeffs(B_r) = 0 and M_r(y) coeffs(A_r) = 0, exactly."""
    _require_order(r)
    y = moments(r)
    a_vec = build_a(r).coeffs
    b_vec = build_b(r).coeffs
    mom = moment_matrix(y)
    loc = localizing_matrix(y)
    b_padded = b_vec + (_ZERO,) * (loc.ncols - len(b_vec))
    return not any(mom.matvec(a_vec)) and not any(loc.matvec(b_padded))


def verify_psd(r: int) -> tuple[PsdReport, PsdReport]:
    """PSD certification of the moment and localizing matrices.

    The moment matrix comes out PSD with rank r and kernel spanned by
    coeffs(A_r); the localizing kernel contains coeffs(B_r).
    """
    _require_order(r)
    y = moments(r)
    return psd_certify(moment_matrix(y)), psd_certify(localizing_matrix(y))


def count_roots(r: int) -> RootCounts:
    """Sturm counts of the roots of A_r in (-1,1), (1,B), (-B,-1).

    B is the Cauchy bound, so the three counts must be (r-2, 1, 1) and
    account for all r roots (which also certifies simplicity).
    """
    _require_order(r)
    a = build_a(r)
    chain = SturmChain(a)
    bound = cauchy_root_bound(a)
    inside = chain.count(-1, 1).count
    above = chain.count(1, bound).count
    below = chain.count(-bound, -1).count
    if inside + above + below != r:
        raise IdentityViolationError(
            f"A_{r} has {inside + above + below} distinct roots in (-B,B), expected {r}"
        )
    return RootCounts(inside=inside, above=above, below=below)


def isolate_outer_root(r: int, width) -> OuterRoot:
    """Shrink a rational bracket around the unique root of A_r in (1, B).

    Bisection keeps A_r(lo) < 0 < A_r(hi); a rational midpoint that
    happens to be a root would be re-bracketed by nudging the midpoint,
    though no A_r has rational roots above 1 in practice.
    """
    _require_order(r)
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    a = build_a(r)
    lo = _ONE
    hi = cauchy_root_bound(a)
    # A_r(1) = -1 and the leading coefficient is positive, so the sign
    # change brackets the single outer root
    while hi - lo > width or lo == 1:
        mid = (lo + hi) / 2
        v = a(mid)
        if v < 0:
            lo = mid
        elif v > 0:
            hi = mid
        else:
            # exact rational root at mid: shrink a strict bracket around it
            step = min(width, hi - lo) / 4
            while not (a(mid - step) < 0 < a(mid + step) and mid - step > 1):
                step /= 2
            lo, hi = mid - step, mid + step
            break
    return OuterRoot(lo=lo, hi=hi)


def verify_moment_monotonicity(r: int) -> bool:
    """y_{2k} <= y_{2(k+1)} and y_{2k} >= 1 + k(y_2 - 1) for 0 <= k <= r."""
    _require_order(r)
    even = moments(r).even_values
    y2 = even[1]
    chain = all(even[k] <= even[k + 1] for k in range(r))
    tangent = all(even[k] >= 1 + k * (y2 - 1) for k in range(r + 1))
    return chain and tangent


def newton_power_sums(e: EvenPart, pmax: int) -> tuple[Fraction, ...]:
    """Power sums s_p = sum_i u_i^p of the roots of monic(P_r).

    Newton's identities on the coefficients; no matrices involved, which
    makes this an independent oracle for the companion-trace path.
    """
    if pmax < 0:
        raise ValueError("pmax must be nonnegative")
    monic = e.p_of_u.monic()
    m = monic.degree
    # monic = u^m + c_{m-1} u^{m-1} + ... + c_0; e_k = (-1)^k c_{m-k}
    elem = [(-1) ** k * monic.coeff(m - k) for k in range(m + 1)]
    sums = [Fraction(m)]
    for p in range(1, pmax + 1):
        if p <= m:
            acc = (-1) ** (p - 1) * p * elem[p]
            for i in range(1, p):
                acc += (-1) ** (i - 1) * elem[i] * sums[p - i]
        else:
            acc = _ZERO
            for i in range(1, m + 1):
                acc += (-1) ** (i - 1) * elem[i] * sums[p - i]
        sums.append(acc)
    return tuple(sums)


def primal_objective(r: int) -> Fraction:
    """ell_y(1 - x^2) = y_0 - y_2 from resolvent traces alone.

    Uses u/(1-u)^2 = 1/(1-u)^2 - 1/(1-u) so no power loop is needed;
    this is what lets the polynomial-depth sweep reach r = 100 quickly.
    """
    _require_order(r)
    trace1, trace2, _, _ = _resolvent_traces(r)
    scale = Fraction(r * (r - 2)) ** 2
    y0 = (2 * trace2 + (r % 2)) / scale
    if y0 != 1:
        raise IdentityViolationError(f"y_0 = {y0} != 1 at order {r}")
    y2 = 2 * (trace2 - trace1) / scale
    return y0 - y2


def complementary_slackness(r: int) -> tuple[Fraction, Fraction]:
    """(ell_y(p), ell_y(g q)) for the order-r certificate; both must be 0."""
    _require_order(r)
    y = moments(r)
    cert = build_certificate(r)
    return riesz(y, cert.p_poly), riesz(y, G_POLY * cert.q_poly)
