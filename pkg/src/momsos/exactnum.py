"""Exact scalar, polynomial, and matrix arithmetic over the rationals.

Scalars are ``fractions.Fraction`` (re-exported as ``Rational``): the
canonical-form invariants (positive denominator, coprime parts, zero as
0/1) hold natively after every operation.  Polynomials are immutable
dense coefficient tuples, low degree first; matrices are immutable row
tuples.  No floating point enters any computation; ``decimal_str`` is a
display-only renderer.

Three exact decision procedures live here:

* ``mat_inverse`` / ``RationalMatrix.inverse``: Gauss-Jordan with
  first-nonzero pivoting.
* ``psd_certify``: positive semidefiniteness of a symmetric matrix by
  LDL^T-style symmetric elimination without pivot reordering.  A PSD
  verdict carries the exact rank and a kernel basis; a refusal carries a
  rational witness v with v^T M v < 0.  The zero-pivot rule is the exact
  Schur-complement fact: a PSD matrix with a zero diagonal pivot must
  have the whole pivot row zero, otherwise a 2x2 indefinite block is
  exhibited.
* ``sturm_count``: distinct real roots in an open interval via a Sturm
  chain with full rational coefficients (no pseudo-remainders).
"""
from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .errors import (
    BoundaryRootError,
    NotSymmetricError,
    SingularMatrixError,
    ZeroPolynomialError,
)

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def decimal_str(q: Fraction, digits: int = 15) -> str:
    """Render ``q`` with ``digits`` significant figures.  Display only."""
    ctx = decimal.Context(prec=digits)
    return str(ctx.divide(decimal.Decimal(q.numerator), decimal.Decimal(q.denominator)))


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected a rational value, got {type(value).__name__}")


class Polynomial:
    """Dense univariate polynomial over Q, immutable.

    Coefficients are stored low degree first with no trailing zeros; the
    zero polynomial stores an empty tuple and its ``degree`` is ``None``
    (a deliberate sentinel, never -1, so arithmetic on it fails loudly).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self):
        """Degree as an int, or None for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        """Coefficient of x^k (zero beyond the stored degree)."""
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else _ZERO

    def __call__(self, x) -> Fraction:
        """Exact Horner evaluation."""
        x = _as_fraction(x)
        acc = _ZERO
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            s = _as_fraction(other)
            return Polynomial([c * s for c in self._coeffs])
        if isinstance(other, Polynomial):
            return Polynomial(_kernels.poly_mul(list(self._coeffs), list(other._coeffs)))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial((1,))
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero:
            raise ZeroPolynomialError("polynomial division by zero")
        q, r = _kernels.poly_divmod(list(self._coeffs), list(other._coeffs))
        return Polynomial(q), Polynomial(r)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def derivative(self) -> "Polynomial":
        """Formal derivative."""
        return Polynomial([k * c for k, c in enumerate(self._coeffs)][1:])

    def monic(self) -> "Polynomial":
        """Divide by the leading coefficient."""
        lc = self.leading_coefficient
        if lc == 1:
            return self
        return Polynomial([c / lc for c in self._coeffs])

    @staticmethod
    def _coerce(other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        return NotImplemented

    def __repr__(self):
        return f"Polynomial({self._coeffs!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                if mag == 1:
                    body = var
                elif mag.denominator == 1:
                    body = f"{mag}{var}"
                else:
                    body = f"({mag}){var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


ZERO_POLY = Polynomial(())
ONE_POLY = Polynomial((1,))
X_POLY = Polynomial((0, 1))


def poly_from_ints(*coeffs) -> Polynomial:
    """Convenience constructor from low-to-high integer coefficients."""
    return Polynomial(coeffs)


class RationalMatrix:
    """Immutable matrix over Q stored as a tuple of row tuples."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rs = tuple(tuple(_as_fraction(c) for c in row) for row in rows)
        if not rs or not rs[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rs[0])
        if any(len(row) != width for row in rs):
            raise ValueError("ragged rows")
        self._rows = rs

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0])

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def __eq__(self, other):
        if isinstance(other, RationalMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"RationalMatrix({[list(r) for r in self._rows]!r})"

    def __add__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        self._require_same_shape(other)
        return RationalMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)]
        )

    def __sub__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        self._require_same_shape(other)
        return RationalMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)]
        )

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        s = _as_fraction(scalar)
        return RationalMatrix([[c * s for c in row] for row in self._rows])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions disagree")
        rows = _kernels.mat_mul([list(r) for r in self._rows], [list(r) for r in other._rows])
        return RationalMatrix(rows)

    def matvec(self, vec) -> tuple[Fraction, ...]:
        v = [_as_fraction(c) for c in vec]
        if len(v) != self.ncols:
            raise ValueError("vector length disagrees with column count")
        return tuple(sum((a * b for a, b in zip(row, v)), _ZERO) for row in self._rows)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self._rows)))

    def trace(self) -> Fraction:
        self._require_square()
        return sum((self._rows[i][i] for i in range(self.nrows)), _ZERO)

    def is_symmetric(self) -> bool:
        if self.nrows != self.ncols:
            return False
        rs = self._rows
        return all(rs[i][j] == rs[j][i] for i in range(self.nrows) for j in range(i))

    def inverse(self) -> "RationalMatrix":
        """Exact inverse; raises SingularMatrixError if det = 0."""
        self._require_square()
        inv = _kernels.mat_inv([list(r) for r in self._rows])
        if inv is None:
            raise SingularMatrixError(f"{self.nrows}x{self.ncols} matrix is singular")
        return RationalMatrix(inv)

    def _require_square(self):
        if self.nrows != self.ncols:
            raise ValueError("matrix is not square")

    def _require_same_shape(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shapes disagree")


def mat_inverse(m: RationalMatrix) -> RationalMatrix:
    """Exact inverse of a square rational matrix."""
    return m.inverse()


@dataclass(frozen=True)
class PsdReport:
    """Outcome of ``psd_certify``.

    For a PSD matrix: ``rank`` plus the kernel dimension equals the
    matrix dimension and every kernel vector is annihilated exactly.
    Otherwise ``witness`` satisfies witness^T M witness < 0 exactly.
    """

    is_psd: bool
    rank: int | None
    kernel_basis: tuple[tuple[Fraction, ...], ...]
    witness: tuple[Fraction, ...] | None


def _solve_unit_upper(work, rhs, ncols=None):
    """Solve L^T v = rhs where L is unit lower triangular with its
    below-diagonal entries stored in the first ``ncols`` columns of
    ``work`` (identity beyond; that is where elimination stopped)."""
    n = len(work)
    if ncols is None:
        ncols = n
    v = list(rhs)
    for i in range(min(ncols, n) - 1, -1, -1):
        s = v[i]
        for j in range(i + 1, n):
            lji = work[j][i]
            if lji:
                s -= lji * v[j]
        v[i] = s
    return v


def psd_certify(m: RationalMatrix) -> PsdReport:
    """Exact PSD decision with rank/kernel on success, witness on failure."""
    if m.nrows != m.ncols or not m.is_symmetric():
        raise NotSymmetricError("psd_certify requires a symmetric matrix")
    n = m.nrows
    rows = [list(r) for r in m.rows]
    work, status, k, j = _kernels.sym_eliminate(rows)

    if status == _kernels.ELIM_COMPLETE:
        rank = sum(1 for i in range(n) if work[i][i] > 0)
        kernel = []
        for i in range(n):
            if not work[i][i]:
                e = [_ZERO] * n
                e[i] = _ONE
                kernel.append(tuple(_solve_unit_upper(work, e)))
        for vec in kernel:
            if any(m.matvec(vec)):
                raise AssertionError("kernel vector not annihilated; elimination bug")
        return PsdReport(True, rank, tuple(kernel), None)

    if status == _kernels.ELIM_NEGATIVE_PIVOT:
        # e_k in eliminated coordinates pulls back to a witness with
        # value exactly the negative pivot
        target = [_ZERO] * n
        target[k] = _ONE
    else:  # ELIM_MIXED_ZERO_PIVOT
        # 2x2 block [[0, c], [c, s]] with c != 0: pick t so the value
        # of t*e_k + e_j is exactly -1
        c = work[k][j]
        s = work[j][j]
        target = [_ZERO] * n
        target[k] = -(1 + s) / (2 * c)
        target[j] = _ONE
    witness = tuple(_solve_unit_upper(work, target, ncols=k))
    value = sum(a * b for a, b in zip(witness, m.matvec(witness)))
    if value >= 0:
        raise AssertionError("witness not negative; elimination bug")
    return PsdReport(False, None, (), witness)


@dataclass(frozen=True)
class RootCount:
    """Distinct-root count of a polynomial over an open interval."""

    lo: Fraction
    hi: Fraction
    count: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("interval endpoints out of order")
        if self.count < 0:
            raise ValueError("negative root count")

    @property
    def interval_open(self) -> tuple[Fraction, Fraction]:
        return (self.lo, self.hi)


class SturmChain:
    """Sturm chain of a nonzero polynomial, reusable across intervals.

    Built once with full rational coefficients; ``count(lo, hi)`` then
    costs only evaluations.  For non-squarefree input the chain counts
    distinct roots, which is the contract throughout.
    """

    def __init__(self, p: Polynomial):
        if p.is_zero:
            raise ZeroPolynomialError("Sturm chain of the zero polynomial")
        chain = [p]
        d = p.derivative()
        if not d.is_zero:
            chain.append(d)
            while True:
                rem = chain[-2] % chain[-1]
                if rem.is_zero:
                    break
                chain.append(-rem)
        self.polynomial = p
        self.chain = tuple(chain)

    def _variations(self, x: Fraction) -> int:
        prev = 0
        var = 0
        for p in self.chain:
            v = p(x)
            sign = (v > 0) - (v < 0)
            if sign:
                if prev and sign != prev:
                    var += 1
                prev = sign
        return var

    def count(self, lo, hi) -> RootCount:
        lo = _as_fraction(lo)
        hi = _as_fraction(hi)
        if not lo < hi:
            raise ValueError("need lo < hi")
        p = self.polynomial
        if not p(lo) or not p(hi):
            raise BoundaryRootError(f"polynomial vanishes at an endpoint of ({lo}, {hi})")
        return RootCount(lo, hi, self._variations(lo) - self._variations(hi))


def sturm_count(p: Polynomial, lo, hi) -> RootCount:
    """Distinct real roots of ``p`` in the open interval (lo, hi)."""
    return SturmChain(p).count(lo, hi)


def cauchy_root_bound(p: Polynomial) -> Fraction:
    """B = 1 + max_k |c_k|/|c_deg|; every real root of p lies in (-B, B)."""
    if p.is_zero:
        raise ZeroPolynomialError("root bound of the zero polynomial")
    if p.degree == 0:
        raise ValueError("root bound needs degree >= 1")
    lead = abs(p.leading_coefficient)
    biggest = max(abs(c) for c in p.coeffs[:-1])
    return 1 + biggest / lead
