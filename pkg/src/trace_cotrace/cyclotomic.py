"""Exact arithmetic in the cyclotomic field Q(zeta_p) for prime p.

Numbers are stored on the power basis {1, zeta, ..., zeta^(p-2)} as a
tuple of p - 1 exact rationals, where zeta = exp(2*pi*i/p).  Products are
reduced with zeta^p = 1 followed by the minimal-polynomial fold
zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).  Keeping the constant
coordinate in the basis makes rationality tests a plain slice check.

For p = 2 the field degenerates to Q: vectors have length 1 and zeta
plays the role of -1 (it never appears in a reduced representation).

Everything here is exact; floating point enters only through
:meth:`CycloNum.embed_complex`.  Rational coefficients are cleared to a
common denominator before convolving, so bulk multiplication runs on
plain integers with one Fraction normalization per output coordinate.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Sequence

from .errors import (
    BadAutomorphismError,
    ConductorMismatchError,
    NotRationalError,
    ZeroInverseError,
)
from .prime_field import is_prime

__all__ = ["CycloNum", "zeta_pow"]

Rational = int | Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _clear_denominators(coeffs: Sequence[Fraction]) -> tuple[int, list[int]]:
    den = math.lcm(*(c.denominator for c in coeffs))
    return den, [c.numerator * (den // c.denominator) for c in coeffs]


class CycloNum:
    """Element of Q(zeta_p) on the power basis, with exact rational coordinates."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[Rational]):
        if not is_prime(p):
            raise ValueError(f"conductor {p} is not prime")
        if len(coeffs) != p - 1:
            raise ValueError(f"need exactly {p - 1} coefficients for conductor {p}")
        self.p = p
        self.coeffs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, value: Rational, p: int) -> CycloNum:
        coeffs = [Fraction(value)] + [_ZERO] * (p - 2)
        return cls(p, coeffs)

    @classmethod
    def zero(cls, p: int) -> CycloNum:
        return cls.from_rational(0, p)

    @classmethod
    def one(cls, p: int) -> CycloNum:
        return cls.from_rational(1, p)

    @classmethod
    def from_exponent_counts(cls, counts: Sequence[Rational], p: int) -> CycloNum:
        """Reduce sum_k counts[k] * zeta^k, counts indexed by k = 0..p-1."""
        if len(counts) != p:
            raise ValueError(f"need exactly {p} exponent weights")
        last = Fraction(counts[p - 1])
        return cls(p, [Fraction(c) - last for c in counts[: p - 1]])

    # -- predicates and conversions ------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        """The value as an exact rational; error if zeta genuinely occurs."""
        if not self.is_rational():
            raise NotRationalError(f"{self} has nonzero zeta-coefficients")
        return self.coeffs[0]

    def embed_complex(self) -> complex:
        """Numerical value under zeta -> exp(2*pi*i/p)."""
        acc = complex(0.0)
        for e, c in enumerate(self.coeffs):
            if c:
                acc += float(c) * cmath.exp(2j * cmath.pi * e / self.p)
        return acc

    # -- ring structure -------------------------------------------------

    def _coerce(self, other: CycloNum | Rational) -> CycloNum:
        if isinstance(other, CycloNum):
            if other.p != self.p:
                raise ConductorMismatchError(
                    f"conductor {other.p} does not match {self.p}"
                )
            return other
        return CycloNum.from_rational(other, self.p)

    def __add__(self, other: CycloNum | Rational) -> CycloNum:
        other = self._coerce(other)
        return CycloNum(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: CycloNum | Rational) -> CycloNum:
        other = self._coerce(other)
        return CycloNum(self.p, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other: Rational) -> CycloNum:
        return self._coerce(other) - self

    def __neg__(self) -> CycloNum:
        return CycloNum(self.p, [-c for c in self.coeffs])

    def __mul__(self, other: CycloNum | Rational) -> CycloNum:
        if not isinstance(other, CycloNum):
            f = Fraction(other)
            return CycloNum(self.p, [c * f for c in self.coeffs])
        if other.p != self.p:
            raise ConductorMismatchError(f"conductor {other.p} does not match {self.p}")
        p = self.p
        da, a = _clear_denominators(self.coeffs)
        db, b = _clear_denominators(other.coeffs)
        den = da * db
        return CycloNum(p, [Fraction(c, den) for c in _int_mul(a, b, p)])

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, e: int) -> CycloNum:
        if e < 0:
            return self.invert() ** (-e)
        result = CycloNum.one(self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def invert(self) -> CycloNum:
        """Inverse through the field norm: 1/a = (prod of the conjugates
        sigma_k(a), k = 2..p-1) divided by the rational N(a).

        Clearing denominators first keeps the conjugate product in pure
        integer arithmetic; the single rational division happens at the
        end.  Equivalent to the extended Euclidean route against the
        minimal polynomial, but much cheaper at large conductors.
        """
        if self.is_zero():
            raise ZeroInverseError("0 is not invertible")
        p = self.p
        den, nums = _clear_denominators(self.coeffs)
        conj_prod = [1] + [0] * (p - 2)
        for k in range(2, p):
            conj_prod = _int_mul(conj_prod, _int_galois(nums, k, p), p)
        norm_vec = _int_mul(nums, conj_prod, p)
        if any(norm_vec[1:]):
            raise AssertionError("norm of a cyclotomic number must be rational")
        norm = norm_vec[0]
        return CycloNum(p, [Fraction(den * c, norm) for c in conj_prod])

    def galois(self, k: int) -> CycloNum:
        """Image under the automorphism zeta -> zeta^k, gcd(k, p) = 1."""
        if k % self.p == 0:
            raise BadAutomorphismError(f"zeta -> zeta^{k} is not an automorphism for p={self.p}")
        acc = [_ZERO] * self.p
        for e, c in enumerate(self.coeffs):
            acc[(e * k) % self.p] += c
        last = acc[self.p - 1]
        return CycloNum(self.p, [c - last for c in acc[: self.p - 1]])

    def is_real(self) -> bool:
        """Fixed by complex conjugation zeta -> zeta^(p-1)."""
        return self.galois(self.p - 1) == self

    # -- housekeeping ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return (
            isinstance(other, CycloNum)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __str__(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                sign = "-" if c < 0 else ("+" if terms else "")
                power = "z" if e == 1 else f"z^{e}"
                terms.append(f"{sign}{mag}{power}" if sign != "+" else f"+ {mag}{power}")
        return " ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"CycloNum(p={self.p}, {self!s})"


def zeta_pow(k: int, p: int) -> CycloNum:
    """Exact zeta_p^k; exponents at p-1 fold through the minimal polynomial."""
    k %= p
    if k < p - 1:
        coeffs = [_ZERO] * (p - 1)
        coeffs[k] = _ONE
        return CycloNum(p, coeffs)
    return CycloNum(p, [-_ONE] * (p - 1))


# ---------------------------------------------------------------------------
# integer-vector kernels shared by multiplication and inversion: reduced
# coefficient vectors of length p - 1 with plain int entries


def _int_mul(a: list[int], b: list[int], p: int) -> list[int]:
    acc = [0] * p
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    acc[(i + j) % p] += x * y
    last = acc[p - 1]
    return [c - last for c in acc[: p - 1]]


def _int_galois(a: list[int], k: int, p: int) -> list[int]:
    acc = [0] * p
    for e, c in enumerate(a):
        if c:
            acc[(e * k) % p] += c
    last = acc[p - 1]
    return [c - last for c in acc[: p - 1]]
