"""Kloosterman sums: exact values over F_p, the Carlitz lift to F_{p^m},
and the verification battery (Lehmer identities, Weil bound, realness).

K(u) = sum over nonzero x in F_p of zeta^(x + u/x) is computed exactly as
a cyclotomic number from the tally of exponents x + u/x.  The lift to
K^(m)(u) for u in the prime field uses Carlitz's identity

    K^(m)(u) = (-1)^(m-1) * 2^(1-m) *
               sum_{2r <= m} C(m, 2r) * K(u)^(m-2r) * (K(u)^2 - 4p)^r

evaluated entirely in Q(zeta_p); the 2^(1-m) factor makes intermediate
values non-integral even though the end results are algebraic integers,
which is why the arithmetic must stay rational-exact.

The brute-force counterpart :func:`kloosterman_direct` sums the defining
series over every nonzero element of F_{p^m} in floating point and is the
independent oracle against which the lift is tested.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cyclotomic import CycloNum, zeta_pow
from .errors import BoundViolationError, NotRealError, ZeroArgumentError
from .ext_field import (
    FieldCtx,
    multiplicative_generator,
    require_enumerable,
    _poly_invmod,
    _poly_mulmod,
    _trim,
)
from .prime_field import is_prime

__all__ = [
    "kloosterman_prime",
    "carlitz_lift",
    "kloosterman_direct",
    "check_weil",
    "check_lehmer",
    "IdentityCheck",
    "LehmerReport",
    "KloostermanProfile",
]


@functools.lru_cache(maxsize=None)
def _exponent_counts(p: int) -> tuple[tuple[int, ...], ...]:
    """counts[u-1][k] = #{x in F_p* : x + u/x = k}, for u = 1..p-1."""
    inverses = [0] + [pow(x, -1, p) for x in range(1, p)]
    table = []
    for u in range(1, p):
        counts = [0] * p
        for x in range(1, p):
            counts[(x + u * inverses[x]) % p] += 1
        table.append(tuple(counts))
    return tuple(table)


def kloosterman_prime(u: int, p: int) -> CycloNum:
    """Exact K(u) = sum_{x in F_p*} zeta^(x + u/x) over the prime field."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    u = int(u) % p
    if u == 0:
        raise ZeroArgumentError("Kloosterman sums are defined for nonzero u")
    return CycloNum.from_exponent_counts(_exponent_counts(p)[u - 1], p)


def carlitz_lift(u: int, m: int, p: int) -> CycloNum:
    """Exact K^(m)(u) for u in F_p*, from K(u) via Carlitz's identity."""
    if m < 1:
        raise ValueError("extension degree must be at least 1")
    k = kloosterman_prime(u, p)
    if m == 1:
        return k
    ksq_minus = k * k - 4 * p
    # powers k^(m-2r) and (k^2-4p)^r, built once each
    k_pows = [CycloNum.one(p)]
    for _ in range(m):
        k_pows.append(k_pows[-1] * k)
    d_pows = [CycloNum.one(p)]
    for _ in range(m // 2):
        d_pows.append(d_pows[-1] * ksq_minus)
    acc = CycloNum.zero(p)
    for r in range(m // 2 + 1):
        acc = acc + math.comb(m, 2 * r) * (k_pows[m - 2 * r] * d_pows[r])
    return acc * Fraction((-1) ** (m - 1), 2 ** (m - 1))


def kloosterman_direct(u: int, ctx: FieldCtx) -> complex:
    """Brute-force K^(m)(u): float sum of omega^tr(x + u/x) over all x != 0.

    Walks x through F_q* as powers of a generator while a second running
    product tracks 1/x, so each of the q - 1 terms costs two small
    polynomial products instead of an extended-Euclid inversion.
    """
    p, m, q = ctx.p, ctx.m, ctx.q
    u = int(u) % p
    if u == 0:
        raise ZeroArgumentError("Kloosterman sums are defined for nonzero u")
    require_enumerable(q)
    omega = [cmath.exp(2j * cmath.pi * k / p) for k in range(p)]
    tau = ctx.basis_traces
    modulus = ctx.modulus
    gen = _trim(list(multiplicative_generator(ctx).coeffs))
    # one pass records the walk x = gen^k; the inverse of position k then
    # sits at position q-1-k, so u/x never needs an inversion
    walk: list[list[int]] = []
    x = [1]
    for _ in range(q - 1):
        walk.append(x)
        x = _poly_mulmod(x, gen, modulus, p)
    acc = complex(0.0)
    for k in range(q - 1):
        x = walk[k]
        y = walk[-k] if k else walk[0]
        e = 0
        for i, c in enumerate(x):
            e += c * tau[i]
        for i, c in enumerate(y):
            e += u * c * tau[i]
        acc += omega[e % p]
    return acc


def check_weil(v: CycloNum, q: int) -> bool:
    """|v| <= 2*sqrt(q) under the complex embedding; v must be real."""
    if not v.is_real():
        raise NotRealError(f"{v} is not fixed by zeta -> zeta^-1")
    return abs(v.embed_complex()) <= 2.0 * math.sqrt(q) + 1e-9


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class LehmerReport:
    p: int
    checks: tuple[IdentityCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def check_lehmer(p: int) -> LehmerReport:
    """Verify exactly, over F_p:

    (i)   sum_u K(u) = 1
    (ii)  sum_u K(u)^2 = p^2 - p - 1
    (iii) sum_u K(u) K(cu) = -p - 1 for every c != 1  (p > 2 only)

    Products of sums are evaluated on integer exponent tallies (cyclic
    convolution via an integer matmul), so every check is exact.
    """
    counts = np.array(_exponent_counts(p), dtype=np.int64)  # (p-1, p)
    checks = []

    total = CycloNum.from_exponent_counts([int(c) for c in counts.sum(axis=0)], p)
    ok = total == CycloNum.one(p)
    checks.append(IdentityCheck("sum K(u) = 1", ok, f"sum = {total}"))

    # fold[i, k] gives the column of G contributing to exponent k from row i
    idx = (np.arange(p)[None, :] - np.arange(p)[:, None]) % p
    rows = np.arange(p)[:, None]

    def product_sum(perm: np.ndarray) -> CycloNum:
        gram = counts.T @ counts[perm]  # (p, p) integer outer-product sum
        folded = gram[rows, idx].sum(axis=0)
        return CycloNum.from_exponent_counts([int(c) for c in folded], p)

    expected_sq = CycloNum.from_rational(p * p - p - 1, p)
    squares = product_sum(np.arange(p - 1))
    ok = squares == expected_sq
    checks.append(
        IdentityCheck("sum K(u)^2 = p^2 - p - 1", ok, f"sum = {squares}")
    )

    if p > 2:
        expected_cross = CycloNum.from_rational(-p - 1, p)
        for c in range(2, p):
            # row u-1 of counts holds K(u); K(cu) lives at row (c*u mod p)-1
            perm = np.array([(c * u) % p - 1 for u in range(1, p)])
            cross = product_sum(perm)
            ok = cross == expected_cross
            checks.append(
                IdentityCheck(
                    f"sum K(u)K({c}u) = -p - 1", ok, f"sum = {cross}"
                )
            )
    return LehmerReport(p, tuple(checks))


@dataclass(frozen=True)
class KloostermanProfile:
    """All K(u) and K^(m)(u) for u = 1..p-1, realness- and Weil-checked."""

    p: int
    m: int
    prime_sums: tuple[CycloNum, ...]
    lifted_sums: tuple[CycloNum, ...]

    @classmethod
    def compute(cls, p: int, m: int) -> KloostermanProfile:
        return _profile(p, m)


@functools.lru_cache(maxsize=None)
def _profile(p: int, m: int) -> KloostermanProfile:
    prime_sums = tuple(kloosterman_prime(u, p) for u in range(1, p))
    lifted = tuple(carlitz_lift(u, m, p) for u in range(1, p))
    q = p**m
    for u, v in enumerate(lifted, start=1):
        if not v.is_real():
            raise NotRealError(f"K^({m})({u}) over F_{p} is not real")
        if not check_weil(v, q):
            raise BoundViolationError(
                f"K^({m})({u}) over F_{p} violates the Weil bound 2*sqrt({q})"
            )
    return KloostermanProfile(p, m, prime_sums, lifted)
