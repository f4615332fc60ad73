"""Arithmetic in the prime field F_p and primitive-root discovery.

Residues are wrapped in :class:`PElem`, which pins the modulus and checks
primality on construction (trial division; intended scale is p up to a
few thousand).  Hot loops elsewhere in the package work on raw ints and
only wrap at API boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ZeroInverseError

__all__ = [
    "PElem",
    "is_prime",
    "factorize",
    "inv_mod",
    "primitive_root",
    "multiplicative_order",
]


def is_prime(n: int) -> bool:
    """Trial-division primality test."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization {prime: exponent} of n >= 1 by trial division."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


@dataclass(frozen=True)
class PElem:
    """Residue in [0, p) for a prime modulus p."""

    value: int
    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        object.__setattr__(self, "value", self.value % self.p)

    def __int__(self) -> int:
        return self.value

    def __add__(self, other: PElem | int) -> PElem:
        return PElem((self.value + int(other)) % self.p, self.p)

    def __sub__(self, other: PElem | int) -> PElem:
        return PElem((self.value - int(other)) % self.p, self.p)

    def __mul__(self, other: PElem | int) -> PElem:
        return PElem((self.value * int(other)) % self.p, self.p)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self) -> PElem:
        return PElem(-self.value % self.p, self.p)

    def inv(self) -> PElem:
        return inv_mod(self)


def inv_mod(a: PElem) -> PElem:
    """Multiplicative inverse of a nonzero residue."""
    if a.value == 0:
        raise ZeroInverseError(f"0 has no inverse mod {a.p}")
    return PElem(pow(a.value, -1, a.p), a.p)


def multiplicative_order(a: int, p: int) -> int:
    """Order of a nonzero residue a in the cyclic group F_p*."""
    a %= p
    if a == 0:
        raise ZeroInverseError("0 has no multiplicative order")
    order = p - 1
    for ell in factorize(p - 1):
        while order % ell == 0 and pow(a, order // ell, p) == 1:
            order //= ell
    return order


def primitive_root(p: int) -> PElem:
    """Smallest generator of F_p*.

    The counting results downstream do not depend on which generator is
    used; taking the smallest makes every derived artifact reproducible.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return PElem(1, 2)
    for g in range(2, p):
        if multiplicative_order(g, p) == p - 1:
            return PElem(g, p)
    raise AssertionError("unreachable: F_p* is cyclic")
