"""Construction of F_{p^m} with trace, inversion and full enumeration.

An extension field is described by a :class:`FieldCtx`: a prime p, a
degree m and a monic irreducible modulus polynomial of degree m over F_p.
Polynomials are coefficient sequences in ascending degree, so the modulus
has length m + 1 with last entry 1, and field elements are coefficient
vectors of length exactly m.  Elements enumerate in base-p counting order
of their coefficient vectors; the "index" of an element is that vector
read as a base-p integer, which gives zero index 0 and the q - 1 nonzero
elements indices 1 .. q-1.

Traces are evaluated as a dot product against the precomputed traces of
the power basis 1, x, ..., x^(m-1) (the power sums of the modulus roots,
obtained from Newton's identities), since callers such as the enumeration
oracle take traces of every field element.

The private ``_poly_*`` helpers work on trimmed ascending coefficient
lists over F_p (no trailing zeros, [] is the zero polynomial) and are the
work horses behind the element type.
"""

from __future__ import annotations

import os
from typing import Iterator, Sequence

from .errors import NonMonicError, TooLargeError, ZeroInverseError
from .prime_field import PElem, factorize, is_prime

__all__ = [
    "FieldCtx",
    "ExtFieldElem",
    "is_irreducible",
    "find_irreducible",
    "trace",
    "invert",
    "enumerate_elements",
    "multiplicative_generator",
    "enumeration_guard",
]

DEFAULT_GUARD = 10**8
GUARD_ENV_VAR = "TRACE_COTRACE_GUARD"


def enumeration_guard() -> int:
    """Largest field order q this process will enumerate exhaustively."""
    raw = os.environ.get(GUARD_ENV_VAR)
    if raw is None:
        return DEFAULT_GUARD
    return int(raw)


# ---------------------------------------------------------------------------
# raw polynomial arithmetic over F_p


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_add(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _trim(out)


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lead_inv = pow(b[-1], -1, p)
    quot = [0] * max(len(r) - db, 0)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        factor = (r[-1] * lead_inv) % p
        quot[shift] = factor
        for i, c in enumerate(b):
            r[shift + i] = (r[shift + i] - factor * c) % p
        _trim(r)
    return _trim(quot), r


def _poly_mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    return _poly_divmod(_poly_mul(a, b, p), modulus, p)[1]


def _poly_powmod(a: Sequence[int], e: int, modulus: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_divmod(a, modulus, p)[1]
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, modulus, p)
        base = _poly_mulmod(base, base, modulus, p)
        e >>= 1
    return result


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    if a:
        lead_inv = pow(a[-1], -1, p)
        a = [(c * lead_inv) % p for c in a]
    return a


def _poly_invmod(a: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    # extended Euclid, tracking only the cofactor of a
    if not _trim(list(a)):
        raise ZeroInverseError("zero polynomial has no inverse")
    r0, r1 = list(modulus), _poly_divmod(a, modulus, p)[1]
    s0: list[int] = []
    s1: list[int] = [1]
    while r1:
        q, r = _poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, p), p)
    if len(r0) != 1:
        raise ZeroInverseError("element is not invertible modulo the given polynomial")
    c_inv = pow(r0[0], -1, p)
    return _trim([(c * c_inv) % p for c in s0])


# ---------------------------------------------------------------------------
# irreducibility


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial f over F_p.

    f is irreducible of degree m iff x^(p^m) = x (mod f) and, for every
    prime divisor ell of m, x^(p^(m/ell)) - x is coprime to f.
    """
    f = [c % p for c in f]
    m = len(f) - 1
    if m < 1:
        raise ValueError("degree must be at least 1")
    if f[-1] != 1:
        raise NonMonicError("irreducibility test requires a monic polynomial")
    x = [0, 1]
    # frob[k] = x^(p^k) mod f, built by iterating the Frobenius map
    frob = [_poly_divmod(x, f, p)[1]]
    for _ in range(m):
        frob.append(_poly_powmod(frob[-1], p, f, p))
    if frob[m] != frob[0]:
        return False
    for ell in factorize(m):
        g = _poly_gcd(_poly_sub(frob[m // ell], x, p), f, p)
        if g != [1]:
            return False
    return True


def find_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m over F_p.

    Candidates are ordered by their ascending-degree coefficient tuple
    read as a base-p integer, so the returned modulus is deterministic.
    """
    if m < 1:
        raise ValueError("degree must be at least 1")
    for n in range(p**m):
        coeffs = _digits(n, p, m) + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("unreachable: irreducibles of every degree exist")


def _digits(n: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        n, d = divmod(n, p)
        out.append(d)
    return out


def _power_sums(modulus: Sequence[int], p: int) -> tuple[int, ...]:
    # Newton's identities: s_k + a_{m-1} s_{k-1} + ... + a_{m-k+1} s_1
    # + k a_{m-k} = 0, giving the power sums s_e of the modulus roots,
    # i.e. the traces of the power basis elements x^e.
    m = len(modulus) - 1
    a = list(modulus)
    sums = [m % p]
    for k in range(1, m):
        acc = k * a[m - k]
        for i in range(1, k):
            acc += a[m - i] * sums[k - i]
        sums.append(-acc % p)
    return tuple(sums)


# ---------------------------------------------------------------------------
# field context and elements


class FieldCtx:
    """Immutable description of F_{p^m} = F_p[x] / (modulus)."""

    __slots__ = ("p", "m", "q", "modulus", "basis_traces")

    def __init__(self, p: int, m: int, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be at least 1")
        if modulus is None:
            modulus = find_irreducible(p, m)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != m + 1:
                raise ValueError(f"modulus must have degree {m}")
            if not is_irreducible(modulus, p):
                raise ValueError(f"modulus {list(modulus)} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        self.basis_traces = _power_sums(modulus, p)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    def zero(self) -> ExtFieldElem:
        return ExtFieldElem((0,) * self.m, self)

    def one(self) -> ExtFieldElem:
        return self.constant(1)

    def element(self, coeffs: Sequence[int]) -> ExtFieldElem:
        if len(coeffs) > self.m:
            raise ValueError(f"coefficient vector longer than degree {self.m}")
        padded = list(coeffs) + [0] * (self.m - len(coeffs))
        return ExtFieldElem(tuple(c % self.p for c in padded), self)

    def constant(self, c: int) -> ExtFieldElem:
        """Embed a prime-field residue as a constant polynomial."""
        return self.element([c % self.p])

    def from_index(self, n: int) -> ExtFieldElem:
        """Element whose coefficient vector is n written in base p."""
        if not 0 <= n < self.q:
            raise ValueError(f"index {n} out of range [0, {self.q})")
        return ExtFieldElem(tuple(_digits(n, self.p, self.m)), self)


class ExtFieldElem:
    """Element of F_{p^m}: coefficient vector of length m over F_p."""

    __slots__ = ("coeffs", "ctx")

    def __init__(self, coeffs: tuple[int, ...], ctx: FieldCtx):
        if len(coeffs) != ctx.m:
            raise ValueError(f"need exactly {ctx.m} coefficients")
        self.coeffs = coeffs
        self.ctx = ctx

    def _check_ctx(self, other: ExtFieldElem) -> None:
        if self.ctx != other.ctx:
            raise ValueError("elements live in different fields")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExtFieldElem)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.coeffs, self.ctx.p, self.ctx.m, self.ctx.modulus))

    def __repr__(self) -> str:
        return f"ExtFieldElem({list(self.coeffs)}, q={self.ctx.q})"

    def __add__(self, other: ExtFieldElem) -> ExtFieldElem:
        self._check_ctx(other)
        p = self.ctx.p
        return ExtFieldElem(
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)), self.ctx
        )

    def __sub__(self, other: ExtFieldElem) -> ExtFieldElem:
        self._check_ctx(other)
        p = self.ctx.p
        return ExtFieldElem(
            tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)), self.ctx
        )

    def __neg__(self) -> ExtFieldElem:
        p = self.ctx.p
        return ExtFieldElem(tuple(-a % p for a in self.coeffs), self.ctx)

    def __mul__(self, other: ExtFieldElem) -> ExtFieldElem:
        self._check_ctx(other)
        ctx = self.ctx
        prod = _poly_mulmod(_trim(list(self.coeffs)), _trim(list(other.coeffs)), ctx.modulus, ctx.p)
        return ctx.element(prod)

    def scaled(self, c: int) -> ExtFieldElem:
        """Multiply by a prime-field scalar."""
        p = self.ctx.p
        c %= p
        return ExtFieldElem(tuple((c * a) % p for a in self.coeffs), self.ctx)

    def __pow__(self, e: int) -> ExtFieldElem:
        ctx = self.ctx
        if e < 0:
            return self.invert() ** (-e)
        out = _poly_powmod(_trim(list(self.coeffs)), e, ctx.modulus, ctx.p)
        return ctx.element(out)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def index(self) -> int:
        """Position of this element in base-p counting order."""
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.ctx.p + c
        return n

    def invert(self) -> ExtFieldElem:
        if self.is_zero():
            raise ZeroInverseError(f"0 is not invertible in F_{self.ctx.q}")
        ctx = self.ctx
        inv = _poly_invmod(_trim(list(self.coeffs)), ctx.modulus, ctx.p)
        return ctx.element(inv)

    def trace(self) -> PElem:
        acc = 0
        for c, t in zip(self.coeffs, self.ctx.basis_traces):
            acc += c * t
        return PElem(acc % self.ctx.p, self.ctx.p)


def trace(x: ExtFieldElem) -> PElem:
    """Trace of x down to the prime field: sum of the m Frobenius images."""
    return x.trace()


def invert(x: ExtFieldElem) -> ExtFieldElem:
    """Multiplicative inverse of a nonzero element."""
    return x.invert()


def enumerate_elements(ctx: FieldCtx) -> Iterator[ExtFieldElem]:
    """All q elements, in base-p counting order of coefficient vectors."""
    for n in range(ctx.q):
        yield ctx.from_index(n)


def multiplicative_generator(ctx: FieldCtx) -> ExtFieldElem:
    """Smallest-index generator of the cyclic group F_q*, certified by
    checking its order against every prime divisor of q - 1."""
    q, p = ctx.q, ctx.p
    cofactors = [(q - 1) // ell for ell in factorize(q - 1)]
    for n in range(1, q):
        candidate = _trim(list(ctx.from_index(n).coeffs))
        if all(
            _poly_powmod(candidate, cof, ctx.modulus, p) != [1] for cof in cofactors
        ):
            return ctx.element(candidate)
    raise AssertionError("unreachable: F_q* is cyclic")


def require_enumerable(q: int) -> None:
    """Raise TooLargeError if a size-q enumeration exceeds the guard."""
    guard = enumeration_guard()
    if q > guard:
        raise TooLargeError(
            f"field order {q} exceeds the enumeration guard {guard}"
            f" (override with {GUARD_ENV_VAR})"
        )
