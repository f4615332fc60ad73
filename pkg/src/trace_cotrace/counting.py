"""The closed-form pipeline for trace/co-trace counts T_ij over F_{p^m}.

T_ij counts the nonzero field elements with trace i and co-trace (trace
of the inverse) j.  Symmetry and scaling collapse the full p x p table to
the p - 1 unknowns t_s = T_1s, which satisfy the linear system

    sum_s (K(u s) + p + 1) t_s = K^(m)(u) + q + 1,    u = 1 .. p-1,

with K the Kloosterman sums over the prime field and K^(m) their lifts to
F_{p^m}.  The system is solved exactly over Q(zeta_p); renaming the
unknowns along powers of a primitive root turns the coefficient matrix
into a left-circulant whose determinant has magnitude p^p, which is what
makes the solution unique.  The remaining counts follow from

    T_10 = q/p - sum_s t_s
    T_00 = (p - 1) sum_s t_s + 2 q/p - q - 1
    T_ij = T_1,(ij mod p)   (i, j nonzero),  T_0j = T_i0 = T_10.

Every solve certifies integrality and nonnegativity of the counts; a
failure raises instead of returning a wrong table.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .circulant import LeftCirculant, gauss_solve, invert_exact
from .cyclotomic import CycloNum, zeta_pow
from .errors import (
    BoundViolationError,
    NegativeCountError,
    NonIntegerSolutionError,
    NotPrimitiveError,
    NotRealError,
)
from .ext_field import find_irreducible
from .kloosterman import KloostermanProfile
from .prime_field import PElem, is_prime, multiplicative_order, primitive_root

__all__ = [
    "TraceCotraceTable",
    "SolutionVector",
    "AsymptoticRow",
    "build_system",
    "reorder_circulant",
    "solve_t1s",
    "full_table",
    "closed_form_char2",
    "closed_form_char3",
    "closed_form_char5",
    "residual_bound",
    "asymptotic_report",
]


@dataclass(frozen=True)
class TraceCotraceTable:
    """p x p matrix of counts, counts[i][j] = T_ij, plus provenance."""

    p: int
    m: int
    modulus: tuple[int, ...]
    counts: tuple[tuple[int, ...], ...]

    @property
    def q(self) -> int:
        return self.p**self.m

    def validate(self) -> TraceCotraceTable:
        p, q = self.p, self.q
        counts = self.counts
        if len(counts) != p or any(len(row) != p for row in counts):
            raise AssertionError("table must be p x p")
        for i in range(p):
            for j in range(p):
                if counts[i][j] < 0:
                    raise NegativeCountError(f"T[{i}][{j}] = {counts[i][j]} < 0")
                if counts[i][j] != counts[j][i]:
                    raise AssertionError(f"T[{i}][{j}] != T[{j}][{i}]")
        total = sum(sum(row) for row in counts)
        if total != q - 1:
            raise AssertionError(f"table total {total} != q - 1 = {q - 1}")
        for i in range(p):
            expected = q // p - 1 if i == 0 else q // p
            row_sum = sum(counts[i])
            if row_sum != expected:
                raise AssertionError(f"row {i} sums to {row_sum}, expected {expected}")
        for i in range(1, p):
            if counts[0][i] != counts[0][1] or counts[i][0] != counts[0][1]:
                raise AssertionError("border cells T_0i, T_i0 must all equal T_01")
        return self


@dataclass(frozen=True)
class SolutionVector:
    """The p - 1 counts t_s = T_1s, s = 1..p-1, as certified integers."""

    p: int
    m: int
    t: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.m


def build_system(p: int, m: int) -> tuple[list[list[CycloNum]], list[CycloNum]]:
    """Coefficient matrix and right-hand side in natural order.

    Row u (1-based), column s: K(u s mod p) + p + 1; right-hand side
    entry u: K^(m)(u) + q + 1.
    """
    profile = KloostermanProfile.compute(p, m)
    q = p**m
    rows = [
        [profile.prime_sums[(u * s) % p - 1] + (p + 1) for s in range(1, p)]
        for u in range(1, p)
    ]
    rhs = [profile.lifted_sums[u - 1] + (q + 1) for u in range(1, p)]
    return rows, rhs


def reorder_circulant(
    p: int, m: int, g: PElem | int | None = None
) -> tuple[LeftCirculant, list[CycloNum], tuple[int, ...]]:
    """Rename unknowns along powers of a primitive root g.

    Returns the left-circulant coefficient matrix, the reordered
    right-hand side, and the unknown order: position l holds x_l =
    t_{g^l mod p}.  Used by the determinant/uniqueness checks; the main
    solve path works on the natural-order system.
    """
    if g is None:
        g = primitive_root(p)
    g_val = int(g) % p
    if multiplicative_order(g_val, p) != p - 1:
        raise NotPrimitiveError(f"{g_val} does not generate F_{p}*")
    profile = KloostermanProfile.compute(p, m)
    q = p**m
    order = tuple(pow(g_val, l, p) for l in range(p - 1))
    first_row = tuple(profile.prime_sums[v - 1] + (p + 1) for v in order)
    rhs = [profile.lifted_sums[v - 1] + (q + 1) for v in order]
    return LeftCirculant(first_row), rhs, order


def _certify_count(value: CycloNum, what: str) -> int:
    rational = value.as_rational()
    if rational.denominator != 1:
        raise NonIntegerSolutionError(f"{what} = {rational} is not an integer")
    n = int(rational)
    if n < 0:
        raise NegativeCountError(f"{what} = {n} is negative")
    return n


@functools.lru_cache(maxsize=None)
def solve_t1s(p: int, m: int) -> SolutionVector:
    """Solve the natural-order system exactly and certify integer counts."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be at least 1")
    rows, rhs = build_system(p, m)
    solution = gauss_solve(rows, rhs)
    t = tuple(
        _certify_count(x, f"T(1,{s})") for s, x in enumerate(solution, start=1)
    )
    q = p**m
    if sum(t) > q // p:
        raise AssertionError("sum of T_1s exceeds the trace-1 fiber size")
    return SolutionVector(p, m, t)


def full_table(p: int, m: int, modulus: tuple[int, ...] | None = None) -> TraceCotraceTable:
    """Complete p x p table from the solved t_s, with invariants checked.

    The counts do not depend on the modulus; it is recorded as metadata
    (the canonical smallest irreducible when not supplied).
    """
    vector = solve_t1s(p, m)
    q = p**m
    sum_t = sum(vector.t)
    t10 = q // p - sum_t
    t00 = (p - 1) * sum_t + 2 * (q // p) - q - 1
    counts = [[0] * p for _ in range(p)]
    counts[0][0] = t00
    for i in range(1, p):
        counts[0][i] = t10
        counts[i][0] = t10
        for j in range(1, p):
            counts[i][j] = vector.t[(i * j) % p - 1]
    if modulus is None:
        modulus = find_irreducible(p, m)
    table = TraceCotraceTable(p, m, tuple(modulus), tuple(tuple(row) for row in counts))
    return table.validate()


# ---------------------------------------------------------------------------
# solved forms for small characteristic


def closed_form_char2(m: int) -> tuple[int, int, int]:
    """(T00, T01, T11) over F_{2^m} from the binomial-sum solution of the
    single linear equation; exact integers (the power-of-two denominators
    cancel)."""
    if m < 1:
        raise ValueError("extension degree must be at least 1")
    s = sum(
        (-1) ** (m + r + 1) * math.comb(m, 2 * r) * 7**r for r in range(m // 2 + 1)
    )
    q = 2**m
    t11 = Fraction(q + 1, 4) + Fraction(s, 2 ** (m + 1))
    t00 = Fraction(q - 3, 4) + Fraction(s, 2 ** (m + 1))
    t01 = Fraction(q - 1, 4) - Fraction(s, 2 ** (m + 1))
    out = []
    for name, value in (("T00", t00), ("T01", t01), ("T11", t11)):
        if value.denominator != 1:
            raise NonIntegerSolutionError(f"{name} = {value} is not an integer")
        out.append(int(value))
    return tuple(out)  # type: ignore[return-value]


def _certified(value: CycloNum, name: str) -> int:
    rational = value.as_rational()
    if rational.denominator != 1:
        raise NonIntegerSolutionError(f"{name} = {rational} is not an integer")
    return int(rational)


def closed_form_char3(m: int) -> tuple[int, int, int, int]:
    """(T00, T01, T11, T12) over F_{3^m} from the solved 2 x 2 system."""
    profile = KloostermanProfile.compute(3, m)
    k1, k2 = profile.lifted_sums
    q = 3**m
    ninth = Fraction(1, 9)
    t11 = (CycloNum.from_rational(q + 1, 3) + (-1) * k1 + 2 * k2) * ninth
    t12 = (CycloNum.from_rational(q + 1, 3) + 2 * k1 + (-1) * k2) * ninth
    t00 = (CycloNum.from_rational(q - 5, 3) + 2 * (k1 + k2)) * ninth
    t01 = (CycloNum.from_rational(q - 2, 3) - (k1 + k2)) * ninth
    return (
        _certified(t00, "T00"),
        _certified(t01, "T01"),
        _certified(t11, "T11"),
        _certified(t12, "T12"),
    )


def closed_form_char5(m: int) -> tuple[int, int, int, int, int, int]:
    """(T00, T01, T11, T12, T13, T14) over F_{5^m}.

    The golden-ratio-like constant phi = (sqrt(5) - 1)/2 is realized
    exactly as the cyclotomic element zeta + zeta^4 = 2 cos(2 pi / 5).
    """
    profile = KloostermanProfile.compute(5, m)
    k1, k2, k3, k4 = profile.lifted_sums
    phi = zeta_pow(1, 5) + zeta_pow(4, 5)
    q = 5**m
    base = CycloNum.from_rational(q + 1, 5)
    t11 = base + k1 - 2 * k2 + 2 * k4 + phi * (-1 * k1 - 2 * k2 + 2 * k3 + k4)
    t12 = base - 2 * k1 + 2 * k2 + k3 + phi * (-2 * k1 + k2 - k3 + 2 * k4)
    t13 = base + k2 + 2 * k3 - 2 * k4 + phi * (2 * k1 - k2 + k3 - 2 * k4)
    t14 = base + 2 * k1 - 2 * k3 + k4 + phi * (k1 + 2 * k2 - 2 * k3 - k4)
    sum_k = k1 + k2 + k3 + k4
    t00 = CycloNum.from_rational(q - 9, 5) + 4 * sum_k
    t01 = CycloNum.from_rational(q - 4, 5) - sum_k
    scale = Fraction(1, 25)
    return (
        _certified(t00 * scale, "T00"),
        _certified(t01 * scale, "T01"),
        _certified(t11 * scale, "T11"),
        _certified(t12 * scale, "T12"),
        _certified(t13 * scale, "T13"),
        _certified(t14 * scale, "T14"),
    )


# ---------------------------------------------------------------------------
# asymptotics


@functools.lru_cache(maxsize=None)
def _system_matrix(p: int) -> LeftCirculant:
    # the coefficient circulant K depends on p only, not on m
    from .kloosterman import kloosterman_prime

    g = primitive_root(p).value
    order = [pow(g, l, p) for l in range(p - 1)]
    return LeftCirculant(tuple(kloosterman_prime(v, p) + (p + 1) for v in order))


@functools.lru_cache(maxsize=None)
def residual_bound(p: int) -> CycloNum:
    """R_p = sum of |r_l| over the first row of K^(-1), exactly.

    The r_l are real cyclotomic numbers; signs are read off the complex
    embedding and the magnitudes kept exact.  The sum itself is rational
    for p = 2 and 3 but genuinely irrational from p = 5 on, so the exact
    value is returned as a cyclotomic number (use .embed_complex() or,
    when applicable, .as_rational()).
    """
    inverse = invert_exact(_system_matrix(p))
    acc = CycloNum.zero(p)
    for r in inverse.first_row:
        if not r.is_real():
            raise NotRealError("inverse of the Kloosterman circulant must be real")
        acc = acc + (-r if r.embed_complex().real < 0 else r)
    return acc


@dataclass(frozen=True)
class AsymptoticRow:
    m: int
    i: int
    j: int
    count: int
    ratio: float
    deviation: float
    bound: float


def asymptotic_report(p: int, m_range: tuple[int, int]) -> list[AsymptoticRow]:
    """Deviations of the counts from their limit value (q + 1)/p^2.

    For each m in the inclusive range, reports T00, T01 and every T_1s.
    Each count deviates from (q + 1)/p^2 by a combination of lifted
    Kloosterman sums against the inverse-circulant weights, so the Weil
    bound caps the deviations at multiples of R_p * 2*sqrt(q):

        |T_1s - (q+1)/p^2|  <=  R_p (p - 1) 2 sqrt(q)
        |T_01 - (q+1)/p^2|  <=  1/p + R_p (p - 1) 2 sqrt(q)
        |T_00 - (q+1)/p^2|  <=  2/p + R_p (p - 1)^2 2 sqrt(q)

    A violated bound raises BoundViolationError: it would mean the lift
    or the solver is wrong, not that the mathematics failed.
    """
    lo, hi = m_range
    if lo < 1 or hi < lo:
        raise ValueError("need 1 <= m_lo <= m_hi")
    r_p = residual_bound(p).embed_complex().real
    rows: list[AsymptoticRow] = []
    for m in range(lo, hi + 1):
        q = p**m
        vector = solve_t1s(p, m)
        limit = Fraction(q + 1, p * p)
        weil = 2.0 * math.sqrt(q)
        sum_t = sum(vector.t)
        t10 = q // p - sum_t
        t00 = (p - 1) * sum_t + 2 * (q // p) - q - 1
        series: list[tuple[int, int, int, float]] = [
            (0, 0, t00, 2.0 / p + r_p * (p - 1) ** 2 * weil),
            (0, 1, t10, 1.0 / p + r_p * (p - 1) * weil),
        ]
        for s, count in enumerate(vector.t, start=1):
            series.append((1, s, count, r_p * (p - 1) * weil))
        for i, j, count, bound in series:
            deviation = abs(Fraction(count) - limit)
            if float(deviation) > bound + 1e-9:
                raise BoundViolationError(
                    f"T[{i}][{j}] deviates by {float(deviation)} > bound {bound}"
                    f" at p={p}, m={m}"
                )
            rows.append(
                AsymptoticRow(
                    m=m,
                    i=i,
                    j=j,
                    count=count,
                    ratio=count / q,
                    deviation=float(deviation),
                    bound=bound,
                )
            )
    return rows
