"""Ground-truth trace/co-trace tables by exhaustive field enumeration.

Every nonzero x contributes one increment to counts[tr(x)][tr(1/x)].  To
keep the per-element cost flat the oracle walks the cyclic group F_q* as
powers of a verified generator gamma: the inverse of gamma^k is
gamma^(q-1-k), so pairing each walk position with its mirror yields every
co-trace without a single per-element inversion.  Traces come from one
vectorized pass over all coefficient vectors (dot product with the
precomputed power-basis traces).

The walk itself is blocked: a jump by B steps is multiplication by
gamma^B, a fixed F_p-linear map on coefficient vectors, so whole blocks
advance with one (B x m) @ (m x m) integer matrix product.

Work can be split by element index (coefficient vector read as a base-p
integer): a TallyJob owns the half-open index interval [start, stop) and
jobs that partition [1, q) reproduce the full tally by entrywise
addition.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .counting import TraceCotraceTable
from .errors import BadPartitionError
from .ext_field import (
    FieldCtx,
    multiplicative_generator,
    require_enumerable,
    _poly_mulmod,
    _poly_powmod,
    _trim,
)

__all__ = ["TallyJob", "tally", "tally_partitioned"]

_WALK_BLOCK = 4096


@dataclass(frozen=True)
class TallyJob:
    """Tally of the elements with enumeration index in [start, stop)."""

    ctx: FieldCtx
    start: int
    stop: int

    def __post_init__(self) -> None:
        if not 1 <= self.start <= self.stop <= self.ctx.q:
            raise ValueError(
                f"interval [{self.start}, {self.stop}) not within [1, {self.ctx.q})"
            )


def _mult_matrix(element: Sequence[int], ctx: FieldCtx) -> np.ndarray:
    """Matrix G with row e = coefficients of element * x^e; then v @ G
    multiplies the field element with coefficient vector v by element."""
    m, p = ctx.m, ctx.p
    rows = []
    for e in range(m):
        basis = [0] * e + [1]
        prod = _poly_mulmod(_trim(list(element)), basis, ctx.modulus, p)
        rows.append(prod + [0] * (m - len(prod)))
    return np.array(rows, dtype=np.int64)


def _trace_by_code(ctx: FieldCtx) -> np.ndarray:
    """Traces of all q elements, indexed by enumeration index."""
    p, m = ctx.p, ctx.m
    tau = ctx.basis_traces
    table = np.zeros(1, dtype=np.int64)
    for e in range(m):
        digit_terms = (np.arange(p, dtype=np.int64) * tau[e])[:, None]
        table = ((table[None, :] + digit_terms) % p).reshape(-1)
    return table.astype(np.int32)


@functools.lru_cache(maxsize=4)
def _field_tables(ctx: FieldCtx) -> tuple[np.ndarray, np.ndarray]:
    """(trace, co-trace) arrays indexed by element enumeration index."""
    q, p, m = ctx.q, ctx.p, ctx.m
    trace = _trace_by_code(ctx)

    gamma = _trim(list(multiplicative_generator(ctx).coeffs))
    pvec = np.array([p**e for e in range(m)], dtype=np.int64)
    block = min(_WALK_BLOCK, q - 1)
    coeffs = np.zeros((block, m), dtype=np.int64)
    cur = [1]
    for k in range(block):
        coeffs[k, : len(cur)] = cur
        cur = _poly_mulmod(cur, gamma, ctx.modulus, p)
    jump = _mult_matrix(
        _poly_powmod(gamma, block, ctx.modulus, p), ctx
    )

    codes = np.empty(q - 1, dtype=np.int64)
    filled = 0
    while filled < q - 1:
        take = min(block, q - 1 - filled)
        codes[filled : filled + take] = coeffs[:take] @ pvec
        filled += take
        if filled < q - 1:
            coeffs = (coeffs @ jump) % p

    # gamma^k pairs with gamma^(q-1-k); k = 0 is self-paired (x = 1)
    mirror = np.concatenate([codes[:1], codes[:0:-1]])
    cotrace = np.full(q, -1, dtype=np.int32)
    cotrace[codes] = trace[mirror]
    if not (cotrace[1:] >= 0).all():
        raise AssertionError("walk failed to cover F_q* exactly once")
    return trace, cotrace


def _tally_interval(ctx: FieldCtx, start: int, stop: int) -> np.ndarray:
    trace, cotrace = _field_tables(ctx)
    p = ctx.p
    pairs = trace[start:stop].astype(np.int64) * p + cotrace[start:stop]
    return np.bincount(pairs, minlength=p * p)


def _as_table(ctx: FieldCtx, bins: np.ndarray) -> TraceCotraceTable:
    p = ctx.p
    counts = tuple(
        tuple(int(c) for c in bins[i * p : (i + 1) * p]) for i in range(p)
    )
    return TraceCotraceTable(p, ctx.m, ctx.modulus, counts).validate()


def tally(ctx: FieldCtx) -> TraceCotraceTable:
    """Count every nonzero element into its (trace, co-trace) cell."""
    require_enumerable(ctx.q)
    return _as_table(ctx, _tally_interval(ctx, 1, ctx.q))


def tally_partitioned(jobs: Iterable[TallyJob]) -> TraceCotraceTable:
    """Combine per-interval tallies; jobs must partition [1, q) exactly."""
    jobs = sorted(jobs, key=lambda job: job.start)
    if not jobs:
        raise BadPartitionError("no tally jobs supplied")
    ctx = jobs[0].ctx
    if any(job.ctx != ctx for job in jobs):
        raise BadPartitionError("all jobs must target the same field")
    require_enumerable(ctx.q)
    cursor = 1
    for job in jobs:
        if job.start != cursor:
            kind = "overlap" if job.start < cursor else "gap"
            raise BadPartitionError(
                f"{kind} at index {min(job.start, cursor)}: jobs must cover [1, {ctx.q})"
            )
        cursor = job.stop
    if cursor != ctx.q:
        raise BadPartitionError(f"gap at index {cursor}: jobs must cover [1, {ctx.q})")
    bins = np.zeros(ctx.p * ctx.p, dtype=np.int64)
    for job in jobs:
        bins += _tally_interval(ctx, job.start, job.stop)
    return _as_table(ctx, bins)
