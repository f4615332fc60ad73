import pytest
from hypothesis import given, settings, strategies as st

from trace_cotrace.counting import full_table
from trace_cotrace.errors import BadPartitionError, TooLargeError
from trace_cotrace.ext_field import FieldCtx, enumerate_elements, invert, trace
from trace_cotrace.oracle import TallyJob, tally, tally_partitioned


def slow_tally(ctx):
    """Element-by-element reference tally with per-element inversion."""
    counts = [[0] * ctx.p for _ in range(ctx.p)]
    for x in enumerate_elements(ctx):
        if x.is_zero():
            continue
        counts[int(trace(x))][int(trace(invert(x)))] += 1
    return tuple(tuple(row) for row in counts)


@pytest.mark.parametrize("p,m", [(2, 1), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2), (13, 1)])
def test_tally_matches_slow_reference(p, m):
    ctx = FieldCtx(p, m)
    assert tally(ctx).counts == slow_tally(ctx)


def test_tally_examples():
    table = tally(FieldCtx(2, 4))
    assert (table.counts[0][0], table.counts[0][1], table.counts[1][1]) == (3, 4, 4)

    table = tally(FieldCtx(5, 6))
    assert table.counts[0][0] == 628
    assert table.counts[0][1] == 624
    assert table.counts[1][1:] == (601, 590, 660, 650)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_tally_degree_one_structure(p):
    # tr is the identity on F_p, so T_ij = 1 exactly when i*j = 1
    table = tally(FieldCtx(p, 1))
    for i in range(p):
        for j in range(p):
            expected = 1 if (i * j) % p == 1 else 0
            assert table.counts[i][j] == expected


@pytest.mark.parametrize("p,m", [(2, 7), (3, 4), (5, 3), (7, 3), (11, 2)])
def test_tally_total_and_closed_form_agreement(p, m):
    ctx = FieldCtx(p, m)
    table = tally(ctx)
    assert sum(sum(row) for row in table.counts) == ctx.q - 1
    assert table.counts == full_table(p, m).counts


def test_tally_is_modulus_independent():
    a = tally(FieldCtx(3, 4))
    b = tally(FieldCtx(3, 4, (2, 2, 0, 0, 1)))
    assert a.modulus != b.modulus
    assert a.counts == b.counts


def test_tally_guard(monkeypatch):
    monkeypatch.setenv("TRACE_COTRACE_GUARD", "50")
    with pytest.raises(TooLargeError):
        tally(FieldCtx(2, 6))


def test_partition_single_job_equals_tally():
    ctx = FieldCtx(3, 4)
    whole = tally(ctx)
    single = tally_partitioned([TallyJob(ctx, 1, ctx.q)])
    assert single.counts == whole.counts


def test_partition_two_halves():
    ctx = FieldCtx(3, 4)
    half = ctx.q // 2
    combined = tally_partitioned([TallyJob(ctx, 1, half), TallyJob(ctx, half, ctx.q)])
    assert combined.counts == tally(ctx).counts


def test_partition_order_does_not_matter():
    ctx = FieldCtx(5, 3)
    jobs = [
        TallyJob(ctx, 40, ctx.q),
        TallyJob(ctx, 1, 7),
        TallyJob(ctx, 7, 40),
    ]
    assert tally_partitioned(jobs).counts == tally(ctx).counts


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(min_value=2, max_value=80), min_size=0, max_size=6, unique=True))
def test_partition_random_cutpoints(cuts):
    ctx = FieldCtx(3, 4)
    bounds = [1] + sorted(cuts) + [ctx.q]
    jobs = [TallyJob(ctx, a, b) for a, b in zip(bounds, bounds[1:])]
    assert tally_partitioned(jobs).counts == tally(ctx).counts


def test_partition_rejects_empty():
    with pytest.raises(BadPartitionError):
        tally_partitioned([])


def test_partition_rejects_gap():
    ctx = FieldCtx(3, 4)
    with pytest.raises(BadPartitionError):
        tally_partitioned([TallyJob(ctx, 1, 10), TallyJob(ctx, 11, ctx.q)])
    with pytest.raises(BadPartitionError):
        tally_partitioned([TallyJob(ctx, 1, ctx.q - 1)])
    with pytest.raises(BadPartitionError):
        tally_partitioned([TallyJob(ctx, 2, ctx.q)])


def test_partition_rejects_overlap():
    ctx = FieldCtx(3, 4)
    with pytest.raises(BadPartitionError):
        tally_partitioned([TallyJob(ctx, 1, 11), TallyJob(ctx, 10, ctx.q)])


def test_partition_rejects_mixed_fields():
    a, b = FieldCtx(3, 4), FieldCtx(3, 3)
    with pytest.raises(BadPartitionError):
        tally_partitioned([TallyJob(a, 1, 10), TallyJob(b, 10, b.q)])


def test_tally_job_validates_interval():
    ctx = FieldCtx(3, 2)
    with pytest.raises(ValueError):
        TallyJob(ctx, 0, 5)
    with pytest.raises(ValueError):
        TallyJob(ctx, 5, 3)
    with pytest.raises(ValueError):
        TallyJob(ctx, 1, ctx.q + 1)
