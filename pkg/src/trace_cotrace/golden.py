"""Frozen reference values for the trace/co-trace tables in small
characteristic, used by the `tables` command and the acceptance suite.

Layout per characteristic: the inclusive degree range and, for each
reported series T_ij, the counts across that range.
"""

from __future__ import annotations

__all__ = ["GOLDEN", "golden_cells"]

GOLDEN: dict[int, dict] = {
    2: {
        "degrees": tuple(range(2, 11)),
        "series": {
            (0, 0): (1, 0, 3, 10, 13, 28, 71, 126, 241),
            (0, 1): (0, 3, 4, 5, 18, 35, 56, 129, 270),
            (1, 1): (2, 1, 4, 11, 14, 29, 72, 127, 242),
        },
    },
    3: {
        "degrees": tuple(range(1, 7)),
        "series": {
            (0, 0): (0, 2, 2, 10, 20, 68),
            (0, 1): (0, 0, 3, 8, 30, 87),
            (1, 1): (1, 1, 0, 13, 31, 72),
            (1, 2): (0, 2, 6, 6, 20, 84),
        },
    },
    5: {
        "degrees": tuple(range(1, 7)),
        "series": {
            (0, 0): (0, 4, 0, 28, 164, 628),
            (0, 1): (0, 0, 6, 24, 115, 624),
            (1, 1): (1, 2, 0, 21, 120, 601),
            (1, 2): (0, 0, 6, 38, 130, 590),
            (1, 3): (0, 2, 6, 16, 140, 660),
            (1, 4): (0, 1, 7, 26, 120, 650),
        },
    },
}


def golden_cells(p: int):
    """Yield (m, i, j, expected_count) for every frozen cell of char p."""
    data = GOLDEN[p]
    for (i, j), values in data["series"].items():
        for m, value in zip(data["degrees"], values):
            yield m, i, j, value
