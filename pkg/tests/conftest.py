"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's elimination kernel: they
use textbook Fraction Gaussian elimination and brute-force counting.
"""

from fractions import Fraction
from itertools import permutations

import pytest

from algvote import exactlinalg
from algvote import _rref_py

# eleven voters over rankings 123, 132, 213, 231, 312, 321
ELEVEN = [3, 2, 0, 2, 0, 4]


def naive_rank(m):
    """Plain Gaussian elimination over Fractions."""
    rows = [[Fraction(x) for x in r] for r in m]
    if not rows:
        return 0
    r = 0
    for c in range(len(rows[0])):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][c] / rows[r][c]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def brute_positional_scores(n, counts_by_ranking, w):
    """Points per candidate straight from the definition."""
    scores = [Fraction(0)] * n
    for ranking, c in counts_by_ranking.items():
        for pos, cand in enumerate(ranking):
            scores[cand - 1] += c * Fraction(w[pos])
    return scores


def brute_head_to_head(n, counts_by_ranking):
    """``wins[i][j]`` = voters ranking i above j."""
    wins = [[0] * (n + 1) for _ in range(n + 1)]
    for ranking, c in counts_by_ranking.items():
        for a in range(n):
            for b in range(a + 1, n):
                wins[ranking[a]][ranking[b]] += c
    return wins


def rankings(n):
    return sorted(permutations(range(1, n + 1)))


@pytest.fixture(params=["python", "cython"])
def kernel_backend(request, monkeypatch):
    """Run a test under each row-reduction kernel that is available."""
    if request.param == "python":
        monkeypatch.setattr(exactlinalg, "_rref_int", _rref_py.rref_int)
    else:
        try:
            from algvote._rref import rref_int
        except ImportError:
            pytest.skip("compiled kernel not built")
        monkeypatch.setattr(exactlinalg, "_rref_int", rref_int)
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for number in sorted(REPORT):
            terminalreporter.write_line(REPORT[number])
