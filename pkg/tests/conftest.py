"""Shared test helpers: seeded random representations and matrices."""
from __future__ import annotations

import random

import pytest

from fihomlab.fields import GF, QQ
from fihomlab.linalg import Matrix, column_space_basis, rref
from fihomlab.reps import basic_rep, conjugate_rep, direct_sum_reps


def random_matrix(field, rows, cols, rng, lo=-3, hi=3):
    return Matrix.from_rows(
        field,
        [[field.of(rng.randint(lo, hi)) for _ in range(cols)] for _ in range(rows)],
        ncols=cols,
    )


def random_invertible(field, n, rng):
    while True:
        m = random_matrix(field, n, n, rng)
        if rref(m)[0] == n:
            return m


def random_rep(n, field, rng, max_summands=3):
    """A genuine S_n-representation: a sum of basic reps in a random basis."""
    kinds = ["trivial", "sign", "natural"]
    if n <= 3:
        kinds.append("regular")
    summands = [
        basic_rep(rng.choice(kinds), n, field)
        for _ in range(rng.randint(1, max_summands))
    ]
    rep = direct_sum_reps(summands) if len(summands) > 1 else summands[0]
    change = random_invertible(field, rep.dim, rng)
    return conjugate_rep(rep, change)


def orbit_span_subrep(rep, rng):
    """Column basis of the subrepresentation generated by one random vector."""
    field = rep.field
    v = Matrix.from_rows(
        field, [[field.of(rng.randint(-2, 2))] for _ in range(rep.dim)], ncols=1
    )
    span = column_space_basis(v)
    while True:
        stacked = span
        for g in rep.gens:
            stacked = stacked.hstack(g * span)
        grown = column_space_basis(stacked)
        if grown.cols == span.cols:
            return span
        span = grown


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=["Q", "F5"], ids=["Q", "F5"])
def field(request):
    return QQ if request.param == "Q" else GF(5)


@pytest.fixture
def rng():
    return random.Random(20260824)
