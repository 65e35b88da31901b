import random

from hypothesis import given, settings, strategies as st

from fihomlab.fields import GF, QQ
from fihomlab.linalg import (
    Matrix,
    NoSolution,
    SubquotientSpace,
    column_space_basis,
    in_span,
    kernel_basis,
    kronecker,
    rank,
    rref,
    solve,
)


def mat(field, rows):
    return Matrix.from_rows(field, [[field.of(x) for x in r] for r in rows],
                            ncols=len(rows[0]) if rows else 0)


small_entries = st.integers(min_value=-4, max_value=4)
shapes = st.tuples(st.integers(1, 5), st.integers(1, 5))


@st.composite
def matrices(draw, field):
    r, c = draw(shapes)
    rows = draw(st.lists(st.lists(small_entries, min_size=c, max_size=c),
                         min_size=r, max_size=r))
    return mat(field, rows)


@settings(max_examples=60, deadline=None)
@given(matrices(QQ))
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).cols == m.cols


@settings(max_examples=60, deadline=None)
@given(matrices(GF(5)))
def test_rank_equals_transpose_rank_gf5(m):
    assert rank(m) == rank(m.transpose())


@settings(max_examples=40, deadline=None)
@given(matrices(QQ))
def test_rref_idempotent(m):
    r1, p1, red1 = rref(m)
    r2, p2, red2 = rref(red1)
    assert (r1, p1) == (r2, p2) and red1 == red2


@settings(max_examples=40, deadline=None)
@given(matrices(GF(7)))
def test_kernel_columns_are_killed(m):
    k = kernel_basis(m)
    assert (m * k).is_zero()


@settings(max_examples=40, deadline=None)
@given(matrices(QQ))
def test_column_space_spans_columns(m):
    basis = column_space_basis(m)
    assert rank(basis) == basis.cols == rank(m)
    assert in_span(basis, m)


def test_solve_and_no_solution():
    f = QQ
    basis = mat(f, [[1, 0], [0, 1], [0, 0]])
    target = mat(f, [[2], [3], [0]])
    x = solve(basis, target)
    assert basis * x == target
    bad = mat(f, [[0], [0], [1]])
    try:
        solve(basis, bad)
        assert False, "expected NoSolution"
    except NoSolution:
        pass


def test_kronecker_mixed_product():
    f = GF(5)
    rng = random.Random(7)
    def rnd(r, c):
        return mat(f, [[rng.randint(0, 4) for _ in range(c)] for _ in range(r)])
    a, b = rnd(2, 3), rnd(3, 2)
    c, d = rnd(3, 2), rnd(2, 3)
    assert kronecker(a * b, c * d) == kronecker(a, c) * kronecker(b, d)


def test_subquotient_space_dims_and_express():
    f = QQ
    sub = mat(f, [[1, 0], [0, 1], [0, 0]])
    killed = mat(f, [[1], [0], [0]])
    sq = SubquotientSpace.from_sub_killed(sub, killed)
    assert sq.dim == 1
    v = mat(f, [[0], [5], [0]])
    coords = sq.express(v)
    # the representative must agree with v modulo the killed subspace
    assert in_span(killed, sq.reps * coords - v)
