import math

import pytest

from fihomlab.complexes import (
    ComplexError,
    FIComplex,
    complex_cohomology,
    hyper_tor,
    hyper_tor_rep,
)
from fihomlab.fimod import (
    FIMorphism,
    fi_constant,
    fi_torsion_concentrated,
    truncation_morphism,
)
from fihomlab.linalg import Matrix
from fihomlab.reps import basic_rep
from fihomlab.tor import tor_table

W = 5


def torsion(field, kind, d, window=W):
    return fi_torsion_concentrated(basic_rep(kind, d, field), d, window)


def identity_morphism(M):
    return FIMorphism(
        M, M, [Matrix.identity(M.field, M.dim(n)) for n in range(M.window + 1)]
    )


def test_single_term_hyper_tor_matches_module_tor(field):
    T = torsion(field, "trivial", 2)
    C = FIComplex.single(T)
    module_table = tor_table(T, i_max=3)
    hyper_table = hyper_tor(C, i_max=3)
    for i in range(4):
        for n in range(W + 1):
            assert hyper_table.dim(i, n) == module_table.dim(i, n)


def test_identity_complex_is_acyclic(field):
    T = torsion(field, "trivial", 1)
    C = FIComplex({0: T, 1: T}, {0: identity_morphism(T)})
    assert all(h.is_zero() for h in complex_cohomology(C).values())
    table = hyper_tor(C, i_max=3)
    assert not table.entries


def test_two_term_cohomology(field):
    # A -> A/deg<=1: kernel in degrees >= 2, no cokernel
    A = fi_constant(field, W)
    tr = truncation_morphism(A, 1)
    C = FIComplex({0: A, 1: tr.target}, {0: tr})
    coh = complex_cohomology(C)
    assert coh[0].dims() == [0, 0, 1, 1, 1, 1]
    assert coh[1].is_zero()


def test_dd_zero_enforced(field):
    T = torsion(field, "trivial", 1)
    f = identity_morphism(T)
    with pytest.raises(ComplexError):
        FIComplex({0: T, 1: T, 2: T}, {0: f, 1: f})


def test_hyper_tor_of_shifted_single_term(field):
    # a single term at cohomological index 1 satisfies Tor_n(C) = Tor_{n+1}(T)
    T = torsion(field, "trivial", 2)
    C0 = FIComplex.single(T, 0)
    C1 = FIComplex.single(T, 1)
    t0 = hyper_tor(C0, i_max=3)
    t1 = hyper_tor(C1, i_max=2)
    for (i, n), d in t0.entries.items():
        if i >= 1:
            assert t1.dim(i - 1, n) == d


def test_hyper_tor_rep_is_genuine(field):
    T = torsion(field, "trivial", 1)
    C = FIComplex.single(T)
    rep = hyper_tor_rep(C, 2, 3)
    rep.verify()
    assert rep.dim == math.comb(3, 2)


def test_min_support(field):
    T = torsion(field, "trivial", 1)
    assert FIComplex.single(T, 1).min_support() == 1
    from fihomlab.fimod import zero_module

    Z = zero_module(field, W)
    assert FIComplex({0: Z, 1: T}).min_support() == 1
