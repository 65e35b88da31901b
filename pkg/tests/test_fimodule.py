import math

import pytest

from fihomlab.fimod import (
    FIError,
    FIModule,
    WindowExhausted,
    cokernel,
    direct_sum,
    equivariant_hom_basis,
    fi_constant,
    fi_induced,
    fi_shift,
    fi_torsion_concentrated,
    fi_truncate,
    generation_degrees,
    image,
    induced_morphism,
    kernel,
    maxdeg,
    natural_shift_map,
    torsion_submodule,
    zero_module,
)
from fihomlab.linalg import Matrix
from fihomlab.reps import basic_rep

W = 5


def test_induced_module_dims(field):
    V = basic_rep("sign", 2, field)
    M = fi_induced(V, W)
    assert M.dims() == [math.comb(n, 2) for n in range(W + 1)]
    M.verify()


def test_invariant_violation_is_caught(field):
    M = fi_induced(basic_rep("trivial", 1, field), 3)
    steps = list(M.steps)
    bad = steps[1].copy()
    bad.data[1][0] = field.one  # sends the generator into an asymmetric vector
    steps[1] = bad
    with pytest.raises(FIError):
        FIModule(field, 3, M.pieces, steps)


def test_generation_degrees_oracle(field):
    V = basic_rep("trivial", 2, field)
    assert generation_degrees(fi_induced(V, W)) == [0, 0, 1, 0, 0, 0]
    T = fi_torsion_concentrated(V, 2, W)
    assert generation_degrees(T) == [0, 0, 1, 0, 0, 0]
    S = direct_sum(fi_induced(V, W), T)
    assert generation_degrees(S) == [0, 0, 2, 0, 0, 0]


def test_torsion_submodule_of_mixed_sum(field):
    I = fi_induced(basic_rep("sign", 2, field), W)
    T = fi_torsion_concentrated(basic_rep("trivial", 1, field), 1, W)
    S = direct_sum(I, T)
    tp = torsion_submodule(S)
    assert tp.module.dims() == T.dims()
    assert tp.certified_through >= 1


def test_torsion_submodule_of_induced_is_zero(field):
    tp = torsion_submodule(fi_induced(basic_rep("natural", 1, field), W))
    assert tp.module.is_zero()


def test_maxdeg(field):
    T = fi_torsion_concentrated(basic_rep("trivial", 2, field), 2, W)
    md = maxdeg(T)
    assert md.value == 2 and md.certified
    assert maxdeg(zero_module(field, W)).value == -math.inf
    A = fi_constant(field, W)
    assert maxdeg(A).value == math.inf


def test_shift_of_torsion_drops_degree(field):
    T = fi_torsion_concentrated(basic_rep("trivial", 2, field), 2, W)
    S = fi_shift(T, 1)
    S.verify()
    assert S.dims() == [0, 1, 0, 0, 0]
    with pytest.raises(WindowExhausted):
        fi_shift(T, W + 1)


def test_shift_of_constant_is_constant(field):
    A = fi_constant(field, W)
    S = fi_shift(A, 2)
    assert S.dims() == [1] * (W - 1)
    S.verify()


def test_natural_shift_map_kernel_is_torsion(field):
    I = fi_induced(basic_rep("trivial", 1, field), W)
    T = fi_torsion_concentrated(basic_rep("trivial", 1, field), 1, W)
    S = direct_sum(I, T)
    nat = natural_shift_map(S, 1)
    ker, _ = kernel(nat)
    assert ker.dims()[: W] == torsion_submodule(S).module.dims()[: W]


def test_kernel_image_cokernel_rank_additivity(field):
    A = fi_constant(field, W)
    V = basic_rep("trivial", 1, field)
    f = induced_morphism(V, A, Matrix.from_rows(field, [[1]]))
    ker, _ = kernel(f)
    img, _ = image(f)
    cok, _ = cokernel(f)
    for n in range(W + 1):
        assert ker.dim(n) + img.dim(n) == f.source.dim(n)
        assert img.dim(n) + cok.dim(n) == f.target.dim(n)
    # cokernel of I(triv_1) -> A is the constant module truncated to degree 0
    assert cok.dims() == [1, 0, 0, 0, 0, 0]


def test_induced_morphism_requires_equivariant_seed(field):
    V = basic_rep("sign", 2, field)
    A = fi_constant(field, W)
    with pytest.raises(FIError):
        induced_morphism(V, A, Matrix.from_rows(field, [[1]]))


def test_equivariant_hom_basis_dimensions(field):
    triv = basic_rep("trivial", 3, field)
    sgn = basic_rep("sign", 3, field)
    reg = basic_rep("regular", 3, field)
    assert len(equivariant_hom_basis(triv, reg)) == 1
    assert len(equivariant_hom_basis(sgn, reg)) == 1
    if field.characteristic == 0:
        assert len(equivariant_hom_basis(triv, sgn)) == 0
    assert len(equivariant_hom_basis(reg, reg)) == 6


def test_truncate_is_torsion(field):
    A = fi_constant(field, W)
    T = fi_truncate(A, 2)
    assert T.dims() == [1, 1, 1, 0, 0, 0]
    assert T.torsion_hint
    T.verify()
