import math

import pytest

from fihomlab.fields import QQ
from fihomlab.linalg import Matrix
from fihomlab.permutations import Permutation, all_permutations
from fihomlab.reps import (
    RepError,
    SnRep,
    basic_rep,
    conjugate_rep,
    direct_sum_reps,
    external_tensor,
    induce_young,
    restrict_rep,
    zero_rep,
)


def test_basic_reps_satisfy_coxeter(field):
    for kind in ("trivial", "sign", "natural", "regular"):
        for n in range(5):
            rep = basic_rep(kind, n, field)
            rep.verify()


def test_coxeter_verification_catches_bad_generators():
    f = QQ
    good = basic_rep("natural", 3, f)
    broken = Matrix.from_rows(f, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(RepError):
        SnRep(3, f, [good.gens[0], broken])


def test_perm_matrix_is_a_homomorphism(field):
    rep = basic_rep("regular", 3, field)
    for p in all_permutations(3):
        for q in all_permutations(3):
            assert rep.perm_matrix(p * q) == rep.perm_matrix(p) * rep.perm_matrix(q)


def test_natural_rep_permutes_coordinates():
    rep = basic_rep("natural", 4, QQ)
    p = Permutation([3, 1, 4, 2])
    m = rep.perm_matrix(p)
    # basis vector e_x goes to e_{p(x)}
    for x in range(1, 5):
        col = m.column(x - 1)
        assert col[p(x) - 1] == 1 and sum(1 for v in col if v != 0) == 1


@pytest.mark.parametrize("a_kind,a,b_kind,b", [
    ("sign", 1, "trivial", 2),
    ("sign", 2, "trivial", 2),
    ("trivial", 2, "sign", 2),
    ("natural", 2, "trivial", 1),
    ("sign", 3, "trivial", 1),
    ("regular", 2, "sign", 2),
])
def test_induction_coxeter_deep(field, a_kind, a, b_kind, b):
    """Young induction produces a genuine representation (full Coxeter check)."""
    U = basic_rep(a_kind, a, field)
    W = basic_rep(b_kind, b, field)
    ind = induce_young(external_tensor(U, W), check=True)
    assert ind.dim == math.comb(a + b, a) * U.dim * W.dim


def test_induction_character_of_trivial_blocks():
    # Ind(triv_a x triv_b) is the permutation action on a-subsets: the trace
    # of sigma counts its fixed a-subsets.
    from itertools import combinations

    f = QQ
    a, b = 2, 2
    ind = induce_young(
        external_tensor(basic_rep("trivial", a, f), basic_rep("trivial", b, f)),
        check=True,
    )
    for p in all_permutations(a + b):
        m = ind.perm_matrix(p)
        trace = sum(m.data[i][i] for i in range(m.rows))
        fixed = sum(
            1 for s in combinations(range(1, a + b + 1), a)
            if tuple(sorted(p(x) for x in s)) == s
        )
        assert trace == fixed


def test_induced_sign_block_total_sign():
    # On Ind(sgn_a x sgn_b), every permutation inside the Young subgroup acts
    # on the identity-coset line by its sign.
    f = QQ
    ind = induce_young(
        external_tensor(basic_rep("sign", 2, f), basic_rep("sign", 2, f)),
        check=True,
    )
    s1 = ind.perm_matrix(Permutation.adjacent(1, 4))
    s3 = ind.perm_matrix(Permutation.adjacent(3, 4))
    # identity coset is the lex-first subset (1,2): basis index 0
    assert s1.data[0][0] == -1
    assert s3.data[0][0] == -1


def test_restrict_and_direct_sum(field):
    r = direct_sum_reps([basic_rep("natural", 4, field), basic_rep("sign", 4, field)])
    r.verify()
    assert r.dim == 5
    res = restrict_rep(r, 2)
    res.verify()
    assert res.dim == 5 and res.n == 2


def test_conjugate_rep_preserves_action(field, rng):
    from conftest import random_invertible

    rep = basic_rep("natural", 3, field)
    c = random_invertible(field, 3, rng)
    conj = conjugate_rep(rep, c)
    conj.verify()
    for p in all_permutations(3):
        assert c * conj.perm_matrix(p) == rep.perm_matrix(p) * c


def test_zero_rep(field):
    z = zero_rep(4, field)
    assert z.dim == 0 and z.is_zero()
