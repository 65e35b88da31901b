import pytest

from conftest import orbit_span_subrep, random_rep

from fihomlab.fields import GF, QQ
from fihomlab.good_ideal import (
    GoodIdealError,
    block_embed,
    good_ideal,
    norm_element,
    nu,
    nu_bruteforce,
    two_sided_ideal_dimension,
    verify_good_ideal,
)
from fihomlab.linalg import SubquotientSpace
from fihomlab.reps import SnRep, basic_rep

FIELDS_P2 = [QQ, GF(3), GF(5), GF(7)]
FIELDS_P3 = [QQ, GF(2), GF(5), GF(7)]


@pytest.mark.parametrize("f", FIELDS_P2, ids=lambda f: f.name)
def test_axioms_p2(f):
    rep = verify_good_ideal(good_ideal(2, f))
    assert rep["all_pass"], rep


@pytest.mark.parametrize("f", FIELDS_P3, ids=lambda f: f.name)
def test_axioms_p3(f):
    rep = verify_good_ideal(good_ideal(3, f))
    assert rep["all_pass"], rep


def test_wrong_characteristic_rejected():
    with pytest.raises(GoodIdealError):
        good_ideal(2, GF(2))
    with pytest.raises(GoodIdealError):
        good_ideal(3, GF(3))


def test_norm_squared_is_twice_norm():
    for f in FIELDS_P2:
        n = norm_element(2, f)
        assert n * n == n.scale(f.of(2))


def test_tau_idempotent():
    for f in FIELDS_P3:
        tau = good_ideal(3, f).g
        assert tau * tau == tau


def test_quotient_by_ideal_has_dimension_two():
    # dim k[S_3] = 6, the two-sided ideal of tau has dimension 4
    for f in FIELDS_P3:
        tau = good_ideal(3, f).g
        assert two_sided_ideal_dimension(tau) == 4


def test_nu_of_sign_and_trivial(field):
    # sign is never annihilated below the capacity bound: nu = n for both p.
    # trivial: the p=2 generator (the norm of S_2) acts on trivial by 2, so
    # r* = floor(n/2) and nu = n - floor(n/2); the p=3 generator has
    # coefficient sum (1+1)(1+1) - (2/3)*6 = 0, so it annihilates trivial
    # outright and nu = n.
    for p in (2, 3):
        if field.characteristic == p:
            continue
        gi = good_ideal(p, field)
        for n in range(0, 8):
            assert nu(basic_rep("sign", n, field), gi) == n
            expected_triv = n - n // 2 if p == 2 else n
            assert nu(basic_rep("trivial", n, field), gi) == expected_triv


def test_nu_zero_rep_is_infinite(field):
    import math

    from fihomlab.reps import zero_rep

    gi = good_ideal(2, field)
    assert nu(zero_rep(3, field), gi).value == math.inf


def test_block_embed_vanishes_beyond_capacity(field):
    gi = good_ideal(2, field)
    assert block_embed(gi, 3, 5).is_zero()   # 2*3 > 5
    assert not block_embed(gi, 2, 5).is_zero()


def test_operator_agrees_with_bruteforce_on_random_reps(field, rng):
    gi = good_ideal(2, field)
    for _ in range(8):
        n = rng.randint(2, 4)
        rep = random_rep(n, field, rng, max_summands=2)
        assert nu(rep, gi) == nu_bruteforce(rep, gi)


def test_min_rule_on_invariant_subspace_ses(field, rng):
    # nu(V) = min(nu(sub), nu(quotient)) for a short exact sequence
    gi = good_ideal(2, field)
    for _ in range(10):
        n = rng.randint(2, 4)
        rep = random_rep(n, field, rng, max_summands=2)
        sub_basis = orbit_span_subrep(rep, rng)
        if sub_basis.cols in (0, rep.dim):
            continue
        sub_sq = SubquotientSpace.from_sub_killed(sub_basis)
        sub = SnRep(n, field,
                    [sub_sq.induced_map(g, sub_sq) for g in rep.gens],
                    dim=sub_sq.dim)
        from fihomlab.linalg import Matrix

        full = Matrix.identity(field, rep.dim)
        quot_sq = SubquotientSpace.from_sub_killed(full, sub_basis)
        quot = SnRep(n, field,
                     [quot_sq.induced_map(g, quot_sq) for g in rep.gens],
                     dim=quot_sq.dim)
        assert nu(rep, gi).value == min(nu(sub, gi).value, nu(quot, gi).value)
