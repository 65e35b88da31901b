import math

import pytest

from fihomlab.complexes import FIComplex
from fihomlab.fimod import (
    WindowExhausted,
    direct_sum,
    fi_constant,
    fi_induced,
    fi_torsion_concentrated,
    image,
    induced_morphism,
)
from fihomlab.good_ideal import good_ideal
from fihomlab.linalg import Matrix
from fihomlab.loccoh import (
    is_semi_induced,
    local_cohomology,
    min_acyclic_shift,
    nu_certificate,
    verify_main_theorem,
)
from fihomlab.reps import basic_rep

W = 6


def positive_part(field, window=W):
    A = fi_constant(field, window)
    f = induced_morphism(basic_rep("trivial", 1, field), A,
                         Matrix.from_rows(field, [[1]]))
    return image(f)[0]


def test_semi_induced_detection(field):
    assert is_semi_induced(fi_constant(field, W)) == "yes"
    assert is_semi_induced(fi_induced(basic_rep("sign", 2, field), W)) == "yes"
    T = fi_torsion_concentrated(basic_rep("trivial", 1, field), 1, W)
    assert is_semi_induced(T) == "no"


def test_min_acyclic_shift(field):
    assert min_acyclic_shift(fi_constant(field, W)) == 0
    T = fi_torsion_concentrated(basic_rep("trivial", 2, field), 2, W)
    assert min_acyclic_shift(T) == 3  # the shift must clear the torsion entirely


def test_local_cohomology_of_constant_vanishes(field):
    table = local_cohomology(fi_constant(field, W))
    assert not table.rows and table.complete


def test_local_cohomology_of_torsion_is_itself(field):
    T = fi_torsion_concentrated(basic_rep("regular", 2, field), 2, W)
    table = local_cohomology(T)
    assert list(table.rows) == [0]
    assert table.rows[0].module.dims() == T.dims()
    assert table.h(0) == 2 and table.max_h_plus_i() == 2


def test_positive_part_has_h1_in_degree_zero(field):
    table = local_cohomology(positive_part(field))
    assert list(table.rows) == [1]
    assert table.h(1) == 0
    assert table.max_h_plus_i() == 1


def test_theorem_on_constant(field):
    rep = verify_main_theorem(fi_constant(field, W))
    assert rep.verdict == "PASS"
    assert rep.lhs == 0 and rep.t0 == 0 and rep.max_h_plus_i == -math.inf


def test_theorem_on_positive_part(field):
    rep = verify_main_theorem(positive_part(field))
    assert rep.verdict == "PASS"
    assert rep.lhs == 1 and rep.max_h_plus_i == 1
    assert all(c.status == "ok" for c in rep.nu_certificates if c.computed is not None)


def test_theorem_on_mixed_sum(field):
    M = direct_sum(
        fi_induced(basic_rep("sign", 2, field), W),
        fi_torsion_concentrated(basic_rep("trivial", 1, field), 1, W),
    )
    rep = verify_main_theorem(M)
    assert rep.verdict == "PASS"
    assert rep.lhs == 2 and rep.t0 == 2 and rep.max_h_plus_i == 1


def test_nu_certificates_on_torsion_module(field):
    gi = good_ideal(2, field)
    T = fi_torsion_concentrated(basic_rep("trivial", 2, field), 2, W)
    certs = nu_certificate(T, gi)
    by_n = {c.n: c for c in certs}
    # Lemma: nu(Tor_n at degree n + maxdeg) = n once (p-1)*maxdeg <= n
    for n, c in by_n.items():
        if c.status == "out-of-range":
            assert (gi.p - 1) * 2 > n
        else:
            assert c.status == "ok" and c.computed == n


def test_nu_certificate_rejects_non_torsion(field):
    gi = good_ideal(2, field)
    with pytest.raises(ValueError):
        nu_certificate(fi_constant(field, W), gi)


def test_nu_certificates_on_single_term_complex(field):
    gi = good_ideal(2, field)
    T = fi_torsion_concentrated(basic_rep("trivial", 1, field), 1, W)
    certs = nu_certificate(FIComplex.single(T, 1), gi)
    assert certs, "expected at least one certificate"
    for c in certs:
        assert c.status in ("ok", "out-of-range")
        if c.status == "ok":
            assert c.computed == c.n + 1  # r = m = 1 here


def test_window_exhaustion_raises(field):
    T = fi_torsion_concentrated(basic_rep("trivial", 2, field), 2, 2)
    with pytest.raises(WindowExhausted):
        min_acyclic_shift(T)
