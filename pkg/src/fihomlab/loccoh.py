"""Local cohomology via the shift recursion, and the main verification harness.

The zeroth local cohomology is the torsion submodule.  Higher groups come
from the recursion: shift until semi-induced, take the cokernel of the
canonical map into the shift, and step the cohomological index down by one.
Each level records its shift and cokernel, and the regularity identity is
then checked against the Tor pipeline, with nu certificates distinguishing
the contributing rows.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .complexes import FIComplex, hyper_tor, hyper_tor_rep
from .fimod import (
    FIModule,
    WindowExhausted,
    cokernel,
    fi_shift,
    maxdeg,
    natural_shift_map,
    torsion_submodule,
)
from .good_ideal import GoodIdeal, good_ideal, nu
from .tor import TorTable, regularity, tor_rep, tor_table

INF = math.inf


@dataclass
class Policy:
    """Knobs for semi-inducedness testing, recursion depth, and certificates."""

    i_max: int = 2                 # Tor vanishing depth for semi-induced tests
    lcoh_i_max: int = 6            # recursion depth cap
    tor_i_max: int | None = None   # None: window minus least generator degree
    nu_p: int | None = None        # None: 2 unless char 2, else 3
    nu_certificates: bool = True
    assume_window_sufficient: bool = False

    def choose_p(self, field) -> int:
        if self.nu_p is not None:
            return self.nu_p
        return 3 if field.characteristic == 2 else 2


def is_semi_induced(M: FIModule, policy: Policy | None = None) -> str:
    """Window-relative test: 'yes' iff Tor_i vanishes for 1 <= i <= policy.i_max
    on every certified degree."""
    policy = policy or Policy()
    if M.is_zero():
        return "yes"
    if M.valid_through < 1:
        return "uncertified"
    table = tor_table(M, i_max=min(policy.i_max, M.valid_through))
    if any(i >= 1 for (i, n) in table.entries):
        return "no"
    # generators at the top of the window could hide higher Tor just beyond
    # it, so a positive answer needs the generator row to clear the window end
    if not table.row_certified(0) and not M.is_zero():
        return "uncertified"
    return "yes"


def min_acyclic_shift(M: FIModule, policy: Policy | None = None) -> int:
    """Least b with shift_b(M) testing semi-induced."""
    policy = policy or Policy()
    last = -1
    for b in range(M.valid_through + 1):
        verdict = is_semi_induced(fi_shift(M, b), policy)
        last = b
        if verdict == "yes":
            return b
    raise WindowExhausted(
        f"no semi-induced shift found up to b = {last}; window insufficient"
    )


@dataclass
class LocCohRow:
    module: FIModule          # the torsion module H^i as computed
    certified_through: int


@dataclass
class LocCohTable:
    rows: dict                # i -> LocCohRow
    depth: int                # first level at which the recursion terminated
    trace: list               # (shift b, cokernel dims) per level
    complete: bool            # False when the window or i_max cut the recursion
    window: int

    def dim(self, i, n):
        row = self.rows.get(i)
        return row.module.dim(n) if row and n <= row.module.window else 0

    def h(self, i):
        row = self.rows.get(i)
        if row is None:
            return -INF
        return maxdeg(row.module).value

    def max_h_plus_i(self):
        vals = [self.h(i) + i for i in self.rows if self.h(i) != -INF]
        return max(vals) if vals else -INF

    def min_row_attaining(self):
        target = self.max_h_plus_i()
        if target == -INF:
            return None
        for i in sorted(self.rows):
            if self.h(i) + i == target:
                return i
        return None

    def nonzero_rows(self):
        return sorted(i for i in self.rows if self.h(i) != -INF)


def local_cohomology(M: FIModule, i_max: int | None = None,
                     policy: Policy | None = None) -> LocCohTable:
    """All H^i via the shift recursion; H^0 is cross-checked against the
    torsion submodule at every level."""
    policy = policy or Policy()
    if i_max is None:
        i_max = policy.lcoh_i_max
    rows = {}
    trace = []
    cur = M
    level = 0
    complete = True
    while True:
        if is_semi_induced(cur, policy) == "yes":
            break
        if level > i_max:
            complete = False
            break
        tp = torsion_submodule(cur)
        if not tp.module.is_zero():
            rows[level] = LocCohRow(tp.module, tp.certified_through)
        try:
            b = min_acyclic_shift(cur, policy)
        except WindowExhausted:
            complete = False
            break
        nat = natural_shift_map(cur, b)
        # consistency: the kernel of the canonical map is the torsion submodule
        from .fimod import kernel as fi_kernel

        ker_mod, _ = fi_kernel(nat)
        k_dims = ker_mod.dims()
        t_dims = tp.module.dims()[: len(k_dims)]
        if k_dims != t_dims:
            raise AssertionError(
                f"recursion level {level}: ker(M -> shift) {k_dims} != torsion {t_dims}"
            )
        coker_mod, _ = cokernel(nat)
        trace.append((b, coker_mod.dims()))
        cur = coker_mod
        level += 1
    return LocCohTable(rows, level, trace, complete, M.window)


@dataclass
class NuCertificate:
    n: int
    degree: int
    expected: float
    computed: float | None
    status: str  # ok | mismatch | out-of-range | window

    @property
    def passed(self):
        return self.status in ("ok", "out-of-range", "window")


@dataclass
class TheoremReport:
    lhs: float                      # regularity from the Tor pipeline
    rhs: float                      # max(t_0, max_i (h^i + i))
    t0: float
    max_h_plus_i: float
    stable_from: int | None         # first degree where t_n - n locks to the h-side
    stable_checked: list            # rows n checked in the stable window
    nu_certificates: list
    verdict: str                    # PASS | FAIL | UNCERTIFIED
    tor: TorTable
    lcoh: LocCohTable
    uncertified_rows: list

    def summary(self):
        return (
            f"reg={self.lhs} rhs={self.rhs} t0={self.t0} "
            f"max(h^i+i)={self.max_h_plus_i} verdict={self.verdict}"
        )


def verify_main_theorem(M: FIModule, policy: Policy | None = None,
                        gi: GoodIdeal | None = None) -> TheoremReport:
    """Check the regularity / local cohomology identity on one module, with
    the two sides computed by independent pipelines."""
    policy = policy or Policy()
    table = tor_table(M, policy.tor_i_max)
    reg_report = regularity(M, table=table)
    lcoh = local_cohomology(M, policy=policy)

    t0 = table.t(0)
    mh = lcoh.max_h_plus_i()
    lhs = reg_report.reg
    rhs = max(t0, mh)

    # stable formula: t_n - n should equal max_i(h^i + i) for n >> 0
    certified_rows = [
        i for i in table.rows()
        if i >= 1 and (table.row_certified(i) or policy.assume_window_sufficient)
    ]
    stable_from = None
    stable_checked = []
    stable_unknown = False
    for start in range(1, max(certified_rows, default=1) + 2):
        tail = [i for i in certified_rows if i >= start]
        if tail and all(table.t(i) - i == mh for i in tail):
            stable_from = start
            stable_checked = tail
            break
    if mh == -INF:
        # no local cohomology: higher Tor rows must eventually vanish
        ok_stable = all(table.t(i) == -INF for i in certified_rows)
        stable_from = 1 if ok_stable else None
        stable_checked = certified_rows
    elif not certified_rows:
        # the window certifies no positive row, so stability is untestable
        ok_stable = True
        stable_unknown = True
    else:
        ok_stable = stable_from is not None

    certs = []
    if policy.nu_certificates and mh != -INF and stable_from is not None:
        if gi is None:
            gi = good_ideal(policy.choose_p(M.field), M.field)
        r = lcoh.min_row_attaining()
        rho = int(mh)
        for n in stable_checked:
            deg = n + rho
            if deg > M.valid_through:
                certs.append(NuCertificate(n, deg, n + r, None, "window"))
                continue
            if (gi.p - 1) * rho > n:
                certs.append(NuCertificate(n, deg, n + r, None, "out-of-range"))
                continue
            rep = tor_rep(M, n, deg)
            got = nu(rep, gi).value
            status = "ok" if got == n + r else "mismatch"
            certs.append(NuCertificate(n, deg, n + r, got, status))

    uncertified = reg_report.uncertified_rows
    if (not lcoh.complete or stable_unknown) and not policy.assume_window_sufficient:
        verdict = "UNCERTIFIED"
    elif lhs == rhs and ok_stable and all(c.passed for c in certs):
        verdict = "PASS"
    else:
        verdict = "FAIL"
    return TheoremReport(
        lhs, rhs, t0, mh, stable_from, stable_checked, certs, verdict,
        table, lcoh, uncertified,
    )


def nu_certificate(X, gi: GoodIdeal, policy: Policy | None = None) -> list:
    """Certificates for the nu values of top-degree Tor pieces.

    ``X`` is a torsion FI-module (expected nu is n in the top degree) or a
    bounded complex of torsion FI-modules (expected nu is n + r, where r is
    the least index attaining max_i(i + maxdeg H^i); every nonzero graded
    piece also satisfies the lower bound n + min support index).
    """
    policy = policy or Policy()
    certs = []
    if isinstance(X, FIModule):
        if not X.torsion_hint:
            tp = torsion_submodule(X)
            if tp.module.dims() != X.dims():
                raise ValueError("nu_certificate on a module requires a torsion module")
        md = maxdeg(X)
        if md.value == -INF:
            return certs
        rho = int(md.value)
        for n in range(0, X.valid_through - rho + 1):
            deg = n + rho
            if (gi.p - 1) * rho > n:
                certs.append(NuCertificate(n, deg, n, None, "out-of-range"))
                continue
            rep = tor_rep(X, n, deg)
            got = nu(rep, gi).value
            certs.append(
                NuCertificate(n, deg, n, got, "ok" if got == n else "mismatch")
            )
        return certs
    # complex case
    C: FIComplex = X
    from .complexes import complex_cohomology

    coh = complex_cohomology(C)
    vals = {i: maxdeg(h).value for i, h in coh.items()}
    finite = {i: v for i, v in vals.items() if v != -INF}
    if not finite:
        return certs
    rho = max(i + v for i, v in finite.items())
    r = min(i for i, v in finite.items() if i + v == rho)
    m = C.min_support()
    i_cap = max(C.valid_through - int(rho), 0)
    table = hyper_tor(C, i_cap)
    for n in range(0, i_cap + 1):
        deg = n + int(rho)
        if deg > C.valid_through:
            continue
        if (gi.p - 1) * rho > n:
            certs.append(NuCertificate(n, deg, n + r, None, "out-of-range"))
            continue
        if table.dim(n, deg) == 0:
            certs.append(NuCertificate(n, deg, n + r, None, "mismatch"))
            continue
        rep = hyper_tor_rep(C, n, deg)
        got = nu(rep, gi).value
        status = "ok" if got == n + r else "mismatch"
        if status == "ok" and m is not None and not got >= n + m:
            status = "mismatch"
        certs.append(NuCertificate(n, deg, n + r, got, status))
    return certs
