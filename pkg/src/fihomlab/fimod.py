"""FI-modules on a finite degree window.

A module is stored in its graded form: one S_n-representation per degree
``0..window`` together with one-step structure maps (multiplication by the
degree-1 generator of the ground algebra).  Two invariants are verified
eagerly: each step is equivariant for the standard inclusion of symmetric
groups, and the two-step composite is invariant under the transposition of
the two freshly added letters.  Together these make the data a genuine
FI-module restricted to the window.

``valid_through`` tracks the degree up to which derived statements are
certified; shifting consumes window, and every report downstream carries the
resulting provenance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .linalg import (
    Matrix,
    SubquotientSpace,
    block_diag,
    column_space_basis,
    kernel_basis,
    rref,
)
from .permutations import Permutation
from .reps import (
    SnRep,
    basic_rep,
    direct_sum_reps,
    external_tensor,
    induce_young,
    restrict_rep,
    zero_rep,
)

INF = math.inf


class FIError(ValueError):
    pass


class WindowExhausted(FIError):
    """An operation needed more certified degrees than the window provides."""


class FIModule:
    __slots__ = ("field", "window", "pieces", "steps", "valid_through", "torsion_hint")

    def __init__(self, field, window, pieces, steps, valid_through=None,
                 torsion_hint=False, check=True):
        self.field = field
        self.window = window
        self.pieces = tuple(pieces)
        self.steps = tuple(steps)
        self.valid_through = window if valid_through is None else valid_through
        self.torsion_hint = torsion_hint
        if len(self.pieces) != window + 1 or len(self.steps) != window:
            raise FIError("window/pieces/steps length mismatch")
        if self.valid_through > window:
            raise FIError("valid_through exceeds window")
        if check:
            self.verify()

    def dim(self, n):
        return self.pieces[n].dim if 0 <= n <= self.window else 0

    def dims(self):
        return [p.dim for p in self.pieces]

    def is_zero(self):
        return all(p.dim == 0 for p in self.pieces)

    def verify(self):
        for n in range(self.window):
            phi = self.steps[n]
            src, tgt = self.pieces[n], self.pieces[n + 1]
            if (phi.rows, phi.cols) != (tgt.dim, src.dim):
                raise FIError(f"step at degree {n} has wrong shape")
            # equivariance under S_n included in S_{n+1}
            for i in range(1, n):
                if phi * src.gens[i - 1] != tgt.gens[i - 1] * phi:
                    raise FIError(f"step at degree {n} not equivariant for s_{i}")
        for n in range(self.window - 1):
            comp = self.steps[n + 1] * self.steps[n]
            swap = self.pieces[n + 2].gens[n]  # s_{n+1} in S_{n+2}
            if swap * comp != comp:
                raise FIError(f"two-step composite at degree {n} not symmetric")

    def composite_step(self, lo, hi):
        """The composite map from degree ``lo`` to degree ``hi``."""
        out = Matrix.identity(self.field, self.dim(lo))
        for n in range(lo, hi):
            out = self.steps[n] * out
        return out

    def __repr__(self):
        return f"FIModule(dims={self.dims()}, vt={self.valid_through})"


class FIMorphism:
    __slots__ = ("source", "target", "maps")

    def __init__(self, source: FIModule, target: FIModule, maps, check=True):
        if source.field != target.field or source.window != target.window:
            raise FIError("morphism endpoints must share field and window")
        self.source = source
        self.target = target
        self.maps = tuple(maps)
        if len(self.maps) != source.window + 1:
            raise FIError("one matrix per degree required")
        if check:
            self.verify()

    def verify(self):
        for n in range(self.source.window + 1):
            f = self.maps[n]
            if (f.rows, f.cols) != (self.target.dim(n), self.source.dim(n)):
                raise FIError(f"morphism map at degree {n} has wrong shape")
            for i in range(1, n):
                if f * self.source.pieces[n].gens[i - 1] != self.target.pieces[n].gens[i - 1] * f:
                    raise FIError(f"morphism not equivariant at degree {n}")
        for n in range(self.source.window):
            lhs = self.target.steps[n] * self.maps[n]
            rhs = self.maps[n + 1] * self.source.steps[n]
            if lhs != rhs:
                raise FIError(f"morphism does not commute with steps at degree {n}")

    def is_zero(self):
        return all(m.is_zero() for m in self.maps)


# -- constructors -----------------------------------------------------


def zero_module(field, window):
    pieces = [zero_rep(n, field) for n in range(window + 1)]
    steps = [Matrix.zeros(field, 0, 0) for _ in range(window)]
    return FIModule(field, window, pieces, steps, torsion_hint=True, check=False)


def _induced_piece(V: SnRep, n: int) -> SnRep:
    """Ind over the two-block Young subgroup with the trivial rep on the tail."""
    if n < V.n:
        return zero_rep(n, V.field)
    return induce_young(external_tensor(V, basic_rep("trivial", n - V.n, V.field)))


def fi_induced(V: SnRep, window: int) -> FIModule:
    """The free FI-module on an S_d-representation V.

    Piece at degree n has dimension C(n, d) * dim V; the basis is indexed by
    (d-subset of {1..n}, basis vector of V) and the step maps are the
    subset-inclusion maps.
    """
    from itertools import combinations

    d = V.n
    field = V.field
    if d > window:
        return zero_module(field, window)
    pieces = [_induced_piece(V, n) for n in range(window + 1)]
    steps = []
    for n in range(window):
        if n + 1 < d:
            steps.append(Matrix.zeros(field, 0, 0))
            continue
        if n < d:
            steps.append(Matrix.zeros(field, pieces[n + 1].dim, 0))
            continue
        subs_n = list(combinations(range(1, n + 1), d))
        subs_n1 = list(combinations(range(1, n + 2), d))
        idx1 = {s: k for k, s in enumerate(subs_n1)}
        m = Matrix.zeros(field, pieces[n + 1].dim, pieces[n].dim)
        for k, s in enumerate(subs_n):
            k1 = idx1[s]
            for v in range(V.dim):
                m.data[k1 * V.dim + v][k * V.dim + v] = field.one
        steps.append(m)
    return FIModule(field, window, pieces, steps)


def fi_constant(field, window) -> FIModule:
    """The rank-one module with every injection acting as the identity."""
    return fi_induced(basic_rep("trivial", 0, field), window)


def fi_torsion_concentrated(V: SnRep, d: int, window: int) -> FIModule:
    if V.n != d:
        raise FIError("representation degree must equal the concentration degree")
    if d > window:
        return zero_module(V.field, window)
    field = V.field
    pieces = [V if n == d else zero_rep(n, field) for n in range(window + 1)]
    steps = [
        Matrix.zeros(field, pieces[n + 1].dim, pieces[n].dim) for n in range(window)
    ]
    return FIModule(field, window, pieces, steps, torsion_hint=True)


def direct_sum(M: FIModule, N: FIModule) -> FIModule:
    if M.field != N.field or M.window != N.window:
        raise FIError("direct sum needs matching field and window")
    pieces = [
        direct_sum_reps([M.pieces[n], N.pieces[n]]) for n in range(M.window + 1)
    ]
    steps = [
        block_diag(M.field, [M.steps[n], N.steps[n]]) for n in range(M.window)
    ]
    return FIModule(
        M.field, M.window, pieces, steps,
        valid_through=min(M.valid_through, N.valid_through),
        torsion_hint=M.torsion_hint and N.torsion_hint,
    )


def fi_shift(M: FIModule, a: int) -> FIModule:
    """Shift: evaluate on the disjoint union with ``a`` extra letters (the last ones)."""
    if a < 0:
        raise FIError("negative shift")
    if a > M.valid_through:
        raise WindowExhausted(f"shift by {a} exceeds valid window {M.valid_through}")
    if a == 0:
        return M
    window = M.window - a
    pieces = [restrict_rep(M.pieces[n + a], n) for n in range(window + 1)]
    steps = []
    for n in range(window):
        cyc = Permutation.cycle(list(range(n + 1, n + a + 2)), n + a + 1)
        steps.append(M.pieces[n + a + 1].perm_matrix(cyc) * M.steps[n + a])
    return FIModule(
        M.field, window, pieces, steps,
        valid_through=M.valid_through - a, torsion_hint=M.torsion_hint,
    )


def fi_shift_morphism(f: FIMorphism, a: int) -> FIMorphism:
    return FIMorphism(
        fi_shift(f.source, a), fi_shift(f.target, a),
        [f.maps[n + a] for n in range(f.source.window - a + 1)],
    )


def natural_shift_map(M: FIModule, b: int) -> FIMorphism:
    """The canonical map M -> shift_b(M): the composite of b step maps."""
    S = fi_shift(M, b)
    base = fi_truncate_window(M, S.window)
    maps = [M.composite_step(n, n + b) for n in range(S.window + 1)]
    return FIMorphism(base, S, maps)


def fi_truncate_window(M: FIModule, window: int) -> FIModule:
    """Forget degrees above ``window`` (window bookkeeping, not the torsion truncation)."""
    if window == M.window:
        return M
    if window > M.window:
        raise FIError("cannot extend a window")
    return FIModule(
        M.field, window, M.pieces[: window + 1], M.steps[:window],
        valid_through=min(M.valid_through, window), torsion_hint=M.torsion_hint,
        check=False,
    )


def fi_truncate(M: FIModule, c: int) -> FIModule:
    """The torsion quotient that keeps degrees <= c and kills the rest."""
    if c >= M.window:
        return M
    field = M.field
    pieces = [M.pieces[n] if n <= c else zero_rep(n, field) for n in range(M.window + 1)]
    steps = [
        M.steps[n] if n + 1 <= c else Matrix.zeros(field, pieces[n + 1].dim, pieces[n].dim)
        for n in range(M.window)
    ]
    return FIModule(field, M.window, pieces, steps,
                    valid_through=M.valid_through, torsion_hint=True)


def truncation_morphism(M: FIModule, c: int) -> FIMorphism:
    T = fi_truncate(M, c)
    maps = [
        Matrix.identity(M.field, M.dim(n)) if n <= c
        else Matrix.zeros(M.field, 0, M.dim(n))
        for n in range(M.window + 1)
    ]
    return FIMorphism(M, T, maps)


# -- subquotients -----------------------------------------------------


def subquotient_module(ambient: FIModule, subs, killeds=None, torsion_hint=False,
                       valid_through=None) -> tuple[FIModule, list[SubquotientSpace]]:
    """FIModule structure on degreewise subquotients of an ambient module.

    ``subs[n]`` and ``killeds[n]`` are ambient column bases; both families
    must be preserved by the group action and compatible with the steps.
    """
    field = ambient.field
    if killeds is None:
        killeds = [None] * (ambient.window + 1)
    sqs = [SubquotientSpace.from_sub_killed(subs[n], killeds[n])
           for n in range(ambient.window + 1)]
    pieces = []
    for n in range(ambient.window + 1):
        sq = sqs[n]
        gens = [sq.induced_map(g, sq) for g in ambient.pieces[n].gens]
        pieces.append(SnRep(n, field, gens, dim=sq.dim))
    steps = [sqs[n].induced_map(ambient.steps[n], sqs[n + 1])
             for n in range(ambient.window)]
    mod = FIModule(field, ambient.window, pieces, steps,
                   valid_through=ambient.valid_through if valid_through is None else valid_through,
                   torsion_hint=torsion_hint)
    return mod, sqs


def kernel(f: FIMorphism) -> tuple[FIModule, FIMorphism]:
    """Degreewise kernel with its inclusion into the source."""
    src = f.source
    subs = [kernel_basis(f.maps[n]) for n in range(src.window + 1)]
    vt = min(src.valid_through, f.target.valid_through)
    mod, sqs = subquotient_module(src, subs, torsion_hint=src.torsion_hint,
                                  valid_through=vt)
    incl = FIMorphism(mod, src, [sq.reps for sq in sqs])
    return mod, incl


def image(f: FIMorphism) -> tuple[FIModule, FIMorphism]:
    """Degreewise image with its inclusion into the target."""
    tgt = f.target
    subs = [column_space_basis(f.maps[n]) for n in range(tgt.window + 1)]
    vt = min(f.source.valid_through, tgt.valid_through)
    mod, sqs = subquotient_module(tgt, subs, torsion_hint=tgt.torsion_hint,
                                  valid_through=vt)
    incl = FIMorphism(mod, tgt, [sq.reps for sq in sqs])
    return mod, incl


def cokernel(f: FIMorphism) -> tuple[FIModule, FIMorphism]:
    """Degreewise cokernel with the projection from the target."""
    tgt = f.target
    full = [Matrix.identity(tgt.field, tgt.dim(n)) for n in range(tgt.window + 1)]
    killed = [column_space_basis(f.maps[n]) for n in range(tgt.window + 1)]
    vt = min(f.source.valid_through, tgt.valid_through)
    mod, sqs = subquotient_module(tgt, full, killed, torsion_hint=tgt.torsion_hint,
                                  valid_through=vt)
    proj = FIMorphism(
        tgt, mod,
        [sqs[n].express(Matrix.identity(tgt.field, tgt.dim(n)))
         for n in range(tgt.window + 1)],
    )
    return mod, proj


# -- induced morphisms ------------------------------------------------


def induced_morphism(V: SnRep, target: FIModule, f0: Matrix) -> FIMorphism:
    """The unique morphism I(V) -> target extending an equivariant map f0.

    ``f0`` maps V into the target piece at degree d = V.n.
    """
    from itertools import combinations

    d = V.n
    field = V.field
    if (f0.rows, f0.cols) != (target.dim(d), V.dim):
        raise FIError("f0 has the wrong shape")
    for i in range(1, d):
        if f0 * V.gens[i - 1] != target.pieces[d].gens[i - 1] * f0:
            raise FIError(f"f0 is not equivariant (fails at s_{i})")
    source = fi_induced(V, target.window)
    maps = []
    for n in range(target.window + 1):
        if n < d:
            maps.append(Matrix.zeros(field, target.dim(n), 0))
            continue
        comp = target.composite_step(d, n) * f0
        cols = []
        for s in combinations(range(1, n + 1), d):
            rest = [x for x in range(1, n + 1) if x not in set(s)]
            g_s = target.pieces[n].perm_matrix(Permutation(list(s) + rest))
            moved = g_s * comp
            cols.extend(moved.column(v) for v in range(V.dim))
        maps.append(Matrix.from_columns(field, cols, nrows=target.dim(n)))
    return FIMorphism(source, target, maps)


def equivariant_hom_basis(V: SnRep, W: SnRep) -> list[Matrix]:
    """Basis of the space of S_d-equivariant maps V -> W (d = both degrees)."""
    if V.n != W.n or V.field != W.field:
        raise FIError("hom space needs matching degree and field")
    field = V.field
    dv, dw = V.dim, W.dim
    if dv == 0 or dw == 0:
        return []
    rows = []
    for i in range(max(V.n - 1, 0)):
        gv, gw = V.gens[i], W.gens[i]
        # (gw F - F gv) entry (r, c), F flattened row-major
        for r in range(dw):
            for c in range(dv):
                row = [field.zero] * (dw * dv)
                for k in range(dw):
                    row[k * dv + c] = field.normalize(row[k * dv + c] + gw.data[r][k])
                for k in range(dv):
                    row[r * dv + k] = field.normalize(row[r * dv + k] - gv.data[k][c])
                rows.append(row)
    if not rows:
        basis = Matrix.identity(field, dw * dv).columns()
    else:
        basis = kernel_basis(Matrix.from_rows(field, rows, ncols=dw * dv)).columns()
    out = []
    for vec in basis:
        out.append(Matrix(field, [[vec[r * dv + c] for c in range(dv)] for r in range(dw)]))
    return out


# -- torsion, generation, maxdeg -------------------------------------


@dataclass
class TorsionPart:
    module: FIModule
    inclusion: FIMorphism
    certified_through: int


def torsion_submodule(M: FIModule) -> TorsionPart:
    """Elements killed by pushing to the end of the window.

    A degree is certified only when the kernel of the push-forward has
    stabilized over the last step of the window; finite windows cannot
    witness torsion beyond that.
    """
    vt = M.valid_through
    if M.torsion_hint:
        incl = FIMorphism(
            M, M, [Matrix.identity(M.field, M.dim(n)) for n in range(M.window + 1)],
            check=False,
        )
        return TorsionPart(M, incl, vt)
    subs = []
    certified_through = -1
    contiguous = True
    for n in range(M.window + 1):
        hi = min(vt, M.window)
        if n > hi:
            subs.append(Matrix.zeros(M.field, M.dim(n), 0))
            contiguous = False
            continue
        full = kernel_basis(M.composite_step(n, hi))
        if n < hi:
            shorter = kernel_basis(M.composite_step(n, hi - 1))
            stable = full.cols == shorter.cols
        else:
            stable = M.dim(n) == 0
        subs.append(full)
        if stable and contiguous:
            certified_through = n
        elif not stable:
            contiguous = False
    mod, sqs = subquotient_module(M, subs, torsion_hint=True)
    incl = FIMorphism(mod, M, [sq.reps for sq in sqs])
    return TorsionPart(mod, incl, certified_through)


def generation_degrees(M: FIModule) -> list[int]:
    """Independent oracle for the zeroth Tor row: dimension of the quotient of
    each piece by the span of all group translates of the previous piece."""
    out = []
    for n in range(M.valid_through + 1):
        if n == 0:
            out.append(M.dim(0))
            continue
        span = column_space_basis(M.steps[n - 1])
        rep = M.pieces[n]
        while True:
            mats = [span] + [g * span for g in rep.gens]
            grown = column_space_basis(
                mats[0].hstack(mats[1]) if len(mats) == 2 else _hstack_all(mats)
            )
            if grown.cols == span.cols:
                break
            span = grown
        out.append(M.dim(n) - span.cols)
    return out


def _hstack_all(mats):
    out = mats[0]
    for m in mats[1:]:
        out = out.hstack(m)
    return out


@dataclass
class MaxDeg:
    value: float  # int, -inf, or +inf
    certified: bool

    def __eq__(self, other):
        if isinstance(other, MaxDeg):
            return self.value == other.value and self.certified == other.certified
        return self.value == other

    def __repr__(self):
        tag = "" if self.certified else " (uncertified)"
        return f"MaxDeg({self.value}{tag})"


def maxdeg(M: FIModule) -> MaxDeg:
    """Maximum degree where the module is nonzero: -inf for zero, +inf when
    certified by step maps being isomorphisms at the window end."""
    vt = M.valid_through
    nonzero = [n for n in range(vt + 1) if M.dim(n) > 0]
    if not nonzero:
        return MaxDeg(-INF, True)
    m = nonzero[-1]
    if m < vt:
        return MaxDeg(m, M.torsion_hint or _zero_tail_certified(M, m))
    # nonzero at the window end: +inf only if the last two steps are isomorphisms
    if vt >= 2:
        iso = all(
            M.dim(n) == M.dim(n + 1) and rref(M.steps[n])[0] == M.dim(n)
            for n in (vt - 2, vt - 1)
        )
        if iso:
            return MaxDeg(INF, True)
    return MaxDeg(m, False)


def _zero_tail_certified(M: FIModule, m: int) -> bool:
    # pieces vanish strictly above m through the window end; within-window
    # vanishing can only recur via new generators, which the window shows
    return all(M.dim(n) == 0 for n in range(m + 1, M.window + 1))
