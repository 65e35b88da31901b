"""Tor of FI-modules through the Koszul complex, degreewise.

The strand at degree n has i-th term Ind over the Young subgroup of
(sign of S_i) boxtimes (module piece in degree n-i); its basis is indexed by
the i-subset of letters occupying the sign block, in lexicographic order.
The differential moves one letter from the sign block into the module block
through the step map, with the alternating sign of the letter's position.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .fimod import FIModule, generation_degrees
from .linalg import (
    Matrix,
    SubquotientSpace,
    column_space_basis,
    kernel_basis,
)
from .permutations import Permutation
from .reps import SnRep, basic_rep, external_tensor, induce_young, zero_rep

INF = math.inf


class TorError(ValueError):
    pass


@dataclass
class StrandComplex:
    """The degree-n Koszul strand: chain complex of S_n-representations.

    ``diffs[i]`` is the differential from term i to term i-1 (1 <= i <= n).
    """

    n: int
    terms: list
    diffs: list

    def term_dim(self, i):
        return self.terms[i].dim if 0 <= i <= self.n else 0


def koszul_strand(M: FIModule, n: int, check: bool = True, deep: bool = False) -> StrandComplex:
    if n > M.valid_through:
        raise TorError(f"strand at degree {n} needs valid window >= {n}")
    field = M.field
    terms = []
    for i in range(n + 1):
        piece = M.pieces[n - i]
        if piece.dim == 0:
            terms.append(zero_rep(n, field))
        else:
            terms.append(
                induce_young(external_tensor(basic_rep("sign", i, field), piece))
            )
    diffs = [None]
    for i in range(1, n + 1):
        dim_m = M.dim(n - i)
        dim_m1 = M.dim(n - i + 1)
        subs_i = list(combinations(range(1, n + 1), i))
        subs_i1 = list(combinations(range(1, n + 1), i - 1))
        idx1 = {s: k for k, s in enumerate(subs_i1)}
        mat = Matrix.zeros(field, terms[i - 1].dim, terms[i].dim)
        if dim_m and dim_m1:
            piece = M.pieces[n - i]
            step = M.steps[n - i]
            for k, T in enumerate(subs_i):
                complement = [x for x in range(1, n + 1) if x not in set(T)]
                for j, t in enumerate(T):
                    T1 = T[:j] + T[j + 1:]
                    q = sorted(complement + [t]).index(t) + 1
                    cyc = Permutation.cycle(list(range(q, n - i + 2)), n - i + 1)
                    local = M.pieces[n - i + 1].perm_matrix(cyc) * step
                    sign = field.of(1 if j % 2 == 0 else -1)
                    r0 = idx1[T1] * dim_m1
                    c0 = k * dim_m
                    for r in range(dim_m1):
                        row = mat.data[r0 + r]
                        lrow = local.data[r]
                        for c in range(dim_m):
                            row[c0 + c] = field.normalize(
                                row[c0 + c] + sign * lrow[c]
                            )
        diffs.append(mat)
    strand = StrandComplex(n, terms, diffs)
    if check:
        verify_strand(strand, deep=deep)
    return strand


def verify_strand(strand: StrandComplex, deep: bool = False):
    """d^2 = 0 always; ``deep`` adds the equivariance check of every
    differential (quadratic matrix work, exercised by the test suite)."""
    for i in range(2, strand.n + 1):
        if not (strand.diffs[i - 1] * strand.diffs[i]).is_zero():
            raise TorError(f"d^2 != 0 at strand term {i} (sign-convention bug)")
    if not deep:
        return
    for i in range(1, strand.n + 1):
        d = strand.diffs[i]
        src, tgt = strand.terms[i], strand.terms[i - 1]
        for k in range(max(strand.n - 1, 0)):
            if d * src.gens[k] != tgt.gens[k] * d:
                raise TorError(f"strand differential not equivariant at term {i}")


def _strand_homology_sq(strand: StrandComplex, i: int) -> SubquotientSpace:
    field = strand.terms[0].field if strand.terms else None
    term = strand.terms[i]
    if i + 1 <= strand.n:
        boundaries = column_space_basis(strand.diffs[i + 1])
    else:
        boundaries = Matrix.zeros(term.field, term.dim, 0)
    if i >= 1:
        cycles = kernel_basis(strand.diffs[i])
    else:
        cycles = Matrix.identity(term.field, term.dim)
    return SubquotientSpace.from_sub_killed(cycles, boundaries)


def strand_homology_dim(strand: StrandComplex, i: int) -> int:
    if i < 0 or i > strand.n:
        return 0
    return _strand_homology_sq(strand, i).dim


def tor_rep(M: FIModule, i: int, n: int) -> SnRep:
    """Tor_i(M) in degree n, materialized as an honest S_n-representation."""
    strand = koszul_strand(M, n)
    if i < 0 or i > n:
        return zero_rep(n, M.field)
    sq = _strand_homology_sq(strand, i)
    gens = [sq.induced_map(g, sq) for g in strand.terms[i].gens]
    return SnRep(n, M.field, gens, dim=sq.dim)


@dataclass
class TorTable:
    i_max: int
    n_max: int
    entries: dict  # (i, n) -> dim
    kind: str = "module"

    def dim(self, i, n):
        return self.entries.get((i, n), 0)

    def row(self, i):
        return [self.dim(i, n) for n in range(self.n_max + 1)]

    def t(self, i):
        nz = [n for n in range(self.n_max + 1) if self.dim(i, n) > 0]
        return nz[-1] if nz else -INF

    def row_certified(self, i):
        """A row is certified when it vanishes at the top of the window and
        the window reaches at least two degrees past the row's start (row i
        has no cells below degree i, so vanishing there proves nothing)."""
        if i > self.n_max - 2:
            return False
        tail = [n for n in (self.n_max - 1, self.n_max) if n >= 0]
        return all(self.dim(i, n) == 0 for n in tail)

    def rows(self):
        return range(self.i_max + 1)


def default_i_max(M: FIModule) -> int:
    gd = generation_degrees(M)
    gen0 = next((n for n, d in enumerate(gd) if d > 0), None)
    if gen0 is None:
        return 0
    return max(M.valid_through - gen0, 0)


def tor_table(M: FIModule, i_max: int | None = None) -> TorTable:
    """Dimension table of Tor_i(M)_n over the certified window.

    Row zero is cross-checked against the generator-count oracle; a mismatch
    is a hard internal failure.
    """
    if i_max is None:
        i_max = default_i_max(M)
    if i_max < 0:
        raise TorError("i_max must be nonnegative")
    n_max = M.valid_through
    entries = {}
    for n in range(n_max + 1):
        strand = koszul_strand(M, n)
        for i in range(0, min(i_max, n) + 1):
            d = strand_homology_dim(strand, i)
            if d:
                entries[(i, n)] = d
    oracle = generation_degrees(M)
    for n in range(n_max + 1):
        if entries.get((0, n), 0) != oracle[n]:
            raise TorError(
                f"Tor_0 row disagrees with the generator-count oracle at degree {n}: "
                f"{entries.get((0, n), 0)} vs {oracle[n]}"
            )
    return TorTable(i_max, n_max, entries)


@dataclass
class RegularityReport:
    reg: float  # int or -inf
    witnesses: list  # (i, n) cells attaining reg
    uncertified_rows: list
    table: TorTable

    @property
    def certified(self):
        return not self.uncertified_rows


def regularity(M: FIModule, i_max: int | None = None,
               table: TorTable | None = None) -> RegularityReport:
    """reg = max over certified rows of t_i - i, with witnesses."""
    if table is None:
        table = tor_table(M, i_max)
    reg = -INF
    witnesses = []
    uncertified = []
    for i in table.rows():
        if not table.row_certified(i):
            uncertified.append(i)
            continue
        ti = table.t(i)
        if ti == -INF:
            continue
        if ti - i > reg:
            reg = ti - i
            witnesses = [(i, ti)]
        elif ti - i == reg:
            witnesses.append((i, ti))
    return RegularityReport(reg, witnesses, uncertified, table)
