"""Symmetric group representations and Young-subgroup induction.

An :class:`SnRep` stores only the matrices of the adjacent transpositions
``s_1 .. s_{n-1}``; arbitrary permutations act through
:func:`~fihomlab.permutations.factor_adjacent`.  Construction verifies the
Coxeter relations (involutions, braid, distant commutation), which certifies
a well-defined S_n-action.
"""
from __future__ import annotations

from itertools import combinations

from .fields import Field, FieldError
from .group_algebra import GroupAlgebraElement
from .linalg import Matrix, kronecker
from .permutations import Permutation, factor_adjacent


class RepError(ValueError):
    pass


class SnRep:
    __slots__ = ("n", "dim", "field", "gens", "_perm_cache")

    def __init__(self, n, field, gens, dim=None, check=True):
        self.n = n
        self.field = field
        self.gens = tuple(gens)
        if len(self.gens) != max(n - 1, 0):
            raise RepError(f"S_{n} needs {max(n - 1, 0)} generator matrices")
        if dim is None:
            dim = self.gens[0].rows if self.gens else 0
        self.dim = dim
        self._perm_cache = {}
        if check:
            self.verify()

    def verify(self):
        """Check the Coxeter presentation on the generator matrices."""
        eye = Matrix.identity(self.field, self.dim)
        g = self.gens
        for i, m in enumerate(g, start=1):
            if (m.rows, m.cols) != (self.dim, self.dim):
                raise RepError(f"generator s_{i} has wrong shape")
            if m * m != eye:
                raise RepError(f"s_{i}^2 != identity")
        for i in range(len(g) - 1):
            if g[i] * g[i + 1] * g[i] != g[i + 1] * g[i] * g[i + 1]:
                raise RepError(f"braid relation fails at s_{i + 1}")
        for i in range(len(g)):
            for j in range(i + 2, len(g)):
                if g[i] * g[j] != g[j] * g[i]:
                    raise RepError(f"distant generators s_{i + 1}, s_{j + 1} do not commute")

    def gen(self, i):
        """Matrix of the adjacent transposition s_i, 1-based."""
        return self.gens[i - 1]

    def perm_matrix(self, perm: Permutation) -> Matrix:
        if perm.n != self.n:
            raise RepError("degree mismatch")
        key = perm.images
        cached = self._perm_cache.get(key)
        if cached is not None:
            return cached
        out = Matrix.identity(self.field, self.dim)
        for i in factor_adjacent(perm):
            out = out * self.gens[i - 1]
        self._perm_cache[key] = out
        return out

    def is_zero(self):
        return self.dim == 0

    def __eq__(self, other):
        return (
            isinstance(other, SnRep)
            and self.n == other.n
            and self.field == other.field
            and self.gens == other.gens
            and self.dim == other.dim
        )

    def __repr__(self):
        return f"SnRep(S_{self.n}, dim={self.dim}, {self.field!r})"


def zero_rep(n, field):
    z = Matrix.zeros(field, 0, 0)
    return SnRep(n, field, [z] * max(n - 1, 0), dim=0, check=False)


def basic_rep(kind: str, n: int, field: Field) -> SnRep:
    """One of the standard representations: trivial, sign, regular, natural."""
    if n < 0:
        raise RepError("negative degree")
    if kind == "trivial":
        one = Matrix.from_rows(field, [[1]])
        return SnRep(n, field, [one] * max(n - 1, 0), dim=1, check=False)
    if kind == "sign":
        neg = Matrix.from_rows(field, [[-1]])
        return SnRep(n, field, [neg] * max(n - 1, 0), dim=1, check=False)
    if kind == "natural":
        gens = []
        for i in range(1, n):
            m = Matrix.identity(field, n)
            m.data[i - 1], m.data[i] = m.data[i], m.data[i - 1]
            gens.append(m)
        return SnRep(n, field, gens, dim=n)
    if kind == "regular":
        from .permutations import all_permutations

        elems = all_permutations(n)
        index = {p.images: k for k, p in enumerate(elems)}
        gens = []
        for i in range(1, n):
            s = Permutation.adjacent(i, n)
            m = Matrix.zeros(field, len(elems), len(elems))
            for k, p in enumerate(elems):
                m.data[index[(s * p).images]][k] = field.one
            gens.append(m)
        return SnRep(n, field, gens, dim=len(elems))
    raise RepError(f"unknown basic rep kind {kind!r}")


def direct_sum_reps(reps) -> SnRep:
    reps = list(reps)
    if not reps:
        raise RepError("empty direct sum")
    n, field = reps[0].n, reps[0].field
    from .linalg import block_diag

    gens = []
    for i in range(max(n - 1, 0)):
        gens.append(block_diag(field, [r.gens[i] for r in reps]))
    return SnRep(n, field, gens, dim=sum(r.dim for r in reps), check=False)


def restrict_rep(rep: SnRep, m: int) -> SnRep:
    """Restriction to S_m acting on the first m letters."""
    if m > rep.n:
        raise RepError("cannot restrict upward")
    return SnRep(m, rep.field, rep.gens[: max(m - 1, 0)], dim=rep.dim, check=False)


def conjugate_rep(rep: SnRep, change: Matrix) -> SnRep:
    """Same action in a new basis: generators become C^-1 g C."""
    from .linalg import solve

    inv = solve(change, Matrix.identity(rep.field, rep.dim))
    gens = [inv * g * change for g in rep.gens]
    return SnRep(rep.n, rep.field, gens, dim=rep.dim, check=False)


class BlockRep:
    """An external tensor U boxtimes W: a representation of S_a x S_b.

    Generators are indexed by the adjacent transpositions of S_{a+b} that lie
    in the Young subgroup, i.e. every s_i with ``i != a``.  Basis ordering is
    (U basis) major, (W basis) minor.
    """

    def __init__(self, U: SnRep, W: SnRep):
        if U.field != W.field:
            raise FieldError("external tensor over mixed fields")
        self.U = U
        self.W = W
        self.a = U.n
        self.b = W.n
        self.field = U.field
        self.dim = U.dim * W.dim

    def gen(self, i):
        """Matrix of s_i on the block group; s_a is absent by design."""
        a, b = self.a, self.b
        if 1 <= i <= a - 1:
            return kronecker(self.U.gens[i - 1], Matrix.identity(self.field, self.W.dim))
        if a + 1 <= i <= a + b - 1:
            return kronecker(Matrix.identity(self.field, self.U.dim), self.W.gens[i - a - 1])
        raise RepError(f"s_{i} is not in the Young subgroup S_{a} x S_{b}")

    def pair_matrix(self, pi: Permutation, rho: Permutation) -> Matrix:
        """Matrix of (pi, rho) in S_a x S_b."""
        return kronecker(self.U.perm_matrix(pi), self.W.perm_matrix(rho))


def external_tensor(U: SnRep, W: SnRep) -> BlockRep:
    return BlockRep(U, W)


def _coset_rep(subset, n):
    """Order-preserving permutation sending 1..a to ``subset``, rest to the complement."""
    subset = tuple(subset)
    rest = [x for x in range(1, n + 1) if x not in set(subset)]
    return Permutation(list(subset) + rest)


def induce_young(block: BlockRep, check: bool = False) -> SnRep:
    """Induction Ind_{S_a x S_b}^{S_n} of an external tensor, n = a + b.

    Basis: for each a-subset S of {1..n} in lexicographic order (S marks
    where the first block lands), a copy of the U tensor W basis transported
    by the order-preserving coset representative.
    """
    a, b = block.a, block.b
    n = a + b
    field = block.field
    subsets = list(combinations(range(1, n + 1), a))
    sub_index = {s: k for k, s in enumerate(subsets)}
    reps = {s: _coset_rep(s, n) for s in subsets}
    inner = block.dim
    dim = len(subsets) * inner
    gens = []
    for i in range(1, n):
        s_i = Permutation.adjacent(i, n)
        m = Matrix.zeros(field, dim, dim)
        for s in subsets:
            g_s = reps[s]
            t = tuple(sorted(s_i(x) for x in s))
            h = reps[t].inverse() * s_i * g_s
            # h lies in the Young subgroup; split it into its two block parts
            pi = Permutation([h(x) for x in range(1, a + 1)])
            rho = Permutation([h(x) - a for x in range(a + 1, n + 1)])
            blockmat = block.pair_matrix(pi, rho)
            r0 = sub_index[t] * inner
            c0 = sub_index[s] * inner
            for r in range(inner):
                row = m.data[r0 + r]
                brow = blockmat.data[r]
                for c in range(inner):
                    row[c0 + c] = brow[c]
        gens.append(m)
    # Coxeter verification is quadratic-in-dim matrix work; callers on hot
    # paths skip it and the test suite covers the construction instead.
    return SnRep(n, field, gens, dim=dim, check=check)


def act(x: GroupAlgebraElement, rep: SnRep) -> Matrix:
    """Matrix by which a group algebra element acts on a representation."""
    if x.n != rep.n:
        raise RepError("degree mismatch between algebra element and representation")
    if x.field != rep.field:
        raise FieldError("field mismatch")
    out = Matrix.zeros(rep.field, rep.dim, rep.dim)
    for perm, c in x.terms.items():
        out = out + rep.perm_matrix(perm).scale(c)
    return out
