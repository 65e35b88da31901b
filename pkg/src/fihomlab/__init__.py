"""Exact homological invariants of finitely generated FI-modules.

The package computes, over an exact coefficient field (Q or a prime field),
Tor tables and Castelnuovo-Mumford regularity via degreewise Koszul strands,
local cohomology via the shift recursion, and an annihilator invariant of
symmetric-group representations coming from good ideals of group algebras.
The central harness checks the identity

    reg(M) = max( t_0(M), max_i (maxdeg H^i(M) + i) )

on concrete modules, with the two sides computed by independent pipelines
and certified by the annihilator invariant of top-degree Tor pieces.
"""
from .fields import GF, QQ, Field, FieldError, field_by_name
from .linalg import Matrix, SubquotientSpace, kernel_basis, column_space_basis, rref
from .permutations import Permutation, all_permutations, factor_adjacent
from .group_algebra import GroupAlgebraElement
from .reps import (
    BlockRep,
    SnRep,
    act,
    basic_rep,
    direct_sum_reps,
    external_tensor,
    induce_young,
    restrict_rep,
    zero_rep,
)
from .good_ideal import (
    GoodIdeal,
    NuValue,
    block_embed,
    good_ideal,
    nu,
    nu_bruteforce,
    verify_good_ideal,
)
from .fimod import (
    FIModule,
    FIMorphism,
    FIError,
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
from .tor import (
    RegularityReport,
    TorTable,
    koszul_strand,
    regularity,
    strand_homology_dim,
    tor_rep,
    tor_table,
)
from .complexes import FIComplex, complex_cohomology, hyper_tor, hyper_tor_rep
from .loccoh import (
    LocCohTable,
    NuCertificate,
    Policy,
    TheoremReport,
    is_semi_induced,
    local_cohomology,
    min_acyclic_shift,
    nu_certificate,
    verify_main_theorem,
)
from .jobspec import JobSpec, SpecParseError, parse_spec
from .runner import RunResult, TaskResult, run_job
from .suite import run_suite

__version__ = "0.1.0"
