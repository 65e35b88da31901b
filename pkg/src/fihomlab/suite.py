"""Built-in verification corpus: a fixed set of jobs exercising the
regularity identity across module shapes and coefficient fields."""
from __future__ import annotations

from .jobspec import parse_spec
from .runner import RunResult, run_job

SUITE_JOBS = [
    (
        "rationals-basics",
        """
field Q
window 5
module A constant
rep v2 trivial 2
module T torsion v2 2
task verify A
task verify T
task koszul-check
task good-ideal-check
""",
    ),
    (
        "f5-mixed",
        """
field F5
window 6
module A constant
rep v1 trivial 1
morphism f induced v1 A 1
module Aplus image f
rep sg sign 2
module Isg induced sg
rep t1 trivial 1
module T1 torsion t1 1
module Mix sum Isg T1
rep v2 trivial 2
module T torsion v2 2
task verify A
task verify Aplus
task verify T
task verify Mix
task tor Isg
task lcoh Aplus
""",
    ),
    (
        "f7-torsion",
        """
field F7
window 5
rep r2 regular 2
module T torsion r2 2
module A constant
task verify A
task verify T
task nu T
""",
    ),
    (
        "f2-ideal-p3",
        """
field F2
window 5
policy nu-p 3
rep t2 trivial 2
module T torsion t2 2
task verify T
task good-ideal-check
""",
    ),
]


def run_suite(use_cache: bool = True) -> list[tuple[str, RunResult]]:
    out = []
    for name, text in SUITE_JOBS:
        job = parse_spec(text)
        out.append((name, run_job(job, use_cache=use_cache)))
    return out
