"""Job execution: build the named objects of a job spec and run its tasks.

Exit-code convention (shared with the command line driver): 0 everything
verified, 1 a verification failed, 2 the window was insufficient for a
certified answer, 3 invalid input.  Task results are cached by a content
hash of (field, window, policy, construction); set ``FIHOMLAB_CACHE_DIR``
to choose the cache location.
"""
from __future__ import annotations

import hashlib
import json
import math
import os
import time
from dataclasses import dataclass
from pathlib import Path

from .fimod import (
    FIError,
    FIModule,
    WindowExhausted,
    cokernel,
    direct_sum,
    fi_constant,
    fi_induced,
    fi_shift,
    fi_torsion_concentrated,
    fi_truncate,
    image,
    induced_morphism,
    kernel,
)
from .good_ideal import good_ideal, verify_good_ideal
from .jobspec import JobSpec
from .linalg import Matrix
from .loccoh import Policy, local_cohomology, nu_certificate, verify_main_theorem
from .report import (
    lcoh_data,
    nu_certs_data,
    regularity_data,
    render_task_text,
    theorem_data,
    tor_table_data,
)
from .reps import basic_rep
from .tor import TorError, koszul_strand, regularity, strand_homology_dim, tor_table

INF = math.inf

EXIT_OK = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_WINDOW_INSUFFICIENT = 2
EXIT_INVALID_INPUT = 3


class BuildError(ValueError):
    """Invalid object construction in a job (user input error)."""


@dataclass
class TaskResult:
    task: str
    module: str | None
    status: str          # ok | fail | window | invalid
    data: dict
    seconds: float
    cached: bool = False

    @property
    def exit_code(self):
        return {"ok": EXIT_OK, "fail": EXIT_VERIFICATION_FAILURE,
                "window": EXIT_WINDOW_INSUFFICIENT,
                "invalid": EXIT_INVALID_INPUT}[self.status]


@dataclass
class RunResult:
    job: JobSpec
    results: list
    seconds: float

    @property
    def exit_code(self):
        codes = [r.exit_code for r in self.results]
        for code in (EXIT_INVALID_INPUT, EXIT_VERIFICATION_FAILURE,
                     EXIT_WINDOW_INSUFFICIENT):
            if code in codes:
                return code
        return EXIT_OK

    def report_dict(self) -> dict:
        return {
            "field": self.job.field.name,
            "window": self.job.window,
            "policy": dict(sorted(self.job.policy.items())),
            "tasks": [
                {"task": r.task, "module": r.module, "status": r.status,
                 "data": r.data}
                for r in self.results
            ],
        }

    def report_text(self) -> str:
        parts = [f"field {self.job.field.name}, window {self.job.window}"]
        for r in self.results:
            parts.append(render_task_text(r.task, r.module, r.data))
            parts.append(f"-- status: {r.status}")
        return "\n\n".join(parts) + "\n"

    def timing_text(self) -> str:
        lines = [
            f"{r.task} {r.module or '-'}: {r.seconds:.3f}s"
            + (" (cached)" if r.cached else "")
            for r in self.results
        ]
        lines.append(f"total: {self.seconds:.3f}s")
        return "\n".join(lines) + "\n"


def policy_from_job(job: JobSpec) -> Policy:
    pol = Policy()
    if "imax" in job.policy:
        pol.i_max = job.policy["imax"]
    if "lcoh-imax" in job.policy:
        pol.lcoh_i_max = job.policy["lcoh-imax"]
    if "nu-p" in job.policy:
        pol.nu_p = job.policy["nu-p"]
    if job.policy.get("assume-window-sufficient"):
        pol.assume_window_sufficient = True
    return pol


def build_objects(job: JobSpec) -> dict:
    """Materialize every rep, module, and morphism of a job, in order."""
    field, window = job.field, job.window
    built: dict = {}
    for name, (kind, deg) in job.reps.items():
        built[name] = basic_rep(kind, deg, field)
    for name in job._definition_order:
        try:
            if name in job.modules:
                spec = job.modules[name]
                form = spec[0]
                if form == "constant":
                    built[name] = fi_constant(field, window)
                elif form == "induced":
                    if built[spec[1]].n > window:
                        raise WindowExhausted(
                            f"module {name!r}: generator degree {built[spec[1]].n} "
                            f"exceeds window {window}")
                    built[name] = fi_induced(built[spec[1]], window)
                elif form == "torsion":
                    if spec[2] > window:
                        raise WindowExhausted(
                            f"module {name!r}: concentration degree {spec[2]} "
                            f"exceeds window {window}")
                    built[name] = fi_torsion_concentrated(built[spec[1]], spec[2], window)
                elif form == "sum":
                    built[name] = direct_sum(built[spec[1]], built[spec[2]])
                elif form == "shift":
                    built[name] = fi_shift(built[spec[1]], spec[2])
                elif form == "truncate":
                    built[name] = fi_truncate(built[spec[1]], spec[2])
                elif form == "kernel":
                    built[name] = kernel(built[spec[1]])[0]
                elif form == "cokernel":
                    built[name] = cokernel(built[spec[1]])[0]
                elif form == "image":
                    built[name] = image(built[spec[1]])[0]
            else:
                _, repname, target, entries = job.morphisms[name]
                f0 = Matrix.from_rows(
                    field, [[field.of(x) for x in row] for row in entries],
                    ncols=built[repname].dim,
                )
                built[name] = induced_morphism(built[repname], built[target], f0)
        except WindowExhausted as exc:
            raise
        except FIError as exc:
            raise BuildError(f"building {name!r}: {exc}") from exc
    return built


# -- task execution ----------------------------------------------------


def _run_koszul_check(field, window) -> TaskResult:
    t0 = time.monotonic()
    A = fi_constant(field, window)
    ok = True
    h0 = []
    positive = 0
    for n in range(window + 1):
        strand = koszul_strand(A, n, check=True, deep=True)
        h0.append(strand_homology_dim(strand, 0))
        positive += sum(strand_homology_dim(strand, i) for i in range(1, n + 1))
    expected_h0 = [1] + [0] * window
    ok = h0 == expected_h0 and positive == 0
    data = {"window": window, "ok": ok, "h0": h0,
            "positive_homology_total": positive}
    return TaskResult("koszul-check", None, "ok" if ok else "fail", data,
                      time.monotonic() - t0)


def _run_good_ideal_check(field) -> TaskResult:
    t0 = time.monotonic()
    checks = {}
    ok = True
    for p in (2, 3):
        if field.characteristic == p:
            continue
        rep = verify_good_ideal(good_ideal(p, field))
        checks[str(p)] = {k: bool(v) for k, v in rep.items()}
        ok = ok and rep["all_pass"]
    data = {"field": field.name, "checks": checks}
    return TaskResult("good-ideal-check", None, "ok" if ok else "fail", data,
                      time.monotonic() - t0)


def run_task(task: str, modname, built: dict, job: JobSpec,
             policy: Policy) -> TaskResult:
    field = job.field
    if task == "koszul-check":
        return _run_koszul_check(field, job.window)
    if task == "good-ideal-check":
        return _run_good_ideal_check(field)
    M: FIModule = built[modname]
    t0 = time.monotonic()
    try:
        if task == "tor":
            data = tor_table_data(tor_table(M, policy.tor_i_max))
            status = "ok"
        elif task == "reg":
            rep = regularity(M, policy.tor_i_max)
            data = regularity_data(rep)
            # uncertified rows are tolerable as long as their visible cells
            # stay within the regularity bound computed from certified rows
            bounded = all(
                rep.table.t(i) - i <= rep.reg for i in rep.uncertified_rows
                if rep.table.t(i) != -INF
            )
            status = ("ok" if rep.certified or bounded
                      or policy.assume_window_sufficient else "window")
        elif task == "lcoh":
            table = local_cohomology(M, policy=policy)
            data = lcoh_data(table)
            status = "ok" if table.complete or policy.assume_window_sufficient else "window"
        elif task == "nu":
            gi = good_ideal(policy.choose_p(field), field)
            certs = nu_certificate(M, gi, policy)
            data = {"certificates": nu_certs_data(certs)}
            status = "ok" if all(c.passed for c in certs) else "fail"
        elif task == "verify":
            rep = verify_main_theorem(M, policy)
            data = theorem_data(rep)
            status = {"PASS": "ok", "FAIL": "fail", "UNCERTIFIED": "window"}[rep.verdict]
            if status == "window" and policy.assume_window_sufficient:
                status = "ok" if rep.lhs == rep.rhs else "fail"
        else:
            raise BuildError(f"unknown task {task!r}")
    except WindowExhausted as exc:
        data = {"error": str(exc)}
        status = "window"
    except TorError:
        # internal consistency failure (oracle mismatch); never downgrade
        raise
    except (BuildError, ValueError) as exc:
        data = {"error": str(exc)}
        status = "invalid"
    return TaskResult(task, modname, status, data, time.monotonic() - t0)


# -- caching -----------------------------------------------------------


def _closure_key(job: JobSpec, name) -> list:
    """Construction of ``name`` with every referenced name expanded."""
    if name in job.reps:
        return ["rep", *job.reps[name]]
    if name in job.modules:
        spec = job.modules[name]
        out = [spec[0]]
        for arg in spec[1:]:
            out.append(_closure_key(job, arg) if isinstance(arg, str) else arg)
        return out
    _, rep, target, entries = job.morphisms[name]
    return ["morphism", _closure_key(job, rep), _closure_key(job, target),
            [[str(x) for x in row] for row in entries]]


def task_cache_key(job: JobSpec, task: str, modname) -> str:
    payload = {
        "field": job.field.name,
        "window": job.window,
        "policy": dict(sorted(job.policy.items())),
        "task": task,
        "construction": _closure_key(job, modname) if modname else None,
    }
    blob = json.dumps(payload, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


def cache_dir() -> Path:
    root = os.environ.get("FIHOMLAB_CACHE_DIR")
    if root:
        return Path(root)
    return Path.home() / ".cache" / "fihomlab"


def run_job(job: JobSpec, use_cache: bool = True) -> RunResult:
    policy = policy_from_job(job)
    t0 = time.monotonic()
    try:
        built = build_objects(job)
    except WindowExhausted as exc:
        res = TaskResult("build", None, "window", {"error": str(exc)}, 0.0)
        return RunResult(job, [res], time.monotonic() - t0)
    except (BuildError, FIError) as exc:
        res = TaskResult("build", None, "invalid", {"error": str(exc)}, 0.0)
        return RunResult(job, [res], time.monotonic() - t0)
    cdir = cache_dir()
    results = []
    for task, modname in job.tasks:
        key = task_cache_key(job, task, modname)
        cpath = cdir / f"{key}.json"
        if use_cache and cpath.exists():
            cached = json.loads(cpath.read_text())
            results.append(TaskResult(task, modname, cached["status"],
                                      cached["data"], 0.0, cached=True))
            continue
        res = run_task(task, modname, built, job, policy)
        results.append(res)
        if use_cache and res.status in ("ok", "fail", "window"):
            try:
                cdir.mkdir(parents=True, exist_ok=True)
                cpath.write_text(json.dumps(
                    {"status": res.status, "data": res.data}, sort_keys=True))
            except OSError:
                pass
    return RunResult(job, results, time.monotonic() - t0)
