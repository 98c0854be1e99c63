"""Independent ground truth: dense Jacobi eigensolver and verification sweeps.

This module shares no closed-form code with charpoly/spectrum; eigenvalues
come from plain cyclic Jacobi rotations on the explicitly built matrix.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ._kernels import jacobi_eigensystem
from .charpoly import det_delta_exact
from .errors import InfeasibleParameters, NoConvergence
from .matrices import DenseSymMatrix, sqdist_from_partition
from .partitions import Partition, enumerate_partitions
from .spectrum import energy, full_spectrum, inertia

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100


@dataclass(frozen=True)
class EigenResult:
    eigenvalues: tuple[float, ...]  # descending
    iterations: int
    off_norm: float


def symmetric_eigenvalues(m: DenseSymMatrix, tol: float = DEFAULT_TOL) -> EigenResult:
    """All eigenvalues via cyclic Jacobi, off-norm driven below tol * ||M||."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    norm = float(np.linalg.norm(m.data))
    tol_abs = tol * norm if norm > 0 else tol
    vals, sweeps, off = jacobi_eigensystem(m.data, tol_abs, MAX_SWEEPS)
    if off > tol_abs:
        raise NoConvergence(
            f"off-diagonal norm {off} above {tol_abs} after {sweeps} sweeps"
        )
    return EigenResult(
        eigenvalues=tuple(sorted(vals.tolist(), reverse=True)),
        iterations=sweeps,
        off_norm=off,
    )


@dataclass
class VerificationRecord:
    partition: Partition
    max_eig_deviation: float
    inertia_agrees: bool
    energy_deviation: float
    det_agrees: bool
    passed: bool

    def to_json(self) -> dict:
        return {
            "partition": str(self.partition),
            "max_eig_deviation": self.max_eig_deviation,
            "inertia_agrees": self.inertia_agrees,
            "energy_deviation": self.energy_deviation,
            "det_agrees": self.det_agrees,
            "passed": self.passed,
        }


def verify_partition(
    p: Partition,
    tol: float = DEFAULT_TOL,
    eig_tol: float = 1e-9,
    zero_threshold: float = 1e-7,
) -> VerificationRecord:
    """Cross-check every closed-form invariant against the Jacobi oracle."""
    delta = sqdist_from_partition(p)
    oracle = symmetric_eigenvalues(delta, tol)
    closed = full_spectrum(p).eigenvalues()

    max_dev = max(
        abs(a - b) for a, b in zip(closed, oracle.eigenvalues)
    )

    ine = inertia(p)
    n_plus = sum(1 for v in oracle.eigenvalues if v > zero_threshold)
    n_minus = sum(1 for v in oracle.eigenvalues if v < -zero_threshold)
    n_zero = p.n - n_plus - n_minus
    inertia_ok = (ine.n_plus, ine.n_zero, ine.n_minus) == (n_plus, n_zero, n_minus)

    en = energy(p)
    oracle_energy = sum(abs(v) for v in oracle.eigenvalues)
    energy_dev = abs(en.value - oracle_energy)

    det_exact = det_delta_exact(p)
    det_oracle = math.prod(oracle.eigenvalues)
    if det_exact == 0:
        # zero detected exactly; oracle product must be numerically tiny
        scale = math.prod(max(abs(v), 1.0) for v in oracle.eigenvalues)
        det_ok = abs(det_oracle) <= 1e-6 * scale
    else:
        det_ok = abs(det_oracle - det_exact) <= 1e-6 * abs(det_exact)

    passed = max_dev <= eig_tol and inertia_ok and energy_dev <= 1e-7 and det_ok
    return VerificationRecord(
        partition=p,
        max_eig_deviation=max_dev,
        inertia_agrees=inertia_ok,
        energy_deviation=energy_dev,
        det_agrees=det_ok,
        passed=passed,
    )


@dataclass
class SweepSummary:
    n_max: int
    checked: int
    failures: list[VerificationRecord] = field(default_factory=list)
    worst_eig_deviation: float = 0.0
    worst_energy_deviation: float = 0.0
    records: list[VerificationRecord] = field(default_factory=list)

    @property
    def failure_count(self) -> int:
        return len(self.failures)

    def to_json_lines(self) -> str:
        return "\n".join(json.dumps(r.to_json()) for r in self.records)

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "checked": self.checked,
            "failures": self.failure_count,
            "worst_eig_deviation": self.worst_eig_deviation,
            "worst_energy_deviation": self.worst_energy_deviation,
        }


def _thread_count() -> int:
    raw = os.environ.get("SQDIST_THREADS", "0")
    try:
        k = int(raw)
    except ValueError:
        k = 0
    return k if k > 0 else 1


def sweep(n_max: int, tol: float = DEFAULT_TOL) -> SweepSummary:
    """verify_partition over every partition with 2 <= t <= n <= n_max."""
    if n_max < 2:
        raise InfeasibleParameters("sweep needs n_max >= 2")
    targets = [
        p
        for n in range(2, n_max + 1)
        for t in range(2, n + 1)
        for p in enumerate_partitions(n, t)
    ]
    workers = _thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda p: verify_partition(p, tol), targets))
    else:
        records = [verify_partition(p, tol) for p in targets]
    summary = SweepSummary(n_max=n_max, checked=len(records), records=records)
    for rec in records:
        if not rec.passed:
            summary.failures.append(rec)
        summary.worst_eig_deviation = max(
            summary.worst_eig_deviation, rec.max_eig_deviation
        )
        summary.worst_energy_deviation = max(
            summary.worst_energy_deviation, rec.energy_deviation
        )
    return summary
