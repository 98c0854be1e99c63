"""Exhaustive verification of the majorization-monotonicity theorems.

Energy ties are real (whole families can sit at the integer value), so every
comparison here is exact: integer energy parts are compared as integers and
the irrational corrections through certified root brackets, refined with
exact rational bisection until disjoint.  Float equality is never used.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .charpoly import Sign, lambda_s1_sign
from .errors import NotMajorized
from .partitions import (
    Partition,
    Verdict,
    complete_split,
    elementary_chain,
    enumerate_class,
    enumerate_partitions,
    majorizes,
    split_h,
    turan,
    turan_h,
)
from .spectrum import (
    EnergyReport,
    IsolatedRoot,
    energy,
    inertia,
    spectral_radius_root,
)

_REFINE_ROUNDS = 6
_REFINE_STEPS = 50


def _compare_roots(a: IsolatedRoot, b: IsolatedRoot) -> int:
    """-1/0/+1 for the exact roots behind two certified brackets."""
    for _ in range(_REFINE_ROUNDS):
        if a.hi_exact < b.lo_exact:
            return -1
        if b.hi_exact < a.lo_exact:
            return 1
        a = a.refined(_REFINE_STEPS)
        b = b.refined(_REFINE_STEPS)
    return 0  # indistinguishable at ~2^-300; treated as a tie


def compare_energy(a: EnergyReport, b: EnergyReport) -> int:
    """Exact order on energies: integer parts first, then theta brackets."""
    if a.integer_part != b.integer_part:
        # theta in (0,1) keeps each value inside [ip, ip+2)
        return -1 if a.integer_part < b.integer_part else 1
    if a.theta_root is None and b.theta_root is None:
        return 0
    if a.theta_root is None:
        return -1  # theta strictly positive on the other side
    if b.theta_root is None:
        return 1
    # theta = -lambda, so larger energy means smaller lambda
    return -_compare_roots(a.theta_root, b.theta_root)


def compare_radius(p: Partition, q: Partition) -> int:
    return _compare_roots(spectral_radius_root(p), spectral_radius_root(q))


@dataclass
class ScanReport:
    quantity: str
    n: int
    t: int
    h: Optional[int]
    values: list[tuple[Partition, float]]
    argmax: list[Partition]
    argmin: list[Partition]
    max_unique: bool
    min_unique: bool
    violated_claims: list[str] = field(default_factory=list)
    signs: dict[Partition, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "quantity": self.quantity,
            "n": self.n,
            "t": self.t,
            "values": [
                {"partition": str(p), "value": v} for p, v in self.values
            ],
            "argmax": [str(p) for p in self.argmax],
            "argmin": [str(p) for p in self.argmin],
            "max_unique": self.max_unique,
            "min_unique": self.min_unique,
            "violated_claims": self.violated_claims,
        }
        if self.h is not None:
            out["h"] = self.h
        if self.signs:
            out["lambda_s1_signs"] = {str(p): s for p, s in self.signs.items()}
        return out

    def to_csv(self) -> str:
        lines = ["partition,energy,radius,inertia"]
        for p, _ in self.values:
            en = energy(p)
            rho = spectral_radius_root(p)
            ine = inertia(p)
            lines.append(
                f"\"{p}\",{en.value:.12g},{rho.value:.12g},"
                f"({ine.n_plus} {ine.n_zero} {ine.n_minus})"
            )
        return "\n".join(lines)


def _extrema(members, cmp):
    """argmax and argmin under an exact comparator (-1/0/+1)."""
    argmax = [members[0]]
    argmin = [members[0]]
    for m in members[1:]:
        c = cmp(m, argmax[0])
        if c > 0:
            argmax = [m]
        elif c == 0:
            argmax.append(m)
        c = cmp(m, argmin[0])
        if c < 0:
            argmin = [m]
        elif c == 0:
            argmin.append(m)
    return argmax, argmin


def scan_energy(n: int, t: int) -> ScanReport:
    """Energy over every partition of n into t parts; split max, Turan min.

    Turan minimality is unique exactly when n <= 2t+1; above that ties are
    guaranteed (several partitions with all parts >= 2 share 8(n-t)).
    """
    members = list(enumerate_partitions(n, t))
    reports = {p: energy(p) for p in members}
    argmax, argmin = _extrema(
        members, lambda a, b: compare_energy(reports[a], reports[b])
    )
    s_nt, t_nt = complete_split(n, t), turan(n, t)
    violated: list[str] = []
    if s_nt not in argmax:
        violated.append(f"energy max not at split graph {s_nt}")
    if len(argmax) != 1:
        violated.append(f"energy max not unique: {[str(p) for p in argmax]}")
    if t_nt not in argmin:
        violated.append(f"energy min not at Turan graph {t_nt}")
    min_unique = len(argmin) == 1
    if (n <= 2 * t + 1) != min_unique:
        violated.append(
            f"Turan-min uniqueness is {min_unique}, expected {n <= 2 * t + 1}"
        )
    return ScanReport(
        quantity="energy",
        n=n,
        t=t,
        h=None,
        values=[(p, reports[p].value) for p in members],
        argmax=argmax,
        argmin=argmin,
        max_unique=len(argmax) == 1,
        min_unique=min_unique,
        violated_claims=violated,
    )


def scan_energy_h(n: int, t: int, h: int) -> ScanReport:
    """Energy over the class M(n,t,h) with exactly h singleton parts.

    Extremality at S_{n,t,h}/T_{n,t,h} always holds; uniqueness of both is
    asserted only under the paper-style condition that the Turan-like
    minimizer has lambda_{s+1} <= 0, and merely recorded otherwise.
    """
    members = list(enumerate_class(n, t, h))
    reports = {p: energy(p) for p in members}
    signs = {p: lambda_s1_sign(p).value for p in members}
    argmax, argmin = _extrema(
        members, lambda a, b: compare_energy(reports[a], reports[b])
    )
    s_nth, t_nth = split_h(n, t, h), turan_h(n, t, h)
    violated: list[str] = []
    if s_nth not in argmax:
        violated.append(f"energy max not at {s_nth}")
    if t_nth not in argmin:
        violated.append(f"energy min not at {t_nth}")
    if lambda_s1_sign(t_nth) is not Sign.POSITIVE:
        if len(argmax) != 1:
            violated.append("max not unique despite lambda_{s+1}(T) <= 0")
        if len(argmin) != 1:
            violated.append("min not unique despite lambda_{s+1}(T) <= 0")
    return ScanReport(
        quantity="energy",
        n=n,
        t=t,
        h=h,
        values=[(p, reports[p].value) for p in members],
        argmax=argmax,
        argmin=argmin,
        max_unique=len(argmax) == 1,
        min_unique=len(argmin) == 1,
        violated_claims=violated,
        signs=signs,
    )


def scan_radius(n: int, t: int) -> ScanReport:
    """Spectral radius over every partition; strict unique extrema."""
    members = list(enumerate_partitions(n, t))
    roots = {p: spectral_radius_root(p) for p in members}
    argmax, argmin = _extrema(
        members, lambda a, b: _compare_roots(roots[a], roots[b])
    )
    s_nt, t_nt = complete_split(n, t), turan(n, t)
    violated: list[str] = []
    if argmax != [s_nt]:
        violated.append(f"radius max not uniquely at {s_nt}")
    if argmin != [t_nt]:
        violated.append(f"radius min not uniquely at {t_nt}")
    return ScanReport(
        quantity="radius",
        n=n,
        t=t,
        h=None,
        values=[(p, roots[p].value) for p in members],
        argmax=argmax,
        argmin=argmin,
        max_unique=len(argmax) == 1,
        min_unique=len(argmin) == 1,
        violated_claims=violated,
    )


@dataclass
class ChainStepRecord:
    partition: Partition
    radius: float
    energy_value: float
    radius_strictly_decreased: bool
    energy_nonincreasing: bool

    def to_json(self) -> dict:
        return {
            "partition": str(self.partition),
            "radius": self.radius,
            "energy": self.energy_value,
            "radius_strictly_decreased": self.radius_strictly_decreased,
            "energy_nonincreasing": self.energy_nonincreasing,
        }


@dataclass
class ChainReport:
    start: Partition
    steps: list[ChainStepRecord]
    ok: bool

    def to_json(self) -> dict:
        return {
            "start": str(self.start),
            "steps": [s.to_json() for s in self.steps],
            "ok": self.ok,
        }


def verify_chain_monotone(y: Partition, x: Partition) -> ChainReport:
    """Along an elementary chain y > ... > x, certify that the radius
    strictly decreases at every step and the energy never increases."""
    if majorizes(y, x) is not Verdict.STRICT:
        raise NotMajorized(f"{y} does not strictly majorize {x}")
    chain = elementary_chain(y, x)
    prev = y
    steps: list[ChainStepRecord] = []
    ok = True
    for cur, _step in chain:
        rho_cmp = compare_radius(prev, cur)
        en_cmp = compare_energy(energy(prev), energy(cur))
        rec = ChainStepRecord(
            partition=cur,
            radius=spectral_radius_root(cur).value,
            energy_value=energy(cur).value,
            radius_strictly_decreased=rho_cmp > 0,
            energy_nonincreasing=en_cmp >= 0,
        )
        ok = ok and rec.radius_strictly_decreased and rec.energy_nonincreasing
        steps.append(rec)
        prev = cur
    return ChainReport(start=y, steps=steps, ok=ok)


def elementary_neighbors(p: Partition) -> list[Partition]:
    """All partitions one elementary step below p (unit moved p_a -> p_b
    with p_a >= p_b + 2), deduplicated after canonical sorting."""
    out = set()
    parts = p.parts
    for a in range(len(parts)):
        for b in range(len(parts)):
            if a != b and parts[a] >= parts[b] + 2:
                moved = list(parts)
                moved[a] -= 1
                moved[b] += 1
                out.add(Partition(tuple(sorted(moved, reverse=True))))
    return sorted(out)


def scan_report_to_json_str(report: ScanReport) -> str:
    return json.dumps(report.to_json())
