"""Canonical partitions, majorization order, elementary chains, extremal families.

A complete multipartite graph K_{n1,...,nt} is identified (up to isomorphism)
with the descending tuple of its part sizes.  Everything downstream keys off
this tuple.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    EmptyInput,
    Identical,
    InfeasibleParameters,
    MismatchedLength,
    MismatchedTotals,
    NonPositivePart,
    NotMajorized,
    PartCountBelowTwo,
)


@dataclass(frozen=True, order=True)
class Partition:
    """Descending tuple of positive part sizes; the sole graph identifier.

    Derived counts: n = sum of parts, t = number of parts, h = number of
    singleton parts, s = t - h (parts of size >= 2 come first).
    """

    parts: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def h(self) -> int:
        return sum(1 for p in self.parts if p == 1)

    @property
    def s(self) -> int:
        return self.t - self.h

    @property
    def big_parts(self) -> tuple[int, ...]:
        """The s parts of size >= 2."""
        return self.parts[: self.s]

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def to_json(self) -> dict:
        return {
            "parts": list(self.parts),
            "n": self.n,
            "t": self.t,
            "h": self.h,
            "s": self.s,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class MajorizationStep:
    """One elementary move: -1 at index j, +1 at index k, with k > j."""

    j: int
    k: int

    def __post_init__(self) -> None:
        if not self.k > self.j >= 0:
            raise ValueError("step requires k > j >= 0")


class Verdict(enum.Enum):
    STRICT = "strict"
    EQUAL = "equal-after-sort"
    INCOMPARABLE = "incomparable"
    NOT_MAJORIZED = "not-majorized"


def canonicalize(raw: Sequence[int]) -> Partition:
    """Validate and sort a raw part-size sequence into a Partition."""
    parts = list(raw)
    if not parts:
        raise EmptyInput("partition must have at least one part")
    if any(p < 1 for p in parts):
        raise NonPositivePart(f"all parts must be >= 1, got {parts}")
    if len(parts) < 2:
        raise PartCountBelowTwo(
            "need at least two parts (t = 1 gives a disconnected complement)"
        )
    return Partition(tuple(sorted(parts, reverse=True)))


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated textual form, e.g. '5,2,2,1'."""
    try:
        raw = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise NonPositivePart(f"cannot parse partition {text!r}") from exc
    return canonicalize(raw)


def _prefix_sums(parts: Sequence[int]) -> list[int]:
    out, acc = [], 0
    for p in parts:
        acc += p
        out.append(acc)
    return out


def majorizes(x: Partition, y: Partition) -> Verdict:
    """Compare two partitions in the dominance (majorization) order."""
    if x.n != y.n:
        raise MismatchedTotals(f"totals differ: {x.n} vs {y.n}")
    if x.t != y.t:
        raise MismatchedLength(f"lengths differ: {x.t} vs {y.t}")
    px, py = _prefix_sums(x.parts), _prefix_sums(y.parts)
    x_dominates = all(a >= b for a, b in zip(px, py))
    y_dominates = all(b >= a for a, b in zip(px, py))
    if x_dominates and y_dominates:
        return Verdict.EQUAL
    if x_dominates:
        return Verdict.STRICT
    if y_dominates:
        return Verdict.NOT_MAJORIZED
    return Verdict.INCOMPARABLE


def apply_step(parts: Sequence[int], step: MajorizationStep) -> tuple[int, ...]:
    out = list(parts)
    out[step.j] -= 1
    out[step.k] += 1
    return tuple(out)


def elementary_chain(
    y: Partition, x: Partition
) -> list[tuple[Partition, MajorizationStep]]:
    """Descending chain y = Y0 > Y1 > ... > Yl = x of elementary moves.

    Deterministic rule: j is the first index where the current tuple exceeds
    the target entrywise; k is the largest entrywise-short index that keeps
    every intermediate prefix sum at or above the target's (the first short
    index always qualifies, so k exists).  The unit actually moves between
    the run boundaries around j and k so every intermediate stays descending.
    """
    verdict = majorizes(y, x)
    if verdict is Verdict.EQUAL:
        raise Identical("chain endpoints are equal after sorting")
    if verdict is not Verdict.STRICT:
        raise NotMajorized(f"{y} does not strictly majorize {x}")

    cur = list(y.parts)
    tgt = list(x.parts)
    chain: list[tuple[Partition, MajorizationStep]] = []
    while cur != tgt:
        j = next(i for i, (c, g) in enumerate(zip(cur, tgt)) if c > g)
        shorts = [i for i in range(j + 1, len(cur)) if cur[i] < tgt[i]]
        # largest short index k such that prefix(cur) stays strictly above
        # prefix(tgt) on [j, k-1]; guarantees cur still majorizes tgt after
        # the move
        pc, pt = _prefix_sums(cur), _prefix_sums(tgt)
        k = shorts[0]
        for cand in reversed(shorts):
            if all(pc[i] > pt[i] for i in range(j, cand)):
                k = cand
                break
        # move between run boundaries so the tuple stays descending
        a = j
        while a + 1 < len(cur) and cur[a + 1] == cur[j]:
            a += 1
        b = k
        while b - 1 > a and cur[b - 1] == cur[k]:
            b -= 1
        step = MajorizationStep(a, b)
        cur = list(apply_step(cur, step))
        chain.append((Partition(tuple(cur)), step))
    return chain


def complete_split(n: int, t: int) -> Partition:
    """S_{n,t}: one part of n-t+1 plus t-1 singletons."""
    if not n >= t >= 2:
        raise InfeasibleParameters(f"need n >= t >= 2, got n={n}, t={t}")
    return Partition((n - t + 1,) + (1,) * (t - 1))


def turan(n: int, t: int) -> Partition:
    """T_{n,t}: the balanced partition into t parts."""
    if not n >= t >= 2:
        raise InfeasibleParameters(f"need n >= t >= 2, got n={n}, t={t}")
    q, r = divmod(n, t)
    return Partition((q + 1,) * r + (q,) * (t - r))


def _check_nth(n: int, t: int, h: int) -> int:
    s = t - h
    if not (n >= t >= 2 and h >= 0 and s >= 2 and n - h >= 2 * s):
        raise InfeasibleParameters(
            f"need t >= 2, s = t-h >= 2 and n-h >= 2s, got n={n}, t={t}, h={h}"
        )
    return s


def split_h(n: int, t: int, h: int) -> Partition:
    """S_{n,t,h}: the split-like maximizer within the class M(n,t,h)."""
    s = _check_nth(n, t, h)
    return Partition((n - 2 * (t - 1) + h,) + (2,) * (s - 1) + (1,) * h)


def turan_h(n: int, t: int, h: int) -> Partition:
    """T_{n,t,h}: balanced split of n-h over the s parts of size >= 2."""
    s = _check_nth(n, t, h)
    q, r = divmod(n - h, s)
    return Partition((q + 1,) * r + (q,) * (s - r) + (1,) * h)


def enumerate_partitions(n: int, t: int) -> Iterator[Partition]:
    """All partitions of n into exactly t parts, reverse-lexicographic."""
    if not n >= t >= 2:
        raise InfeasibleParameters(f"need n >= t >= 2, got n={n}, t={t}")

    def rec(remaining: int, count: int, cap: int) -> Iterator[tuple[int, ...]]:
        if count == 1:
            if 1 <= remaining <= cap:
                yield (remaining,)
            return
        # largest feasible first part, down to the balanced minimum
        hi = min(cap, remaining - (count - 1))
        lo = -(-remaining // count)  # ceil
        for first in range(hi, lo - 1, -1):
            for rest in rec(remaining - first, count - 1, first):
                yield (first,) + rest

    for tup in rec(n, t, n):
        yield Partition(tup)


def enumerate_class(n: int, t: int, h: int) -> Iterator[Partition]:
    """All members of M(n,t,h): exactly h singleton parts."""
    s = _check_nth(n, t, h)
    # parts >= 2 summing to n-h  <=>  parts-1 >= 1 summing to n-h-s
    for inner in enumerate_partitions(n - h - s, s):
        yield Partition(tuple(p + 1 for p in inner.parts) + (1,) * h)
