"""The principal ideals below rectangles: membership, duality, meet and join.

Membership below the m x n rectangle in the k-Young order has a box
characterization: fit inside the rectangle with at most k - m + 1 parts
strictly smaller than m.  Within such an ideal the order is plain
containment and the lattice operations are componentwise.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .partitions import Parts, contains, part_at, partitions_in_box


@dataclass(frozen=True)
class IdealSpec:
    """Rectangle width m, height n, and the lattice parameter k, with m <= k."""

    m: int
    n: int
    k: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"m and n must be positive: m={self.m} n={self.n}")
        if self.k < self.m:
            raise ValueError(f"need k >= m: m={self.m} k={self.k}")

    @property
    def rectangle(self) -> Parts:
        return (self.m,) * self.n

    @property
    def top_rank(self) -> int:
        return self.m * self.n


def short_rows(p: Parts, m: int) -> int:
    """Number of positive parts strictly smaller than m."""
    return sum(1 for v in p if v < m)


def is_member(p: Parts, spec: IdealSpec) -> bool:
    """Box fit plus the short-row bound."""
    if not contains(p, spec.rectangle):
        return False
    return short_rows(p, spec.m) <= spec.k - spec.m + 1


def enumerate_ideal(spec: IdealSpec) -> list[Parts]:
    """All members, ordered by degree then lexicographically."""
    members = [p for p in partitions_in_box(spec.m, spec.n) if is_member(p, spec)]
    members.sort(key=lambda p: (sum(p), p))
    return members


def gamma_set(spec: IdealSpec) -> list[Parts]:
    """Members with exactly k - m + 1 short rows: the new stratum at level k."""
    if spec.k <= spec.m:
        raise ValueError(f"gamma set needs k > m: m={spec.m} k={spec.k}")
    if spec.n < spec.k - spec.m + 1:
        warnings.warn(
            f"gamma set is empty for n < k - m + 1: m={spec.m} n={spec.n} k={spec.k}",
            stacklevel=2,
        )
        return []
    out = [
        p
        for p in partitions_in_box(spec.m, spec.n)
        if short_rows(p, spec.m) == spec.k - spec.m + 1
    ]
    out.sort(key=lambda p: (sum(p), p))
    return out


def _require_member(p: Parts, spec: IdealSpec) -> None:
    if not is_member(p, spec):
        raise ValueError(f"{p} is not a member of L^{spec.k}({spec.m},{spec.n})")


def complement_dual(p: Parts, spec: IdealSpec) -> Parts:
    """Rotate the complement in the rectangle: row i maps to m - p_(n+1-i)."""
    _require_member(p, spec)
    out = tuple(spec.m - part_at(p, spec.n + 1 - i) for i in range(1, spec.n + 1))
    while out and out[-1] == 0:
        out = out[:-1]
    return out


def meet(a: Parts, b: Parts, spec: IdealSpec) -> Parts:
    """Componentwise minimum."""
    _require_member(a, spec)
    _require_member(b, spec)
    out = tuple(min(x, y) for x, y in zip(a, b))
    while out and out[-1] == 0:
        out = out[:-1]
    return out


def join(a: Parts, b: Parts, spec: IdealSpec) -> Parts:
    """Componentwise maximum."""
    _require_member(a, spec)
    _require_member(b, spec)
    n = max(len(a), len(b))
    return tuple(max(part_at(a, i), part_at(b, i)) for i in range(1, n + 1))


@dataclass(frozen=True)
class RankVector:
    """Counts by degree, indexed 0 .. top_rank."""

    counts: tuple[int, ...]

    @property
    def top_rank(self) -> int:
        return len(self.counts) - 1

    def total(self) -> int:
        return sum(self.counts)

    def is_palindromic(self) -> bool:
        return self.counts == self.counts[::-1]

    def to_json_list(self) -> list[int]:
        return list(self.counts)

    def to_csv(self) -> str:
        lines = ["i,count"]
        lines.extend(f"{i},{c}" for i, c in enumerate(self.counts))
        return "\n".join(lines) + "\n"


def rank_vector(members: list[Parts], top_rank: int) -> RankVector:
    """Tally degrees; any member beyond top_rank is an error."""
    counts = [0] * (top_rank + 1)
    for p in members:
        d = sum(p)
        if d > top_rank:
            raise ValueError(f"degree {d} exceeds top rank {top_rank}")
        counts[d] += 1
    return RankVector(tuple(counts))
