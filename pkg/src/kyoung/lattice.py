"""Covering relations, order tests, and Hasse diagrams of the k-Young lattice.

The order on k-bounded partitions is generated by covers: lam is covered by
mu when mu has one more box and both mu and its k-conjugate contain lam and
its k-conjugate.  Covers are computed from corner residues of the k-skew
diagram; the definitional test lives in covers_oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import (
    Parts,
    contains,
    is_k_bounded,
    k_bounded_partitions,
    k_conjugate,
    k_skew,
    part_at,
    residue,
    union,
    KRectangle,
)


def _add_box(p: Parts, row: int) -> Parts:
    if row == len(p) + 1:
        return p + (1,)
    return p[: row - 1] + (p[row - 1] + 1,) + p[row:]


def _remove_box(p: Parts, row: int) -> Parts:
    if row == len(p) and p[row - 1] == 1:
        return p[:-1]
    return p[: row - 1] + (p[row - 1] - 1,) + p[row:]


@lru_cache(maxsize=None)
def _covers_up(p: Parts, k: int) -> tuple[Parts, ...]:
    corners = k_skew(p, k).corners("addable")
    modulus = k + 1
    out = []
    for idx, (r, c) in enumerate(corners):
        rho = residue((r, c), modulus)
        # excluded when the same residue occurs in a higher addable corner
        if any(residue(higher, modulus) == rho for higher in corners[idx + 1 :]):
            continue
        new_val = part_at(p, r) + 1
        if new_val > k:
            continue
        if r > 1 and part_at(p, r - 1) < new_val:
            continue
        out.append(_add_box(p, r))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _covers_down(p: Parts, k: int) -> tuple[Parts, ...]:
    corners = k_skew(p, k).corners("removable")
    modulus = k + 1
    out = []
    for idx, (r, c) in enumerate(corners):
        rho = residue((r, c), modulus)
        if any(residue(higher, modulus) == rho for higher in corners[idx + 1 :]):
            continue
        if part_at(p, r) <= part_at(p, r + 1):
            continue
        out.append(_remove_box(p, r))
    return tuple(sorted(out))


def covers(p: Parts, k: int, direction: str = "up") -> list[Parts]:
    """Partitions covering p (up) or covered by p (down) in the k-Young order."""
    if not is_k_bounded(p, k):
        raise ValueError(f"partition {p} is not {k}-bounded")
    if direction == "up":
        return list(_covers_up(p, k))
    if direction == "down":
        return list(_covers_down(p, k))
    raise ValueError(f"direction must be 'up' or 'down': {direction!r}")


def covers_oracle(p: Parts, k: int, direction: str = "up") -> list[Parts]:
    """Definitional covers: one-box steps with containment of both k-conjugates."""
    if not is_k_bounded(p, k):
        raise ValueError(f"partition {p} is not {k}-bounded")
    pk = k_conjugate(p, k)
    out = []
    if direction == "up":
        for r in range(1, len(p) + 2):
            if r > 1 and part_at(p, r - 1) <= part_at(p, r):
                continue
            cand = _add_box(p, r)
            if cand[0] > k:
                continue
            if contains(pk, k_conjugate(cand, k)):
                out.append(cand)
    elif direction == "down":
        for r in range(1, len(p) + 1):
            if part_at(p, r) <= part_at(p, r + 1):
                continue
            cand = _remove_box(p, r)
            if contains(k_conjugate(cand, k), pk):
                out.append(cand)
    else:
        raise ValueError(f"direction must be 'up' or 'down': {direction!r}")
    return sorted(out)


def leq(a: Parts, b: Parts, k: int) -> bool:
    """Whether a precedes b in the k-Young order.

    Breadth-first search upward through covers from a, pruning any partition
    whose parts or k-conjugate parts leave b's; containment both ways is
    necessary for comparability, so no witness chain is lost.
    """
    if not is_k_bounded(a, k):
        raise ValueError(f"partition {a} is not {k}-bounded")
    if not is_k_bounded(b, k):
        raise ValueError(f"partition {b} is not {k}-bounded")
    if a == b:
        return True
    if sum(a) >= sum(b) or not contains(a, b):
        return False
    bk = k_conjugate(b, k)
    if not contains(k_conjugate(a, k), bk):
        return False
    frontier = {a}
    for _ in range(sum(a), sum(b)):
        nxt = set()
        for v in frontier:
            for u in _covers_up(v, k):
                if contains(u, b) and contains(k_conjugate(u, k), bk):
                    nxt.add(u)
        if not nxt:
            return False
        frontier = nxt
    return b in frontier


@dataclass
class HasseDiagram:
    """Graded cover graph: ranks[d] lists the degree-d vertices in lex order."""

    k: int
    name: str
    ranks: list[list[Parts]]
    up_edges: dict[Parts, tuple[Parts, ...]] = field(default_factory=dict)

    def vertices(self) -> list[Parts]:
        return [v for rank in self.ranks for v in rank]

    def vertex_count(self) -> int:
        return sum(len(rank) for rank in self.ranks)

    def edge_count(self) -> int:
        return sum(len(v) for v in self.up_edges.values())

    def edges(self) -> list[tuple[Parts, Parts]]:
        out = []
        for v in self.vertices():
            out.extend((v, u) for u in self.up_edges.get(v, ()))
        return out

    def index(self) -> dict[Parts, int]:
        return {v: i for i, v in enumerate(self.vertices())}

    def to_json_dict(self) -> dict:
        idx = self.index()
        edges = sorted((idx[v], idx[u]) for v, u in self.edges())
        return {
            "k": self.k,
            "name": self.name,
            "ranks": [[list(v) for v in rank] for rank in self.ranks],
            "edges": [list(e) for e in edges],
        }

    def to_dot(self) -> str:
        idx = self.index()
        lines = ["digraph kyoung {", "  rankdir=BT;", "  node [shape=box];"]
        for rank in self.ranks:
            if not rank:
                continue
            row = " ".join(f'v{idx[v]} [label="[{",".join(map(str, v))}]"];' for v in rank)
            lines.append("  { rank=same; " + row + " }")
        for a, b in sorted((idx[v], idx[u]) for v, u in self.edges()):
            lines.append(f"  v{a} -> v{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_ideal(generator: Parts, k: int) -> HasseDiagram:
    """Hasse diagram of the principal order ideal below generator."""
    if not is_k_bounded(generator, k):
        raise ValueError(f"partition {generator} is not {k}-bounded")
    top = sum(generator)
    levels: list[list[Parts]] = [[] for _ in range(top + 1)]
    levels[top] = [generator]
    up: dict[Parts, list[Parts]] = {generator: []}
    for d in range(top, 0, -1):
        children = set()
        for v in levels[d]:
            for c in _covers_down(v, k):
                children.add(c)
                up.setdefault(c, []).append(v)
        levels[d - 1] = sorted(children)
    return HasseDiagram(
        k=k,
        name="ideal [" + ",".join(map(str, generator)) + "]",
        ranks=levels,
        up_edges={v: tuple(sorted(parents)) for v, parents in up.items()},
    )


def build_graded(k: int, max_degree: int) -> HasseDiagram:
    """Hasse diagram of all k-bounded partitions of degree at most max_degree."""
    if k < 1:
        raise ValueError(f"k must be positive: {k}")
    if max_degree < 0:
        raise ValueError(f"max_degree must be non-negative: {max_degree}")
    ranks: list[list[Parts]] = [[] for _ in range(max_degree + 1)]
    for p in k_bounded_partitions(k, max_degree):
        ranks[sum(p)].append(p)
    for rank in ranks:
        rank.sort()
    up = {}
    for d, rank in enumerate(ranks):
        for v in rank:
            up[v] = _covers_up(v, k) if d < max_degree else ()
    return HasseDiagram(k=k, name=f"graded <= {max_degree}", ranks=ranks, up_edges=up)


@dataclass(frozen=True)
class RectangleTranslationWitness:
    """Both sides of the rectangle translation of covers above lam."""

    lam: Parts
    rect: KRectangle
    k: int
    lhs: tuple[Parts, ...]
    rhs: tuple[Parts, ...]

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def check_rectangle_translation(lam: Parts, rect: KRectangle, k: int) -> RectangleTranslationWitness:
    """Covers above lam-union-rectangle vs translated covers above lam."""
    if rect.k != k:
        raise ValueError(f"rectangle {rect} is not a {k}-rectangle")
    if not is_k_bounded(lam, k):
        raise ValueError(f"partition {lam} is not {k}-bounded")
    lhs = _covers_up(union(lam, rect.parts), k)
    rhs = tuple(sorted(union(mu, rect.parts) for mu in _covers_up(lam, k)))
    return RectangleTranslationWitness(lam=lam, rect=rect, k=k, lhs=lhs, rhs=rhs)
