"""Sweep runners that check the structural theorems and the unimodality
conjectures over parameter grids, producing JSON-serializable reports.

Theorem-status checks must never fail (a failure is an implementation bug);
conjecture-status checks record counterexamples as findings.  Skipped cells
are those where a statement makes no claim, and are never counted as passes.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from . import ideals, lattice, partitions, qpoly
from .ideals import IdealSpec
from .partitions import Parts
from .qpoly import QPoly

Range = int | tuple[int, int]


def _as_values(r: Range) -> list[int]:
    if isinstance(r, int):
        return [r]
    lo, hi = r
    if lo > hi:
        raise ValueError(f"empty range: {r}")
    return list(range(lo, hi + 1))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, int(math.isqrt(n)) + 1):
        if n % p == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def qualifies(a: int, b: int, m: int) -> bool:
    """Neither endpoint congruent to -1 modulo any prime divisor of m."""
    return all(a % p != p - 1 and b % p != p - 1 for p in prime_factors(m))


@dataclass
class VerificationReport:
    """Outcome of one check over a grid; grid counts evaluated cells only."""

    check: str
    status: str
    grid: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed_ms: int = 0

    def record(self, ok: bool, counterexample: dict | None = None) -> None:
        self.grid += 1
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.counterexamples.append(counterexample or {})

    def skip(self) -> None:
        self.skipped += 1

    def all_pass(self) -> bool:
        return self.failed == 0

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "status": self.status,
            "grid": self.grid,
            "pass": self.passed,
            "fail": self.failed,
            "skip": self.skipped,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
            "elapsed_ms": self.elapsed_ms,
        }


def _finish(report: VerificationReport, t0: float) -> VerificationReport:
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


def verify_conjecture_u(m: int, k_range: Range, n_range: Range) -> VerificationReport:
    """Unimodality of the stratum generating functions for prime m.

    For k not congruent to -1 or 0 mod m the stratum polynomial itself must
    be unimodal; for k congruent to -1 and n > k - m + 1 the sum with the
    next stratum must be.  Cells where no claim is made are skipped.
    """
    if not is_prime(m):
        raise ValueError(f"m must be prime: {m}")
    t0 = time.perf_counter()
    report = VerificationReport(check="conjecture-u", status="conjecture")
    skips: dict[str, int] = {}
    boundary = 0
    for k in _as_values(k_range):
        for n in _as_values(n_range):
            if k <= m:
                skips["k <= m"] = skips.get("k <= m", 0) + 1
                report.skip()
                continue
            if n < k - m + 1:
                skips["n < k-m+1"] = skips.get("n < k-m+1", 0) + 1
                report.skip()
                continue
            r = k % m
            if r == 0:
                skips["k = 0 mod m (no claim)"] = skips.get("k = 0 mod m (no claim)", 0) + 1
                report.skip()
                continue
            if r == m - 1:
                if n == k - m + 1:
                    skips["k = -1 mod m at n = k-m+1 (no claim)"] = (
                        skips.get("k = -1 mod m at n = k-m+1 (no claim)", 0) + 1
                    )
                    report.skip()
                    continue
                poly = qpoly.rank_gen_gamma(m, n, k) + qpoly.rank_gen_gamma(m, n, k + 1)
                mode = "u_k + u_k+1"
            else:
                poly = qpoly.rank_gen_gamma(m, n, k)
                mode = "u_k"
                if n == k - m + 1:
                    boundary += 1
            ok = qpoly.is_unimodal(poly)
            report.record(
                ok,
                None
                if ok
                else {"m": m, "k": k, "n": n, "mode": mode, "coefficients": poly.to_json_list()},
            )
    report.notes.append(f"m={m}")
    report.notes.append(
        f"boundary n = k-m+1 cells evaluated under the k != -1,0 clause: {boundary}"
    )
    for reason, count in sorted(skips.items()):
        report.notes.append(f"skipped {count}: {reason}")
    return _finish(report, t0)


def _gamma_term(m: int, n: int, j: int) -> QPoly:
    return qpoly.rank_gen_gamma(m, n, j)


def _prefix_sums(m: int, n: int, b_max: int) -> list[QPoly]:
    """prefix[x] = sum of stratum polynomials for levels m+1 .. x, x <= b_max."""
    prefix = [QPoly.zero()] * (b_max + 1)
    acc = QPoly.zero()
    for j in range(m + 1, b_max + 1):
        if n >= j - m + 1:
            acc = acc + _gamma_term(m, n, j)
        prefix[j] = acc
    return prefix


def verify_conjecture_gen(m: Range, a: Range, b: Range, n: Range) -> VerificationReport:
    """Unimodality of partial stratum sums for general m on qualifying windows.

    A window (a, b) qualifies when neither endpoint is congruent to -1 modulo
    any prime divisor of m; non-qualifying windows and cells where the finite
    form is undefined (n < b - m + 1) are skipped.
    """
    t0 = time.perf_counter()
    report = VerificationReport(check="conjecture-gen", status="conjecture")
    skips: dict[str, int] = {}
    m_values = _as_values(m)
    a_values = _as_values(a)
    b_values = _as_values(b)
    n_values = _as_values(n)
    for m_val in m_values:
        if m_val < 1:
            raise ValueError(f"m must be positive: {m_val}")
        cache: dict[int, list[QPoly]] = {}
        b_top = max(b_values)
        for a_val in a_values:
            if a_val < m_val:
                skips["a < m"] = skips.get("a < m", 0) + len(b_values) * len(n_values)
                for _ in range(len(b_values) * len(n_values)):
                    report.skip()
                continue
            for b_val in b_values:
                if b_val <= a_val:
                    skips["b <= a"] = skips.get("b <= a", 0) + len(n_values)
                    for _ in range(len(n_values)):
                        report.skip()
                    continue
                window_ok = qualifies(a_val, b_val, m_val)
                for n_val in n_values:
                    if not window_ok:
                        skips["endpoint = -1 mod a prime divisor of m"] = (
                            skips.get("endpoint = -1 mod a prime divisor of m", 0) + 1
                        )
                        report.skip()
                        continue
                    if n_val < b_val - m_val + 1:
                        skips["n < b-m+1"] = skips.get("n < b-m+1", 0) + 1
                        report.skip()
                        continue
                    if n_val not in cache:
                        cache[n_val] = _prefix_sums(m_val, n_val, b_top)
                    prefix = cache[n_val]
                    poly = prefix[b_val] - prefix[a_val]
                    ok = qpoly.is_unimodal(poly)
                    report.record(
                        ok,
                        None
                        if ok
                        else {
                            "m": m_val,
                            "a": a_val,
                            "b": b_val,
                            "n": n_val,
                            "coefficients": poly.to_json_list(),
                        },
                    )
    for reason, count in sorted(skips.items()):
        report.notes.append(f"skipped {count}: {reason}")
    return _finish(report, t0)


def verify_sieved(m: Range, a: Range, b: Range, k: Range | None = None) -> VerificationReport:
    """Sieved-sum identities: equal residue-class totals of the limit-form
    partial sums with cyclotomic vanishing for every divisor d > 1 of m, and,
    for prime m over the optional k range, equal residue-class totals of the
    single Gaussian binomial [k-1 choose m-2]_q when k is not congruent to
    -1 or 0 mod m.

    Called with all-scalar m, a, b the window must qualify, otherwise
    ValueError; ranges sweep and skip non-qualifying cells.
    """
    scalar = isinstance(m, int) and isinstance(a, int) and isinstance(b, int)
    t0 = time.perf_counter()
    report = VerificationReport(check="sieved", status="theorem")
    skips: dict[str, int] = {}
    for m_val in _as_values(m):
        if m_val < 2:
            raise ValueError(f"m must be at least 2: {m_val}")
        divisors = [d for d in range(2, m_val + 1) if m_val % d == 0]
        for a_val in _as_values(a):
            for b_val in _as_values(b):
                if not m_val <= a_val < b_val:
                    if scalar:
                        raise ValueError(f"need m <= a < b: m={m_val} a={a_val} b={b_val}")
                    skips["window outside m <= a < b"] = (
                        skips.get("window outside m <= a < b", 0) + 1
                    )
                    report.skip()
                    continue
                if not qualifies(a_val, b_val, m_val):
                    if scalar:
                        raise ValueError(
                            f"window endpoints must avoid -1 mod every prime divisor of m:"
                            f" m={m_val} a={a_val} b={b_val}"
                        )
                    skips["endpoint = -1 mod a prime divisor of m"] = (
                        skips.get("endpoint = -1 mod a prime divisor of m", 0) + 1
                    )
                    report.skip()
                    continue
                limit = qpoly.conjecture_sum(a_val, b_val, m_val, None)
                sums = qpoly.sieved_sums(limit, m_val)
                total = limit(1)
                equal = len(set(sums)) == 1 and sums[0] * m_val == total
                cyclo = all(
                    qpoly.cyclotomic_check(a_val, b_val, m_val, d) for d in divisors
                )
                ok = equal and cyclo
                report.record(
                    ok,
                    None
                    if ok
                    else {
                        "m": m_val,
                        "a": a_val,
                        "b": b_val,
                        "sieved_sums": sums,
                        "total": total,
                        "cyclotomic": cyclo,
                    },
                )
    if k is not None:
        gauss_cells = 0
        for m_val in _as_values(m):
            if not is_prime(m_val):
                continue
            for k_val in _as_values(k):
                if k_val <= m_val or k_val % m_val in (0, m_val - 1):
                    reason = "k <= m or k = -1,0 mod m (no single-gaussian claim)"
                    skips[reason] = skips.get(reason, 0) + 1
                    report.skip()
                    continue
                sums = qpoly.sieved_sums(qpoly.gaussian(k_val - 1, m_val - 2), m_val)
                expected = math.comb(k_val - 1, m_val - 2)
                ok = len(set(sums)) == 1 and sums[0] * m_val == expected
                gauss_cells += 1
                report.record(
                    ok,
                    None
                    if ok
                    else {"m": m_val, "k": k_val, "sieved_sums": sums, "expected_total": expected},
                )
        report.notes.append(f"single-gaussian cells for prime m: {gauss_cells}")
    for reason, count in sorted(skips.items()):
        report.notes.append(f"skipped {count}: {reason}")
    return _finish(report, t0)


def _grid_cells(m_max: int, n_max: int, k_max: int) -> Iterable[IdealSpec]:
    for m in range(1, m_max + 1):
        for k in range(m, k_max + 1):
            for n in range(max(1, k - m + 1), n_max + 1):
                yield IdealSpec(m, n, k)


def _sample_triples(members: list[Parts], limit: int, seed: int) -> list[tuple[Parts, Parts, Parts]]:
    size = len(members)
    if size**3 <= limit:
        return [(x, y, z) for x in members for y in members for z in members]
    rng = random.Random(seed)
    return [
        (members[rng.randrange(size)], members[rng.randrange(size)], members[rng.randrange(size)])
        for _ in range(limit)
    ]


def verify_structure(
    m_max: int = 4, n_max: int = 6, k_max: int = 7, degree_max: int = 10
) -> list[VerificationReport]:
    """Run every structural invariant family; all are theorem-status."""
    reports = []

    t0 = time.perf_counter()
    rep = VerificationReport(check="structure-involution", status="theorem")
    for k in range(1, k_max + 1):
        for p in partitions.k_bounded_partitions(k, degree_max):
            kc = partitions.k_conjugate(p, k)
            ok = (
                partitions.k_conjugate(kc, k) == p
                and sum(kc) == sum(p)
                and partitions.is_k_bounded(kc, k)
            )
            rep.record(ok, None if ok else {"k": k, "partition": list(p)})
    reports.append(_finish(rep, t0))

    t0 = time.perf_counter()
    rep = VerificationReport(check="structure-kskew", status="theorem")
    for k in range(1, k_max + 1):
        for p in partitions.k_bounded_partitions(k, degree_max):
            s = partitions.k_skew(p, k)
            ok = s.row_lengths() == p
            ok = ok and all(s.hook_length(c) <= k for c in s.cells())
            for i in range(1, len(s.outer) + 1):
                for j in range(1, s.inner_at(i) + 1):
                    below = any(
                        s.inner_at(r) < j <= s.outer[r - 1]
                        for r in range(i + 1, len(s.outer) + 1)
                    )
                    if below and s.hook_length((i, j)) <= k:
                        ok = False
            rep.record(ok, None if ok else {"k": k, "partition": list(p)})
    reports.append(_finish(rep, t0))

    t0 = time.perf_counter()
    rep = VerificationReport(check="structure-covering", status="theorem")
    for k in range(1, k_max + 1):
        for p in partitions.k_bounded_partitions(k, degree_max):
            for direction in ("up", "down"):
                ok = lattice.covers(p, k, direction) == lattice.covers_oracle(p, k, direction)
                rep.record(ok, None if ok else {"k": k, "partition": list(p), "dir": direction})
    reports.append(_finish(rep, t0))

    t0 = time.perf_counter()
    rep = VerificationReport(check="structure-rectangle-conjugate", status="theorem")
    for k in range(1, k_max + 1):
        for rect in partitions.all_k_rectangles(k):
            box = rect.parts
            box_conj = partitions.k_conjugate(box, k)
            for p in partitions.k_bounded_partitions(k, degree_max):
                ok = partitions.k_conjugate(partitions.union(p, box), k) == partitions.union(
                    partitions.k_conjugate(p, k), box_conj
                )
                rep.record(
                    ok, None if ok else {"k": k, "width": rect.width, "partition": list(p)}
                )
    for m in range(1, m_max + 1):
        for k in range(m, k_max + 1):
            for n in range(0, n_max + 1):
                ok = partitions.rectangle_k_conjugate(m, n, k) == partitions.k_conjugate(
                    (m,) * n, k
                )
                rep.record(ok, None if ok else {"m": m, "n": n, "k": k})
    for k in range(1, k_max + 1):
        for rect in partitions.all_k_rectangles(k):
            w = rect.width
            for mu in partitions.partitions_in_box(max(w - 1, 0), k - w):
                left = rect.parts + mu
                ok = partitions.k_conjugate(left, k) == (
                    partitions.conjugate(rect.parts) + partitions.conjugate(mu)
                )
                rep.record(ok, None if ok else {"k": k, "width": w, "mu": list(mu)})
    reports.append(_finish(rep, t0))

    t0 = time.perf_counter()
    rep = VerificationReport(check="structure-rectangle-translation", status="theorem")
    for k in range(1, k_max + 1):
        for rect in partitions.all_k_rectangles(k):
            for p in partitions.k_bounded_partitions(k, degree_max):
                witness = lattice.check_rectangle_translation(p, rect, k)
                rep.record(
                    witness.equal,
                    None
                    if witness.equal
                    else {
                        "k": k,
                        "width": rect.width,
                        "partition": list(p),
                        "lhs": [list(x) for x in witness.lhs],
                        "rhs": [list(x) for x in witness.rhs],
                    },
                )
    reports.append(_finish(rep, t0))

    t0 = time.perf_counter()
    rep = VerificationReport(check="structure-subposet", status="theorem")
    for spec in _grid_cells(m_max, n_max, k_max):
        members = ideals.enumerate_ideal(spec)
        for x in members:
            for y in members:
                ok = lattice.leq(x, y, spec.k) == partitions.contains(x, y)
                rep.record(
                    ok,
                    None
                    if ok
                    else {"m": spec.m, "n": spec.n, "k": spec.k, "a": list(x), "b": list(y)},
                )
        for y in members:
            down = set(lattice.covers(y, spec.k, "down"))
            for x in members:
                if sum(x) + 1 != sum(y) or not partitions.contains(x, y):
                    continue
                ok = x in down
                rep.record(
                    ok,
                    None
                    if ok
                    else {
                        "m": spec.m,
                        "n": spec.n,
                        "k": spec.k,
                        "child": list(x),
                        "parent": list(y),
                    },
                )
    reports.append(_finish(rep, t0))

    t0 = time.perf_counter()
    rep = VerificationReport(check="structure-counts", status="theorem")
    for spec in _grid_cells(m_max, n_max, k_max):
        members = ideals.enumerate_ideal(spec)
        rv = ideals.rank_vector(members, spec.top_rank)
        poly = qpoly.rank_gen_Lk(spec.m, spec.n, spec.k)
        expected = tuple(poly.coefficient(i) for i in range(spec.top_rank + 1))
        ok = (
            len(members) == qpoly.count_Lk(spec.m, spec.n, spec.k)
            and len(members) == poly(1)
            and rv.counts == expected
        )
        rep.record(ok, None if ok else {"m": spec.m, "n": spec.n, "k": spec.k})
    reports.append(_finish(rep, t0))

    t0 = time.perf_counter()
    rep = VerificationReport(check="structure-duality", status="theorem")
    for spec in _grid_cells(m_max, n_max, k_max):
        members = ideals.enumerate_ideal(spec)
        rv = ideals.rank_vector(members, spec.top_rank)
        ok = rv.is_palindromic()
        member_set = set(members)
        for p in members:
            d = ideals.complement_dual(p, spec)
            if d not in member_set or ideals.complement_dual(d, spec) != p:
                ok = False
        for x in members:
            for y in members:
                if partitions.contains(x, y) != partitions.contains(
                    ideals.complement_dual(y, spec), ideals.complement_dual(x, spec)
                ):
                    ok = False
        for x, y, z in _sample_triples(members, 200, seed=spec.m * 100 + spec.n * 10 + spec.k):
            mt = ideals.meet(x, y, spec)
            jn = ideals.join(x, y, spec)
            if mt not in member_set or jn not in member_set:
                ok = False
            if ideals.meet(x, ideals.join(y, z, spec), spec) != ideals.join(
                ideals.meet(x, y, spec), ideals.meet(x, z, spec), spec
            ):
                ok = False
            if ideals.join(x, ideals.meet(y, z, spec), spec) != ideals.meet(
                ideals.join(x, y, spec), ideals.join(x, z, spec), spec
            ):
                ok = False
        rep.record(ok, None if ok else {"m": spec.m, "n": spec.n, "k": spec.k})
    reports.append(_finish(rep, t0))

    t0 = time.perf_counter()
    rep = VerificationReport(check="structure-gamma", status="theorem")
    for spec in _grid_cells(m_max, n_max, k_max):
        if spec.k == spec.m:
            chain = ideals.enumerate_ideal(spec)
            ok = len(chain) == spec.top_rank + 1 and all(
                sum(p) == i for i, p in enumerate(chain)
            )
            rep.record(ok, None if ok else {"m": spec.m, "n": spec.n, "k": spec.k})
            continue
        members = set(ideals.enumerate_ideal(spec))
        smaller_spec = IdealSpec(spec.m, spec.n, spec.k - 1)
        smaller = set(ideals.enumerate_ideal(smaller_spec))
        gamma = set(ideals.gamma_set(spec))
        ok = smaller <= members and members == smaller | gamma and not (smaller & gamma)
        gamma_rv = ideals.rank_vector(sorted(gamma), spec.top_rank)
        poly = qpoly.rank_gen_gamma(spec.m, spec.n, spec.k)
        ok = ok and gamma_rv.counts == tuple(
            poly.coefficient(i) for i in range(spec.top_rank + 1)
        )
        ok = ok and qpoly.is_symmetric(poly, spec.top_rank)
        for parent in members:
            stratum_parent = ideals.short_rows(parent, spec.m)
            for row in range(1, len(parent) + 1):
                if partitions.part_at(parent, row) <= partitions.part_at(parent, row + 1):
                    continue
                child = lattice._remove_box(parent, row)
                if child in members:
                    if abs(ideals.short_rows(child, spec.m) - stratum_parent) > 1:
                        ok = False
        rep.record(ok, None if ok else {"m": spec.m, "n": spec.n, "k": spec.k})
    reports.append(_finish(rep, t0))

    t0 = time.perf_counter()
    rep = VerificationReport(check="structure-decomposition", status="theorem")
    for spec in _grid_cells(m_max, n_max, k_max):
        total = QPoly.geometric(1, spec.top_rank + 1)
        for r in range(spec.m + 1, spec.k + 1):
            total = total + qpoly.rank_gen_gamma(spec.m, spec.n, r)
        ok = total == qpoly.rank_gen_Lk(spec.m, spec.n, spec.k)
        rep.record(ok, None if ok else {"m": spec.m, "n": spec.n, "k": spec.k})
    reports.append(_finish(rep, t0))

    return reports


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def export(obj: Any, fmt: str, path: str) -> None:
    """Write a diagram, report, rank vector, or polynomial to path.

    Formats: dot (diagrams), json (everything), csv (rank vectors).  Output
    is deterministic for identical in-memory inputs.
    """
    text = render(obj, fmt)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def render(obj: Any, fmt: str) -> str:
    if isinstance(obj, lattice.HasseDiagram):
        if fmt == "dot":
            return obj.to_dot()
        if fmt == "json":
            return _json_text(obj.to_json_dict())
    if isinstance(obj, VerificationReport):
        if fmt == "json":
            return _json_text(obj.to_json_dict())
    if isinstance(obj, list) and all(isinstance(r, VerificationReport) for r in obj):
        if fmt == "json":
            return _json_text([r.to_json_dict() for r in obj])
    if isinstance(obj, ideals.RankVector):
        if fmt == "csv":
            return obj.to_csv()
        if fmt == "json":
            return _json_text(obj.to_json_list())
    if isinstance(obj, QPoly):
        if fmt == "json":
            return _json_text(obj.to_json_list())
    raise ValueError(f"unsupported export: {type(obj).__name__} as {fmt!r}")


@dataclass
class SweepConfig:
    """One named check with its parameter grid and output destination."""

    check: str
    params: dict
    out: str | None = None
    fmt: str = "json"

    @classmethod
    def from_json_dict(cls, data: dict) -> "SweepConfig":
        unknown = set(data) - {"check", "params", "out", "format"}
        if unknown:
            raise ValueError(f"unknown sweep config keys: {sorted(unknown)}")
        if "check" not in data:
            raise ValueError("sweep config needs a 'check' name")
        return cls(
            check=data["check"],
            params=data.get("params", {}),
            out=data.get("out"),
            fmt=data.get("format", "json"),
        )


def _param_range(value, default: Range) -> Range:
    if value is None:
        return default
    if isinstance(value, int):
        return value
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return (int(value[0]), int(value[1]))
    raise ValueError(f"expected int or [lo, hi]: {value!r}")


def run_check(check: str, params: dict) -> list[VerificationReport]:
    """Dispatch a named check; returns one report per family or m value."""
    if check == "conjecture-u":
        m = params.get("m", [2, 3, 5, 7])
        m_values = [m] if isinstance(m, int) else list(m)
        k = _param_range(params.get("k"), (1, 25))
        n = _param_range(params.get("n"), (1, 30))
        return [verify_conjecture_u(mv, k, n) for mv in m_values]
    if check == "conjecture-gen":
        return [
            verify_conjecture_gen(
                _param_range(params.get("m"), (2, 12)),
                _param_range(params.get("a"), (2, 19)),
                _param_range(params.get("b"), (3, 20)),
                _param_range(params.get("n"), (1, 25)),
            )
        ]
    if check == "sieved":
        k = params.get("k")
        return [
            verify_sieved(
                _param_range(params.get("m"), (2, 12)),
                _param_range(params.get("a"), (2, 19)),
                _param_range(params.get("b"), (3, 20)),
                _param_range(k, (3, 30)) if k is not None else (3, 30),
            )
        ]
    if check == "structure":
        return verify_structure(
            m_max=params.get("m_max", 4),
            n_max=params.get("n_max", 6),
            k_max=params.get("k_max", 7),
            degree_max=params.get("degree_max", 10),
        )
    raise ValueError(
        f"unknown check {check!r}; expected conjecture-u, conjecture-gen, sieved, or structure"
    )


def run_sweep(config: SweepConfig) -> list[VerificationReport]:
    reports = run_check(config.check, config.params)
    if config.out:
        export(reports if len(reports) > 1 else reports[0], config.fmt, config.out)
    return reports
