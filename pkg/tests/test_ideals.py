"""Rectangle ideals: membership, gamma strata, duality, lattice operations."""

import pytest

from kyoung.ideals import (
    IdealSpec,
    RankVector,
    complement_dual,
    enumerate_ideal,
    gamma_set,
    is_member,
    join,
    meet,
    rank_vector,
    short_rows,
)
from kyoung.lattice import leq
from kyoung.partitions import partitions_in_box, sum_parts


def members_by_search(spec):
    """Oracle: walk the order itself instead of the box characterization."""
    return sorted(
        (
            p
            for p in partitions_in_box(spec.m, spec.n)
            if leq(p, spec.rectangle, spec.k)
        ),
        key=lambda p: (sum(p), p),
    )


def members_by_parametrization(spec):
    """Oracle: the chain of full rows topped by strata of lifted partitions.

    Every member is (m^a) plus a tail of j parts below m, the tail being
    mu + (1,...,1) for mu inside the (m-2) x j box, for some j up to
    k - m + 1.  Duplicates cannot arise since j is the short-row count.
    """
    m, n, k = spec.m, spec.n, spec.k
    out = set()
    for j in range(min(k - m + 1, n) + 1):
        for mu in partitions_in_box(max(m - 2, 0), j):
            tail = sum_parts(mu, (1,) * j)
            for a in range(n - j + 1):
                out.add((m,) * a + tail)
    return sorted(out, key=lambda p: (sum(p), p))


class TestSpec:
    def test_fields(self):
        spec = IdealSpec(3, 4, 5)
        assert spec.rectangle == (3, 3, 3, 3)
        assert spec.top_rank == 12

    def test_validation(self):
        with pytest.raises(ValueError):
            IdealSpec(0, 1, 3)
        with pytest.raises(ValueError):
            IdealSpec(2, 0, 3)
        with pytest.raises(ValueError):
            IdealSpec(3, 2, 2)

    def test_short_rows(self):
        assert short_rows((3, 2, 1), 3) == 2
        assert short_rows((3, 3), 3) == 0
        assert short_rows((), 5) == 0


class TestMembership:
    def test_examples(self):
        spec = IdealSpec(3, 4, 4)
        assert is_member((3, 3, 2), spec)
        assert not is_member((3, 1, 1, 1), spec)
        assert not is_member((4, 1), spec)
        assert is_member((), spec)

    def test_counts(self):
        assert len(enumerate_ideal(IdealSpec(3, 3, 3))) == 10
        assert len(enumerate_ideal(IdealSpec(3, 3, 4))) == 16
        assert len(enumerate_ideal(IdealSpec(3, 3, 5))) == 20

    def test_saturates_to_whole_box(self):
        # once k - m + 1 >= n the short-row bound never binds
        spec = IdealSpec(3, 3, 6)
        assert len(enumerate_ideal(spec)) == len(list(partitions_in_box(3, 3)))

    def test_matches_order_search(self):
        for m in range(1, 4):
            for k in range(m, 6):
                for n in range(1, 5):
                    spec = IdealSpec(m, n, k)
                    assert enumerate_ideal(spec) == members_by_search(spec), spec

    def test_matches_parametrization(self):
        for m in range(1, 5):
            for k in range(m, 8):
                for n in range(1, 6):
                    spec = IdealSpec(m, n, k)
                    assert enumerate_ideal(spec) == members_by_parametrization(spec), spec


class TestGamma:
    def test_golden(self):
        assert gamma_set(IdealSpec(3, 3, 4)) == [
            (1, 1),
            (2, 1),
            (2, 2),
            (3, 1, 1),
            (3, 2, 1),
            (3, 2, 2),
        ]
        assert gamma_set(IdealSpec(3, 3, 5)) == [
            (1, 1, 1),
            (2, 1, 1),
            (2, 2, 1),
            (2, 2, 2),
        ]

    def test_requires_k_above_m(self):
        with pytest.raises(ValueError):
            gamma_set(IdealSpec(3, 3, 3))

    def test_warns_when_empty(self):
        with pytest.warns(UserWarning):
            assert gamma_set(IdealSpec(3, 1, 5)) == []

    def test_stratifies_ideal(self):
        # members at level k split into last level's members and the new stratum
        for m in range(1, 4):
            for k in range(m + 1, 7):
                for n in range(max(1, k - m + 1), 6):
                    spec = IdealSpec(m, n, k)
                    prev = enumerate_ideal(IdealSpec(m, n, k - 1))
                    gamma = gamma_set(spec)
                    assert sorted(prev + gamma, key=lambda p: (sum(p), p)) == (
                        enumerate_ideal(spec)
                    ), spec

    def test_strata_parametrized_by_lifted_partitions(self):
        for m in range(2, 5):
            for k in range(m + 1, 8):
                j = k - m + 1
                for n in range(j, 6):
                    spec = IdealSpec(m, n, k)
                    expected = set()
                    for mu in partitions_in_box(max(m - 2, 0), j):
                        tail = sum_parts(mu, (1,) * j)
                        for a in range(n - j + 1):
                            expected.add((m,) * a + tail)
                    assert set(gamma_set(spec)) == expected, spec


class TestDuality:
    def test_example(self):
        spec = IdealSpec(3, 3, 4)
        assert complement_dual((1,), spec) == (3, 3, 2)
        assert complement_dual((), spec) == (3, 3, 3)
        assert complement_dual((3, 3, 3), spec) == ()

    def test_requires_member(self):
        with pytest.raises(ValueError):
            complement_dual((3, 1, 1, 1), IdealSpec(3, 4, 4))

    def test_involution_and_order_reversal(self):
        for m, n, k in [(2, 3, 3), (3, 3, 4), (3, 2, 5), (4, 3, 5)]:
            spec = IdealSpec(m, n, k)
            members = enumerate_ideal(spec)
            for p in members:
                q = complement_dual(p, spec)
                assert q in members, (p, spec)
                assert sum(q) == spec.top_rank - sum(p)
                assert complement_dual(q, spec) == p
            for a in members:
                for b in members:
                    assert leq(a, b, k) == leq(
                        complement_dual(b, spec), complement_dual(a, spec), k
                    ), (a, b, spec)


class TestMeetJoin:
    def test_examples(self):
        spec = IdealSpec(3, 3, 5)
        assert meet((3, 2), (2, 2, 1), spec) == (2, 2)
        assert join((3, 2), (2, 2, 1), spec) == (3, 2, 1)
        assert meet((), (3, 2), spec) == ()
        assert join((), (3, 2), spec) == (3, 2)

    def test_requires_members(self):
        spec = IdealSpec(3, 3, 4)
        with pytest.raises(ValueError):
            meet((1, 1, 1), (1,), spec)
        with pytest.raises(ValueError):
            join((1,), (1, 1, 1), spec)

    def test_closure_and_lattice_laws(self):
        spec = IdealSpec(3, 3, 4)
        members = enumerate_ideal(spec)
        mset = set(members)
        for a in members:
            for b in members:
                lo, hi = meet(a, b, spec), join(a, b, spec)
                assert lo in mset and hi in mset, (a, b)
                assert leq(lo, a, spec.k) and leq(lo, b, spec.k)
                assert leq(a, hi, spec.k) and leq(b, hi, spec.k)
                # greatest lower / least upper among members
                for c in members:
                    if leq(c, a, spec.k) and leq(c, b, spec.k):
                        assert leq(c, lo, spec.k), (a, b, c)
                    if leq(a, c, spec.k) and leq(b, c, spec.k):
                        assert leq(hi, c, spec.k), (a, b, c)

    def test_distributive(self):
        spec = IdealSpec(2, 3, 3)
        members = enumerate_ideal(spec)
        for a in members:
            for b in members:
                for c in members:
                    assert meet(a, join(b, c, spec), spec) == join(
                        meet(a, b, spec), meet(a, c, spec), spec
                    )
                    assert join(a, meet(b, c, spec), spec) == meet(
                        join(a, b, spec), join(a, c, spec), spec
                    )


class TestRankVector:
    def test_golden(self):
        spec = IdealSpec(3, 3, 4)
        rv = rank_vector(enumerate_ideal(spec), spec.top_rank)
        assert rv.counts == (1, 1, 2, 2, 2, 2, 2, 2, 1, 1)
        assert rv.total() == 16
        assert rv.top_rank == 9
        assert rv.is_palindromic()

    def test_chain_case(self):
        spec = IdealSpec(3, 3, 3)
        rv = rank_vector(enumerate_ideal(spec), spec.top_rank)
        assert rv.counts == (1,) * 10

    def test_overflow_rejected(self):
        with pytest.raises(ValueError):
            rank_vector([(3, 3)], 5)

    def test_serialization(self):
        rv = RankVector((1, 2, 1))
        assert rv.to_json_list() == [1, 2, 1]
        assert rv.to_csv() == "i,count\n0,1\n1,2\n2,1\n"

    def test_palindromic_sweep(self):
        for m in range(1, 4):
            for k in range(m, 7):
                for n in range(max(1, k - m + 1), 6):
                    spec = IdealSpec(m, n, k)
                    rv = rank_vector(enumerate_ideal(spec), spec.top_rank)
                    assert rv.is_palindromic(), spec
