"""Covering relation, order, Hasse diagrams, rectangle translation."""

import json

import pytest
from hypothesis import given, strategies as st

from kyoung.lattice import (
    HasseDiagram,
    build_graded,
    build_ideal,
    check_rectangle_translation,
    covers,
    covers_oracle,
    leq,
)
from kyoung.partitions import (
    all_k_rectangles,
    contains,
    k_bounded_partitions,
    k_conjugate,
    union,
)

k_and_partition = st.integers(1, 4).flatmap(
    lambda k: st.tuples(
        st.just(k),
        st.lists(st.integers(1, k), max_size=6).map(
            lambda xs: tuple(sorted(xs, reverse=True))
        ),
    )
)


class TestCovers:
    def test_worked_example_up(self):
        assert covers((4, 2, 1, 1), 4, "up") == [(4, 2, 1, 1, 1), (4, 2, 2, 1)]

    def test_worked_example_down(self):
        assert covers((4, 2, 1, 1), 4, "down") == [(4, 1, 1, 1), (4, 2, 1)]

    def test_empty_partition(self):
        assert covers((), 3, "up") == [(1,)]
        assert covers((), 3, "down") == []

    def test_row_bound_respected(self):
        # the lone addable corner sharing a residue with the forced top
        # corner is discarded, and no part may exceed k
        assert covers((2,), 2, "up") == [(2, 1)]
        assert all(q[0] <= 3 for p in k_bounded_partitions(3, 8) for q in covers(p, 3))

    def test_chain_when_k_is_one(self):
        for n in range(6):
            assert covers((1,) * n, 1, "up") == [(1,) * (n + 1)]

    def test_direction_validated(self):
        with pytest.raises(ValueError):
            covers((1,), 2, "sideways")

    def test_unbounded_rejected(self):
        with pytest.raises(ValueError):
            covers((3,), 2)

    def test_up_down_adjoint_sweep(self):
        # q covers p from below exactly when p covers q from above
        for k in range(1, 5):
            up = {p: covers(p, k, "up") for p in k_bounded_partitions(k, 9)}
            for p, ups in up.items():
                for q in ups:
                    assert p in covers(q, k, "down"), (p, q, k)
            down_edges = {
                (q, p)
                for q in k_bounded_partitions(k, 10)
                for p in covers(q, k, "down")
            }
            for q, p in down_edges:
                if sum(q) <= 9:
                    assert q in up[p], (p, q, k)

    def test_matches_oracle_sweep(self):
        for k in range(1, 5):
            for p in k_bounded_partitions(k, 9):
                for direction in ("up", "down"):
                    assert covers(p, k, direction) == covers_oracle(p, k, direction), (
                        p,
                        k,
                        direction,
                    )

    @given(k_and_partition)
    def test_matches_oracle_random(self, pair):
        k, p = pair
        assert covers(p, k, "up") == covers_oracle(p, k, "up")

    def test_top_row_removal_is_always_a_cover(self):
        for k in range(1, 5):
            for p in k_bounded_partitions(k, 9):
                if not p:
                    continue
                q = p[:-1] if p[-1] == 1 else p[:-1] + (p[-1] - 1,)
                assert q in covers(p, k, "down"), (p, k)

    def test_cover_changes_degree_by_one(self):
        for k in range(1, 5):
            for p in k_bounded_partitions(k, 8):
                for q in covers(p, k, "up"):
                    assert sum(q) == sum(p) + 1
                    assert contains(p, q)
                    assert contains(k_conjugate(p, k), k_conjugate(q, k))


class TestLeq:
    def test_reflexive_and_empty_bottom(self):
        assert leq((2, 1), (2, 1), 3)
        assert leq((), (3, 2), 3)

    def test_small_relation(self):
        assert leq((2, 1), (2, 2), 3)
        assert leq((1,), (2, 1), 2)
        assert not leq((2,), (1, 1, 1), 2)

    def test_containment_is_necessary_not_sufficient(self):
        a, b = (2, 2), (3, 2, 1, 1, 1, 1)
        assert contains(a, b)
        assert contains(k_conjugate(a, 3), k_conjugate(b, 3))
        assert not leq(a, b, 3)

    def test_validates_bounds(self):
        with pytest.raises(ValueError):
            leq((4,), (4, 1), 3)

    def test_agrees_with_reachability(self):
        # ground truth by walking every cover chain inside a small ideal
        for k in (2, 3):
            top = (k,) * 3
            diagram = build_ideal(top, k)
            below = {v: set() for v in diagram.vertices()}
            for p, ups in diagram.up_edges.items():
                for q in ups:
                    below[q].add(p)
            reach = {}

            def reachable(v):
                if v not in reach:
                    acc = {v}
                    for p in below[v]:
                        acc |= reachable(p)
                    reach[v] = acc
                return reach[v]

            for b in diagram.vertices():
                for a in diagram.vertices():
                    assert leq(a, b, k) == (a in reachable(b)), (a, b, k)

    def test_union_with_rectangle_translates_order(self):
        # joining a k-rectangle to both sides preserves the relation, and
        # anything above lam + box decomposes as mu + box
        k = 3
        for rect in all_k_rectangles(k):
            box = rect.parts
            for lam in k_bounded_partitions(k, 4):
                for mu in k_bounded_partitions(k, 5):
                    if sum(mu) < sum(lam):
                        continue
                    assert leq(union(lam, box), union(mu, box), k) == leq(lam, mu, k)
                for nu in k_bounded_partitions(k, sum(lam) + sum(box) + 2):
                    if sum(nu) < sum(lam) + sum(box):
                        continue
                    lhs = leq(union(lam, box), nu, k)
                    h = len(box)
                    stripped = list(nu)
                    ok = True
                    for _ in range(h):
                        try:
                            stripped.remove(box[0])
                        except ValueError:
                            ok = False
                            break
                    rhs = ok and leq(lam, tuple(stripped), k)
                    assert lhs == rhs, (lam, box, nu)


class TestHasseDiagram:
    def test_build_ideal_chain(self):
        d = build_ideal((3, 3, 3), 3)
        assert d.vertex_count() == 10
        assert d.edge_count() == 9
        assert [len(r) for r in d.ranks] == [1] * 10

    def test_build_ideal_counts(self):
        assert build_ideal((3, 3, 3), 4).vertex_count() == 16
        assert build_ideal((3, 3, 3), 5).vertex_count() == 20

    def test_build_ideal_closed_downward(self):
        d = build_ideal((2, 2, 1), 2)
        verts = set(d.vertices())
        for v in verts:
            for q in covers(v, 2, "down"):
                assert q in verts

    def test_edges_match_covers_within_ideal(self):
        d = build_ideal((3, 2), 3)
        verts = set(d.vertices())
        for p in verts:
            expected = tuple(q for q in covers(p, 3, "up") if q in verts)
            assert d.up_edges[p] == expected

    def test_build_graded_rank_sizes(self):
        d = build_graded(2, 4)
        assert [len(r) for r in d.ranks] == [1, 1, 2, 2, 3]
        assert d.ranks[2] == [(1, 1), (2,)]

    def test_build_graded_all_bounded_partitions_present(self):
        d = build_graded(3, 6)
        expected = sorted(k_bounded_partitions(3, 6), key=lambda p: (sum(p), p))
        assert sorted(d.vertices(), key=lambda p: (sum(p), p)) == expected

    def test_index_and_edges(self):
        d = build_graded(1, 3)
        assert d.index()[(1, 1)] == 2
        assert d.edges() == [((), (1,)), ((1,), (1, 1)), ((1, 1), (1, 1, 1))]
        assert d.to_json_dict()["edges"] == [[0, 1], [1, 2], [2, 3]]

    def test_graded_validates(self):
        with pytest.raises(ValueError):
            build_graded(0, 3)
        with pytest.raises(ValueError):
            build_graded(2, -1)

    def test_ideal_validates(self):
        with pytest.raises(ValueError):
            build_ideal((3,), 2)

    def test_json_round_trip_structure(self):
        d = build_ideal((2,), 2)
        doc = d.to_json_dict()
        assert json.dumps(doc)
        assert doc["k"] == 2
        assert doc["ranks"] == [[[]], [[1]], [[2]]]
        assert doc["edges"] == [[0, 1], [1, 2]]
        assert doc["name"] == "ideal [2]"

    def test_dot_output_golden(self):
        d = build_ideal((1, 1), 1)
        expected = "\n".join(
            [
                "digraph kyoung {",
                "  rankdir=BT;",
                "  node [shape=box];",
                '  { rank=same; v0 [label="[]"]; }',
                '  { rank=same; v1 [label="[1]"]; }',
                '  { rank=same; v2 [label="[1,1]"]; }',
                "  v0 -> v1;",
                "  v1 -> v2;",
                "}",
            ]
        )
        assert d.to_dot() == expected + "\n"

    def test_dot_contains_all_edges(self):
        d = build_graded(2, 3)
        dot = d.to_dot()
        idx = d.index()
        for v, u in d.edges():
            assert f"v{idx[v]} -> v{idx[u]};" in dot


class TestRectangleTranslation:
    def test_single_witness(self):
        w = check_rectangle_translation((1,), all_k_rectangles(2)[0], 2)
        assert w.equal
        assert w.lhs == tuple(sorted(w.rhs))

    def test_sweep_small(self):
        for k in (2, 3):
            for rect in all_k_rectangles(k):
                for lam in k_bounded_partitions(k, 6):
                    w = check_rectangle_translation(lam, rect, k)
                    assert w.equal, (lam, rect.parts, k)

    def test_rejects_unbounded(self):
        with pytest.raises(ValueError):
            check_rectangle_translation((3,), all_k_rectangles(2)[0], 2)
