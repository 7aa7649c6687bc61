"""Polygon triangulations: validity, faces, ears, simplicity, keys."""

import itertools

import pytest
from hypothesis import given, strategies as st

from flipforge.phi import colored_triangulation_from_word, triangulation_from_permutation
from flipforge.triangulation import (
    Face,
    Triangulation,
    VertexRing,
    all_triangulations,
    canonical_key,
    crossing,
    ears,
    edge_adjacency,
    faces,
    is_simple,
    is_valid,
    third_vertex,
    triangulation_from_key,
    validate,
)

from refdata import CATALAN, PHI_235461


def tri(n, *diags):
    return Triangulation(n, tuple(diags))


class TestVertexRing:
    def test_basic_layout(self):
        r = VertexRing(3)
        assert r.infinity == 4
        assert list(r.vertices) == [0, 1, 2, 3, 4]
        assert list(r.inner) == [1, 2, 3]

    def test_pred_succ_are_linear(self):
        r = VertexRing(3)
        assert r.pred(4) == 3
        assert r.succ(0) == 1
        with pytest.raises(ValueError):
            r.pred(0)
        with pytest.raises(ValueError):
            r.succ(4)

    def test_boundary_edges(self):
        r = VertexRing(2)
        assert r.boundary_edges() == {(0, 1), (1, 2), (2, 3), (0, 3)}


class TestCrossing:
    def test_examples(self):
        assert crossing((0, 2), (1, 3))
        assert not crossing((0, 2), (0, 3))
        assert not crossing((0, 2), (2, 4))

    @given(st.lists(st.integers(0, 12), min_size=4, max_size=4, unique=True))
    def test_symmetric(self, vs):
        d1, d2 = (vs[0], vs[1]), (vs[2], vs[3])
        d1, d2 = tuple(sorted(d1)), tuple(sorted(d2))
        assert crossing(d1, d2) == crossing(d2, d1)


class TestValidate:
    def test_square_single_diagonal_ok(self):
        assert validate(tri(2, (0, 2))) == []
        assert is_valid(tri(2, (0, 2)))

    def test_overfull_square_rejected(self):
        problems = validate(tri(2, (0, 2), (1, 3)))
        assert problems  # wrong count and crossing

    def test_pentagon_example_ok(self):
        assert validate(tri(3, (1, 3), (0, 3))) == []

    def test_bad_inputs(self):
        assert validate(tri(2, (0, 5)))  # out of range
        assert validate(tri(2, (0, 1)))  # boundary edge is not a diagonal
        assert validate(tri(3, (0, 2), (2, 0)))  # duplicate after normalization
        assert validate(tri(3, (0, 2)))  # too few

    def test_diagonals_normalized_sorted(self):
        t = tri(3, (3, 0), (3, 1))
        assert t.diagonals == ((0, 3), (1, 3))


class TestEars:
    def test_examples(self):
        assert ears(tri(2, (0, 2))) == {1, 3}
        assert ears(tri(3, (1, 3), (0, 3))) == {2, 4}
        assert ears(tri(1)) == {0, 1, 2}

    def test_at_least_two_never_adjacent(self):
        for n in range(2, 7):
            for t in all_triangulations(n):
                e = ears(t)
                ring = VertexRing(n)
                assert len(e) >= 2
                assert all(0 <= v <= ring.infinity for v in e)
                for v in e:
                    assert (v + 1) % (n + 2) not in e


class TestFaces:
    def test_examples(self):
        assert faces(tri(1)) == [Face(0, 1, 2)]
        assert faces(tri(1))[0].label == 1
        assert set(faces(tri(2, (0, 2)))) == {Face(0, 1, 2), Face(0, 2, 3)}
        assert {f.label for f in faces(tri(3, (1, 3), (0, 3)))} == {1, 2, 3}

    def test_label_bijection_and_degree_law(self):
        for n in range(1, 7):
            for t in all_triangulations(n):
                fs = faces(t)
                assert len(fs) == n
                assert sorted(f.label for f in fs) == list(range(1, n + 1))
                assert len(t.diagonals) == n - 1
                # a vertex of degree d belongs to exactly d - 1 faces
                adj = edge_adjacency(t)
                for v in range(n + 2):
                    deg = len(adj[v])
                    assert sum(v in f for f in fs) == deg - 1

    def test_faces_are_genuine_triangles(self):
        for t in all_triangulations(5):
            edges = set(VertexRing(5).boundary_edges()) | set(t.diagonals)
            for x, y, z in faces(t):
                assert x < y < z
                for e in ((x, y), (y, z), (x, z)):
                    assert e in edges


class TestThirdVertex:
    def test_examples(self):
        assert third_vertex(tri(2, (0, 2)), 1) == 0
        assert third_vertex(tri(2, (1, 3)), 1) == 3

    def test_order_signal_on_reading_image(self):
        # 3 precedes 4 in 235461, so the face on edge {3,4} points down
        t = triangulation_from_permutation((2, 3, 5, 4, 6, 1))
        assert third_vertex(t, 3) < 3

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            third_vertex(tri(2, (0, 2)), 0)
        with pytest.raises(ValueError):
            third_vertex(tri(2, (0, 2)), 2)


class TestEnumeration:
    def test_counts_match_catalan(self):
        for n in range(0, 9):
            ts = list(all_triangulations(n))
            assert len(ts) == CATALAN[n]
            keys = {canonical_key(t) for t in ts}
            assert len(keys) == CATALAN[n]
            assert all(is_valid(t) for t in ts)

    def test_hexagon_has_14_distinct_keys(self):
        assert len({canonical_key(t) for t in all_triangulations(4)}) == 14


class TestSimple:
    def test_image_of_colored_reading_is_simple(self):
        t, eps = colored_triangulation_from_word((2, 2, 3, 2, 3, 1))
        assert is_simple(t, eps)

    def test_equal_color_diagonal_rejected(self):
        t = tri(3, (1, 3), (0, 3))
        assert not is_simple(t, (1, 2, 1))

    def test_distinct_increasing_colors_always_simple(self):
        for t in all_triangulations(4):
            assert is_simple(t, (1, 2, 3, 4))

    def test_decreasing_colors_rejected(self):
        t = tri(2, (0, 2))
        assert not is_simple(t, (2, 1))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            is_simple(tri(2, (0, 2)), (1,))

    def test_agrees_with_literal_three_rules(self):
        # independent re-derivation of the definition, n <= 5, p <= 3
        def brute(t, eps):
            if list(eps) != sorted(eps):
                return False
            for i, j in t.diagonals:
                both_inner = 1 <= i and j <= t.n
                if both_inner and eps[i - 1] == eps[j - 1]:
                    return False
            fs = faces(t)
            for i in range(1, t.n):
                if eps[i - 1] != eps[i]:
                    continue
                holder = [f for f in fs if i in f and i + 1 in f]
                assert len(holder) == 1
                (x, y, z) = holder[0]
                third = next(v for v in (x, y, z) if v not in (i, i + 1))
                if third >= i:
                    return False
            return True

        for n in range(1, 6):
            for t in all_triangulations(n):
                for eps in itertools.product((1, 2, 3), repeat=n):
                    assert is_simple(t, eps) == brute(t, eps)


class TestKeys:
    def test_example(self):
        assert canonical_key(tri(2, (0, 2))) == "2:0-2"

    def test_round_trip_all_small(self):
        for n in range(0, 7):
            for t in all_triangulations(n):
                assert triangulation_from_key(canonical_key(t)) == t

    def test_equal_objects_equal_keys(self):
        assert canonical_key(tri(3, (3, 1), (0, 3))) == canonical_key(tri(3, (0, 3), (1, 3)))

    @given(st.integers(0, 6), st.randoms())
    def test_key_is_injective_on_samples(self, n, rng):
        ts = list(all_triangulations(n))
        a, b = rng.choice(ts), rng.choice(ts)
        assert (canonical_key(a) == canonical_key(b)) == (a == b)
