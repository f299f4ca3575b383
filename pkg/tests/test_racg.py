import itertools
import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubemedian.errors import InvalidInputError, ResourceCapError
from cubemedian.racg import (
    DefiningGraph,
    GroupElement,
    load_defining_graph,
    parse_word,
    word_to_text,
)


def words(group, *texts):
    return [group.element_from_symbols(t) for t in texts]


class TestNormalize:
    def test_involution_cancellation(self, c5):
        assert c5.normalize("aa").word == ()

    def test_commutation_swap(self, c5):
        # a < b and they commute, so ba rewrites to ab
        assert c5.normalize("ba").symbols() == ("a", "b")

    def test_no_cancellation(self, c5):
        assert c5.normalize("aca").symbols() == ("a", "c", "a")

    def test_longer_relation(self, c5):
        assert c5.normalize("abab").word == ()

    def test_idempotent(self, c5):
        g = c5.normalize("bacadeab")
        assert c5.normalize(g.word) == g

    def test_invalid_generator(self, c5):
        with pytest.raises(InvalidInputError):
            c5.normalize("axe")
        with pytest.raises(InvalidInputError):
            c5.normalize([0, 9])

    @given(st.lists(st.integers(0, 4), max_size=12), st.randoms())
    @settings(max_examples=60, deadline=None)
    def test_constant_on_commutation_classes(self, c5, word, rnd):
        """Random legal adjacent swaps of a word do not change its form."""
        nf = list(c5.normalize(word).word)
        shuffled = list(nf)
        for _ in range(20):
            if len(shuffled) < 2:
                break
            i = rnd.randrange(len(shuffled) - 1)
            if c5.commute(shuffled[i], shuffled[i + 1]):
                shuffled[i], shuffled[i + 1] = shuffled[i + 1], shuffled[i]
        assert c5.normalize(shuffled).word == tuple(nf)

    @given(st.lists(st.integers(0, 4), max_size=10))
    @settings(max_examples=60, deadline=None)
    def test_word_times_reverse_cancels(self, c5, word):
        assert c5.normalize(word + word[::-1]).word == ()


class TestComposeInvert:
    def test_generator_squares(self, c5):
        a = c5.generator_element("a")
        assert c5.compose(a, a).word == ()

    def test_invert_reverses(self, c5):
        g = c5.normalize("ac")
        assert c5.invert(g).symbols() == ("c", "a")

    def test_compose_cancels_through_commutation(self, c5):
        g, h = words(c5, "ab", "b")
        assert c5.compose(g, h).symbols() == ("a",)

    def test_mismatched_presentations(self, c5, tree3):
        with pytest.raises(InvalidInputError):
            c5.compose(c5.identity, tree3.identity)

    @given(st.lists(st.integers(0, 4), max_size=8),
           st.lists(st.integers(0, 4), max_size=8))
    @settings(max_examples=40, deadline=None)
    def test_inverse_law(self, c5, w1, w2):
        g, h = c5.normalize(w1), c5.normalize(w2)
        gh = c5.compose(g, h)
        assert c5.invert(gh) == c5.compose(c5.invert(h), c5.invert(g))


class TestDistance:
    def test_reduced_length(self, c5):
        assert c5.distance(c5.identity, c5.normalize("aca")) == 3

    def test_square_relation(self, c5):
        assert c5.distance(c5.identity, c5.normalize("abab")) == 0

    def test_one_step(self, c5):
        assert c5.distance(*words(c5, "a", "ac")) == 1

    def test_symmetric_and_triangle(self, c5):
        rng = random.Random(5)
        els = [c5.normalize([rng.randrange(5) for _ in range(rng.randrange(7))])
               for _ in range(12)]
        for g, h in itertools.combinations(els, 2):
            assert c5.distance(g, h) == c5.distance(h, g)
        for g, h, k in itertools.combinations(els, 3):
            assert c5.distance(g, k) <= c5.distance(g, h) + c5.distance(h, k)


class TestWalls:
    def test_wall_at_identity(self, c5):
        assert c5.wall_of_edge(c5.identity, "a").reflection.symbols() == ("a",)

    def test_wall_is_conjugate(self, c5):
        wall = c5.wall_of_edge(c5.normalize("a"), "c")
        assert wall.reflection.symbols() == ("a", "c", "a")

    def test_commuting_conjugation_collapses(self, c5):
        wall = c5.wall_of_edge(c5.normalize("b"), "a")
        assert wall.reflection.symbols() == ("a",)

    def test_orientation_independence_exhaustive(self, c5):
        ball = c5.ball(4)
        for g in ball.vertices:
            for s in range(c5.rank):
                gs = c5.compose(g, c5.generator_element(s))
                assert c5.wall_of_edge(g, s) == c5.wall_of_edge(gs, s)

    def test_reflections_are_involutions(self, c5):
        for g in c5.ball(3).vertices:
            for s in range(c5.rank):
                assert c5.wall_of_edge(g, s).is_involution()

    def test_walls_separating_examples(self, c5):
        sep = c5.walls_separating(c5.identity, c5.normalize("ac"))
        assert {w.reflection.symbols() for w in sep} == {("a",), ("a", "c", "a")}
        sep = c5.walls_separating(c5.identity, c5.normalize("ab"))
        assert {w.reflection.symbols() for w in sep} == {("a",), ("b",)}
        g = c5.normalize("de")
        assert c5.walls_separating(g, g) == frozenset()

    def test_independent_of_reduced_expression(self, c5):
        from cubemedian import geometry

        for g in c5.ball(2).vertices:
            expected = c5.walls_separating(c5.identity, g)
            for path in geometry.geodesics_between(c5, c5.identity, g).paths:
                along = {
                    c5.wall(u, v)
                    for u, v in zip(path.vertices, path.vertices[1:])
                }
                assert along == expected

    def test_cardinality_is_distance(self, c5):
        for g, h in itertools.combinations(c5.ball(2).vertices, 2):
            assert len(c5.walls_separating(g, h)) == c5.distance(g, h)


class TestBall:
    def test_tree_ball2(self, tree3):
        assert len(tree3.ball(2).vertices) == 10

    def test_c5_ball1(self, c5):
        assert len(c5.ball(1).vertices) == 6

    def test_c5_ball2_against_enumeration(self, c5):
        # oracle: normalize every word of length <= 2 and deduplicate
        distinct = {c5.normalize(w).word
                    for k in range(3)
                    for w in itertools.product(range(5), repeat=k)}
        assert len(distinct) == 21
        assert len(c5.ball(2).vertices) == 21

    def test_c5_ball4_against_enumeration(self, c5):
        distinct = {c5.normalize(w).word
                    for k in range(5)
                    for w in itertools.product(range(5), repeat=k)}
        assert len(distinct) == 166
        assert len(c5.ball(4).vertices) == 166

    @pytest.mark.parametrize("radius", [1, 2, 3, 4])
    def test_sphere_recurrence(self, c5, tree3, square, radius):
        for group in (c5, tree3, square):
            assert group.ball(radius).sphere_sizes() == group.sphere_sizes(radius)

    def test_monotone_prefix(self, c5):
        small = c5.ball(2).vertices
        big = c5.ball(3).vertices
        assert big[: len(small)] == small

    def test_prefix_closed(self, c5):
        ball = c5.ball(3)
        for v in ball.vertices:
            for k in range(len(v.word)):
                assert v.word[:k] in ball

    def test_every_edge_has_reverse(self, c5):
        ball = c5.ball(2)
        edges = set(ball.edges)
        assert all((j, i, s) in edges for i, j, s in edges)

    def test_cap_is_an_error(self, c5):
        with pytest.raises(ResourceCapError):
            c5.ball(3, cap=10)

    def test_ball_orders_by_shortlex(self, c5):
        keys = [v.sort_key for v in c5.ball(3).vertices]
        assert keys == sorted(keys)

    def test_snapshot_cache_roundtrip(self, c5, tmp_path):
        first = c5.ball(2, cache_dir=tmp_path)
        assert any(tmp_path.iterdir())
        second = c5.ball(2, cache_dir=tmp_path)
        assert [v.word for v in second.vertices] == [v.word for v in first.vertices]
        assert second.edges == first.edges


class TestHyperbolicityGate:
    def test_pentagon_has_no_induced_square(self, c5):
        assert c5.is_hyperbolic()

    def test_square_presentation_rejected(self):
        c4 = DefiningGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
        assert not c4.is_hyperbolic()

    def test_edgeless_is_hyperbolic(self, tree3):
        assert tree3.is_hyperbolic()

    def test_square_inside_larger_graph(self):
        g = DefiningGraph(
            "abcdx",
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("x", "a")],
        )
        assert not g.is_hyperbolic()

    def test_clique_is_fine(self):
        # a 4-clique has squares but none induced
        g = DefiningGraph("abcd", [(x, y) for x, y in itertools.combinations("abcd", 2)])
        assert g.is_hyperbolic()


class TestSerialization:
    def test_load_roundtrip(self, c5, data_dir):
        loaded = load_defining_graph(data_dir / "c5.json")
        assert loaded == c5
        assert load_defining_graph(loaded.to_dict()) == c5

    def test_missing_field(self):
        with pytest.raises(InvalidInputError, match="generators"):
            load_defining_graph({"commuting": []})

    def test_bad_pair(self):
        with pytest.raises(InvalidInputError, match="pair"):
            load_defining_graph({"generators": ["a"], "commuting": [["a"]]})

    def test_reflexive_pair(self):
        with pytest.raises(InvalidInputError):
            DefiningGraph("ab", [("a", "a")])

    def test_duplicate_generators(self):
        with pytest.raises(InvalidInputError):
            DefiningGraph("aa")

    def test_word_text_roundtrip(self, c5):
        g = c5.normalize("aceb")
        assert c5.element_from_symbols(word_to_text(g)) == g
        assert word_to_text(c5.identity) == ""

    def test_parse_multichar_generators(self):
        g = DefiningGraph(["s1", "s2"], [("s1", "s2")])
        assert parse_word(g, "s2 s1") == [1, 0]
        el = g.normalize([1, 0])
        assert g.element_from_symbols(word_to_text(el)) == el


class TestElementOrder:
    def test_shortlex(self, c5):
        a, b, ab, aca = words(c5, "a", "b", "ab", "aca")
        assert a < b < ab < aca
        assert sorted([aca, a, ab, b]) == [a, b, ab, aca]

    def test_str_uses_one_for_identity(self, c5):
        assert str(c5.identity) == "1"
        assert str(c5.normalize("e")) == "e"
