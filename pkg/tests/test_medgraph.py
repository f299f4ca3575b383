import itertools

import pytest

from cubemedian.errors import InvalidInputError
from cubemedian.geometry import interval
from cubemedian.medgraph import (
    ExplicitGraph,
    halfspaces,
    load_explicit_graph,
    theta_classes,
    validate_median,
)


class TestConstruction:
    def test_loop_rejected(self):
        with pytest.raises(InvalidInputError, match="loop"):
            ExplicitGraph(2, [(0, 0)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(InvalidInputError, match="duplicated"):
            ExplicitGraph(2, [(0, 1), (1, 0)])

    def test_disconnected_rejected(self):
        with pytest.raises(InvalidInputError, match="connected"):
            ExplicitGraph(4, [(0, 1), (2, 3)])

    def test_out_of_range_edge(self):
        with pytest.raises(InvalidInputError, match="out of range"):
            ExplicitGraph(2, [(0, 5)])

    def test_bad_basepoint(self):
        with pytest.raises(InvalidInputError, match="basepoint"):
            ExplicitGraph(2, [(0, 1)], basepoint=7)


class TestMedianValidation:
    def test_cube_accepted(self, q3_graph):
        assert validate_median(q3_graph).ok

    def test_square_accepted(self, c4_graph):
        assert validate_median(c4_graph).ok

    def test_pentagon_rejected_with_witness(self, c5_graph):
        check = validate_median(c5_graph)
        assert not check.ok
        assert check.witness == (0, 1, 3)
        assert check.median_count == 0

    def test_path_and_tree_accepted(self, p3_graph):
        assert validate_median(p3_graph).ok
        star = ExplicitGraph(4, [(0, 1), (0, 2), (0, 3)])
        assert validate_median(star).ok

    def test_k4_rejected(self):
        k4 = ExplicitGraph(4, list(itertools.combinations(range(4), 2)))
        check = validate_median(k4)
        assert not check.ok
        assert check.median_count == 0

    def test_k23_rejected_with_two_medians(self):
        # vertices 0,1 on one side and 2,3,4 on the other; the triple
        # (2,3,4) has both 0 and 1 as medians
        k23 = ExplicitGraph(5, [(i, j) for i in (0, 1) for j in (2, 3, 4)])
        check = validate_median(k23)
        assert not check.ok
        assert check.witness == (2, 3, 4)
        assert check.median_count == 2

    def test_brute_force_agreement(self, q3_graph, c5_graph):
        """Oracle: medians by direct triple-interval intersection."""
        for graph in (q3_graph, c5_graph):
            n = graph.vertex_count
            d = graph.distance_matrix()

            def between(x, y):
                return {w for w in range(n) if d[x][w] + d[w][y] == d[x][y]}

            expected_ok = True
            expected_witness = None
            for x, y, z in itertools.combinations(range(n), 3):
                meds = between(x, y) & between(y, z) & between(x, z)
                if len(meds) != 1:
                    expected_ok = False
                    expected_witness = (x, y, z)
                    break
            check = validate_median(graph)
            assert check.ok == expected_ok
            assert check.witness == expected_witness


class TestThetaClasses:
    def test_square_has_two_parallel_classes(self, c4_graph):
        theta = theta_classes(c4_graph)
        assert len(theta.halves) == 2
        by_class = {}
        for edge, k in theta.class_of_edge.items():
            by_class.setdefault(k, set()).add(edge)
        assert sorted(len(v) for v in by_class.values()) == [2, 2]
        k = theta.class_of_edge[(0, 1)]
        assert by_class[k] == {(0, 1), (2, 3)}

    def test_cube_has_three_classes_of_four(self, q3_graph):
        theta = theta_classes(q3_graph)
        assert len(theta.halves) == 3
        counts = {}
        for k in theta.class_of_edge.values():
            counts[k] = counts.get(k, 0) + 1
        assert sorted(counts.values()) == [4, 4, 4]

    def test_path_has_singleton_classes(self, p3_graph):
        theta = theta_classes(p3_graph)
        assert len(theta.halves) == 2
        assert sorted(theta.class_of_edge.values()) == [0, 1]

    def test_non_median_input_rejected(self, c5_graph):
        with pytest.raises(InvalidInputError, match="not median"):
            theta_classes(c5_graph)

    def test_djokovic_condition_matches_classes(self, q3_graph, c4_graph):
        """The class relation agrees with the distance-sum criterion."""
        for graph in (q3_graph, c4_graph):
            theta = theta_classes(graph)
            d = graph.distance_matrix()
            for (u, v), (x, y) in itertools.combinations(graph.edges, 2):
                same = theta.class_of_edge[(u, v)] == theta.class_of_edge[(x, y)]
                djokovic = d[u][x] + d[v][y] != d[u][y] + d[v][x]
                assert same == djokovic


class TestHalfspaces:
    def test_square_halves(self, c4_graph):
        theta = theta_classes(c4_graph)
        k = theta.class_of_edge[(0, 1)]
        assert halfspaces(c4_graph, k) == ((0, 3), (1, 2))

    def test_tree_edge_splits_branches(self):
        star = ExplicitGraph(4, [(0, 1), (0, 2), (0, 3)])
        theta = theta_classes(star)
        k = theta.class_of_edge[(0, 1)]
        assert halfspaces(star, k) == ((0, 2, 3), (1,))

    def test_cube_opposite_faces(self, q3_graph):
        for k in range(3):
            first, second = halfspaces(q3_graph, k)
            assert len(first) == 4 and len(second) == 4
            assert q3_graph.basepoint in first

    def test_invalid_class(self, c4_graph):
        with pytest.raises(InvalidInputError, match="out of range"):
            halfspaces(c4_graph, 99)

    def test_halves_partition_vertices(self, q3_graph):
        theta = theta_classes(q3_graph)
        everything = set(range(q3_graph.vertex_count))
        for first, second in theta.halves:
            assert set(first) | set(second) == everything
            assert not set(first) & set(second)


def grid_graph(w, h):
    """w x h grid: a product of paths, hence median."""
    edges = []
    for i in range(w):
        for j in range(h):
            v = i * h + j
            if j + 1 < h:
                edges.append((v, v + 1))
            if i + 1 < w:
                edges.append((v, v + h))
    return ExplicitGraph(w * h, edges)


class TestMetricWallDuality:
    @pytest.mark.parametrize("name", ["q3", "c4", "grid", "star"])
    def test_distance_counts_separating_classes(self, name, q3_graph, c4_graph):
        graph = {
            "q3": q3_graph,
            "c4": c4_graph,
            "grid": grid_graph(3, 4),
            "star": ExplicitGraph(5, [(0, i) for i in range(1, 5)]),
        }[name]
        for u in range(graph.vertex_count):
            for v in range(graph.vertex_count):
                assert graph.distance(u, v) == len(graph.walls_separating(u, v))

    def test_halves_are_convex(self, q3_graph, c4_graph):
        for graph in (q3_graph, c4_graph, grid_graph(3, 3)):
            theta = theta_classes(graph)
            for first, second in theta.halves:
                for half in (first, second):
                    hs = set(half)
                    for a, b in itertools.combinations(half, 2):
                        assert interval(graph, a, b) <= hs

    def test_side_of_wall(self, c4_graph):
        theta = theta_classes(c4_graph)
        k = theta.class_of_edge[(0, 1)]
        assert c4_graph.side_of_wall(k, 0)
        assert c4_graph.side_of_wall(k, 3)
        assert not c4_graph.side_of_wall(k, 1)


class TestSerialization:
    def test_load_file(self, data_dir, q3_graph):
        loaded = load_explicit_graph(data_dir / "q3_graph.json")
        assert loaded.vertex_count == 8
        assert loaded.edges == q3_graph.edges
        assert loaded.basepoint == 0

    def test_missing_vertices_field(self):
        with pytest.raises(InvalidInputError, match="vertices"):
            load_explicit_graph({"edges": []})

    def test_bad_edges_field(self):
        with pytest.raises(InvalidInputError, match="edges"):
            load_explicit_graph({"vertices": 2, "edges": 5})

    def test_roundtrip(self, c4_graph):
        again = load_explicit_graph(c4_graph.to_dict())
        assert again.edges == c4_graph.edges
