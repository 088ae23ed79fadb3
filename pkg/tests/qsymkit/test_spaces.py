from fractions import Fraction
import pytest
from pydantic import ValidationError
from sympy import Matrix, Rational
from qsymkit.spaces import (
    INFINITY,
    FiniteGraph,
    FiniteMetricSpace,
    TreeDiagram,
    binary_tree,
    chain_diagram,
    from_points,
    graph_to_metric,
    laplacian,
    truncate,
    uniform_tree,
)


class TestFiniteMetricSpace:
    def test_entries_parse_as_rationals(self):
        """Strings, ints and "inf" are accepted."""
        X = FiniteMetricSpace(n=2, sqdist=[["0", "1/2"], ["1/2", 0]])

        assert X.sqdist[0][1] == Fraction(1, 2)
        assert not X.has_infinities()

    def test_from_points(self, square):
        """Squared Euclidean distances of the unit square."""
        assert square.sqdist[0] == (0, 1, 2, 1)

    @pytest.mark.parametrize(
        "sqdist, message",
        [
            ([[1, 1], [1, 0]], "must be 0"),
            ([[0, 1], [2, 0]], "not symmetric"),
            ([[0, -1], [-1, 0]], "strictly positive"),
            ([[0, 1]], "2x2 matrix"),
        ],
    )
    def test_invalid_matrices(self, sqdist, message):
        """Zero diagonal, symmetry and positivity are enforced."""
        with pytest.raises(ValidationError, match=message):
            FiniteMetricSpace(n=2, sqdist=sqdist)

    def test_triangle_violation_is_only_a_warning(self):
        """A non-metric distance matrix is still usable."""
        X = FiniteMetricSpace(n=3, sqdist=[[0, 1, 16], [1, 0, 1], [16, 1, 0]])

        assert X.n == 3

    def test_infinite_entries_split_into_two_weights(self):
        """Graph metrics commute with the finite part and the infinity indicator."""
        X = FiniteMetricSpace(n=2, sqdist=[[0, "inf"], ["inf", 0]])

        assert X.has_infinities()
        assert X.weight_matrices() == [
            ((0, 0), (0, 0)),
            ((0, 1), (1, 0)),
        ]
        assert X.to_payload() == {"n": 2, "sqdist": [["0", "inf"], ["inf", "0"]]}


class TestLaplacian:
    def test_two_points(self, two_points):
        """4/(2n-1) weights on off-diagonal entries, rows summing to zero."""
        L = laplacian(two_points)

        assert L == Matrix([[Rational(-4, 3), Rational(4, 3)], [Rational(4, 3), Rational(-4, 3)]])

    def test_rows_sum_to_zero(self, square):
        """Constants lie in the kernel."""
        L = laplacian(square)

        assert all(sum(L.row(i)) == 0 for i in range(square.n))
        assert L == L.T

    def test_single_point(self):
        """One point has no Laplacian."""
        with pytest.raises(ValueError, match="at least two points"):
            laplacian(FiniteMetricSpace(n=1, sqdist=[[0]]))


class TestFiniteGraph:
    def test_undirected_edges_are_symmetrized(self):
        """An undirected edge is stored in both directions."""
        G = FiniteGraph(vertices=["a", "b"], edges=[("a", "b")])

        assert G.adjacency() == ((False, True), (True, False))

    def test_unknown_vertex(self):
        """Edges reference declared vertices."""
        with pytest.raises(ValidationError, match="unknown vertex"):
            FiniteGraph(vertices=["a"], edges=[("a", "b")])

    def test_self_loop(self):
        """Self-loops are rejected."""
        with pytest.raises(ValidationError, match="self-loop"):
            FiniteGraph(vertices=["a"], edges=[("a", "a")])

    def test_graph_metric(self):
        """Adjacent vertices are at distance 1, others at infinity."""
        G = FiniteGraph(vertices=["a", "b", "c"], edges=[("a", "b")])
        X = graph_to_metric(G)

        assert X.sqdist == ((0, 1, INFINITY), (1, 0, INFINITY), (INFINITY, INFINITY, 0))

    def test_graph_metric_needs_undirected_graph(self):
        """Directed graphs have no symmetric metric."""
        G = FiniteGraph(vertices=["a", "b"], edges=[("a", "b")], directed=True)

        with pytest.raises(ValueError, match="undirected"):
            graph_to_metric(G)


class TestTreeDiagram:
    def test_binary_tree(self):
        """Level j of the binary tree has 2^j vertices."""
        T = binary_tree(3)

        assert T.levels == (1, 2, 4, 8)
        assert T.depth == 3
        assert T.children(1, 1) == [2, 3]

    def test_chain(self):
        """A chain has one vertex per level."""
        assert chain_diagram(2).levels == (1, 1, 1)

    def test_root_level(self):
        """Level 0 is a single vertex."""
        with pytest.raises(ValidationError, match="exactly one vertex"):
            TreeDiagram(levels=[2], parents=[])

    def test_parent_maps_are_surjective(self):
        """Every vertex above the bottom has a child."""
        with pytest.raises(ValidationError, match="not surjective"):
            TreeDiagram(levels=[1, 2, 2], parents=[[0, 0], [0, 0]])

    def test_invalid_uniform_tree(self):
        """Branching is positive."""
        with pytest.raises(ValueError):
            uniform_tree(0, 2)

    def test_truncate(self):
        """Truncation keeps levels 0..n with edges to parents."""
        G = truncate(binary_tree(2), 1)

        assert G.vertices == ("0.0", "1.0", "1.1")
        assert G.adjacency() == ((False, True, True), (True, False, False), (True, False, False))

    def test_truncate_beyond_depth(self):
        """Levels below the bottom do not exist."""
        with pytest.raises(ValueError, match="exceeds the depth"):
            truncate(binary_tree(1), 2)
