import pytest
from pydantic import ValidationError
from qsymkit.classical import (
    PermutationSolution,
    classical_points,
    classical_solutions,
    enumerate_graph_automorphisms,
    enumerate_metric_automorphisms,
    group_order_and_orbits,
)
from qsymkit.models import CantorForm
from qsymkit.presentations import (
    cantor_level_presentation,
    magic_unitary_presentation,
    metric_commutation_presentation,
)
from qsymkit.algebra import GeneratorUniverse, Presentation
from qsymkit.spaces import FiniteGraph


def _solutions(*perms):
    return [PermutationSolution(perm=perm) for perm in perms]


class TestPermutationSolution:
    def test_one_line(self):
        """One-line notation lists the images."""
        assert PermutationSolution(perm=(2, 0, 1)).one_line() == "2 0 1"

    def test_rejects_non_bijections(self):
        """A repeated image is not a permutation."""
        with pytest.raises(ValidationError, match="not a permutation"):
            PermutationSolution(perm=(0, 0))


class TestEnumerateMetricAutomorphisms:
    def test_square(self, square):
        """The eight symmetries of the square, sorted."""
        solutions = enumerate_metric_automorphisms(square)

        assert [s.one_line() for s in solutions] == [
            "0 1 2 3",
            "0 3 2 1",
            "1 0 3 2",
            "1 2 3 0",
            "2 1 0 3",
            "2 3 0 1",
            "3 0 1 2",
            "3 2 1 0",
        ]

    def test_scalene(self, scalene):
        """Distinct distances leave only the identity."""
        assert [s.perm for s in enumerate_metric_automorphisms(scalene)] == [(0, 1, 2)]

    def test_size_cap(self, square):
        """Spaces larger than the cap are refused."""
        with pytest.raises(ValueError, match="exceed the size cap 3"):
            enumerate_metric_automorphisms(square, size_cap=3)


class TestEnumerateGraphAutomorphisms:
    def test_path(self):
        """A path has its reflection."""
        G = FiniteGraph(vertices=["a", "b", "c"], edges=[("a", "b"), ("b", "c")])

        assert [s.perm for s in enumerate_graph_automorphisms(G)] == [(0, 1, 2), (2, 1, 0)]

    def test_directed_cycle(self):
        """A directed 3-cycle has only its rotations."""
        G = FiniteGraph(vertices=["a", "b", "c"], edges=[("a", "b"), ("b", "c"), ("c", "a")], directed=True)

        assert [s.perm for s in enumerate_graph_automorphisms(G)] == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]


class TestGroupOrderAndOrbits:
    def test_dihedral_group(self, square):
        """The square's symmetries act transitively."""
        summary = group_order_and_orbits(enumerate_metric_automorphisms(square))

        assert summary.order == 8
        assert summary.orbits == [[0, 1, 2, 3]]

    def test_orbits_of_a_reflection(self):
        """A single transposition has one orbit of size two."""
        summary = group_order_and_orbits(_solutions((0, 1, 2), (2, 1, 0)))

        assert summary.order == 2
        assert summary.orbits == [[0, 2], [1]]

    def test_missing_identity(self):
        """Groups contain the identity."""
        with pytest.raises(ValueError, match="identity"):
            group_order_and_orbits(_solutions((1, 0)))

    def test_not_closed(self):
        """A 3-cycle without its square is not a group."""
        with pytest.raises(ValueError, match="not closed"):
            group_order_and_orbits(_solutions((0, 1, 2), (1, 2, 0)))

    def test_empty(self):
        """The empty set is not a group."""
        with pytest.raises(ValueError):
            group_order_and_orbits([])


class TestClassicalSolutions:
    def test_magic_unitary(self):
        """All permutations of three points."""
        assert len(classical_solutions(magic_unitary_presentation(3))) == 6

    def test_matches_enumeration(self, square):
        """The commutation scheme sees exactly the isometries."""
        found = [s.perm for s in classical_solutions(metric_commutation_presentation(square))]

        assert found == [s.perm for s in enumerate_metric_automorphisms(square)]

    def test_multi_block_permutations(self):
        """Blocks of a tower are read one after another."""
        solutions = classical_solutions(cantor_level_presentation(2, CantorForm.REDUCED))

        assert len(solutions) == 8
        assert all(len(s.perm) == 2 + 4 for s in solutions)

    def test_points_carry_values(self):
        """Each point records the generator values it came from."""
        points = classical_points(magic_unitary_presentation(2))

        assert [values for values, _ in points] == [
            {"q11": 0, "q12": 1, "q21": 1, "q22": 0},
            {"q11": 1, "q12": 0, "q21": 0, "q22": 1},
        ]
        assert [s.perm for _, s in points] == [(1, 0), (0, 1)]

    def test_presentation_without_blocks(self):
        """Permutations are read from magic-unitary blocks."""
        universe = GeneratorUniverse.from_names(["x"])
        P = Presentation.build(universe, [universe.gen("x") - 1])

        with pytest.raises(ValueError, match="no magic-unitary block"):
            classical_points(P)
