import pytest
from qsymkit.algebra import abelianize, reduce, substitute, zero_one_solutions
from qsymkit.classical import classical_solutions
from qsymkit.models import CantorForm
from qsymkit.presentations import (
    cantor_level_presentation,
    cantor_limit_presentation,
    cantor_reconstruction,
    tree_diagram_presentation,
)
from qsymkit.spaces import binary_tree, chain_diagram


class TestTreeDiagramPresentation:
    def test_generators_of_every_level(self):
        """Levels 1..n each contribute a magic unitary."""
        P = tree_diagram_presentation(binary_tree(2), 2)

        assert len(P.universe) == 4 + 16
        assert len(P.blocks) == 2
        assert P.metadata == {"levels": "2"}

    def test_interleaving_relations(self):
        """A level-1 entry is the sum of the level-2 entries below it, in each child column."""
        P = tree_diagram_presentation(binary_tree(2), 2)
        g = P.universe.gen

        assert g("a1[1,1]") - g("a2[1,1]") - g("a2[2,1]") in P.relations
        assert g("a1[1,1]") - g("a2[1,2]") - g("a2[2,2]") in P.relations

    def test_classical_points_of_binary_tree(self):
        """Level-preserving automorphisms of the depth-2 binary tree: 8 of them."""
        P = tree_diagram_presentation(binary_tree(2), 2)

        assert len(zero_one_solutions(abelianize(P))) == 8

    def test_chain_is_trivial(self):
        """A chain has one vertex per level and one classical point."""
        P = tree_diagram_presentation(chain_diagram(2), 2)

        assert zero_one_solutions(abelianize(P)) == [(1, 1)]

    @pytest.mark.parametrize("level", [0, 3])
    def test_level_out_of_range(self, level):
        """Levels run from 1 to the depth."""
        with pytest.raises(ValueError, match="out of range"):
            tree_diagram_presentation(binary_tree(2), level)


class TestCantorLevelPresentation:
    def test_raw_level_one(self):
        """Level 1 of the raw tower is a 2x2 magic unitary on multi-indices."""
        P = cantor_level_presentation(1)

        assert P.universe.names == ("a[1,1]", "a[1,2]", "a[2,1]", "a[2,2]")
        assert P.metadata["form"] == "raw"

    def test_reduced_level_two(self):
        """p and one subprojection per level-1 entry."""
        P = cantor_level_presentation(2, CantorForm.REDUCED)
        g = P.universe.gen

        assert P.universe.names == ("p", "q1", "q2", "q3", "q4")
        # q1 <= p and q2 <= 1 - p
        assert g("q1") * g("p") - g("q1") in P.relations
        assert g("q2") * (1 - g("p")) - g("q2") in P.relations

    @pytest.mark.parametrize("level, count", [(1, 2), (2, 8), (3, 128)])
    def test_raw_and_reduced_have_the_same_classical_points(self, level, count):
        """Both forms describe the same level-preserving automorphisms."""
        raw = classical_solutions(cantor_level_presentation(level))
        reduced = classical_solutions(cantor_level_presentation(level, CantorForm.REDUCED))

        assert len(raw) == count
        assert [s.perm for s in raw] == [s.perm for s in reduced]

    def test_level_zero(self):
        """The tower starts at level 1."""
        with pytest.raises(ValueError):
            cantor_level_presentation(0)


class TestCantorReconstruction:
    def test_affine_images(self):
        """Raw generators are affine in the reduced ones."""
        reduced, images = cantor_reconstruction(2)
        g = reduced.universe.gen

        assert images["a[1,1]"] == g("p")
        assert images["a[2,1]"] == 1 - g("p")
        assert images["a[12,12]"] == g("q1")
        assert images["a[11,12]"] == g("p") - g("q1")

    def test_raw_relations_hold_in_the_reduced_form(self):
        """Every raw relation maps into the ideal of the reduced relations."""
        reduced, images = cantor_reconstruction(2)
        raw = cantor_level_presentation(2)

        for relation in raw.relations:
            image = substitute(relation, images, reduced.universe)
            assert reduce(image, reduced.relations, max(image.degree(), 2), closure=True).is_zero, str(relation)


class TestCantorLimitPresentation:
    @pytest.mark.parametrize("depth, count", [(1, 5), (2, 21)])
    def test_generator_counts(self, depth, count):
        """p plus 4^k generators at each depth k."""
        assert len(cantor_limit_presentation(depth).universe) == count

    def test_subordination(self):
        """p1 <= p and p3 <= 1 - p."""
        P = cantor_limit_presentation(1)
        g = P.universe.gen

        assert g("p1") * g("p") - g("p1") in P.relations
        assert g("p3") * (1 - g("p")) - g("p3") in P.relations
        assert g("p") * g("p") - g("p") in P.relations

    def test_depth_zero(self):
        """Depth starts at 1."""
        with pytest.raises(ValueError, match="at least 1"):
            cantor_limit_presentation(0)
